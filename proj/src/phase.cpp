// Copyright 2026 The pomalg developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pomalg/phase.hpp"

#include <cmath>
#include <numbers>

#include "pomalg/joint_algebra.hpp"

namespace pomalg {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexVector phase_ket(Index d, Index m_bins, double phi) {
    ComplexVector ket(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m_bins));
    for (Index n = 0; n < d; ++n) {
        ket[n] = scale * std::polar(1.0, static_cast<double>(n) * phi);
    }
    return ket;
}

void require_unit(const FockState &psi, const char *where) {
    if (std::abs(psi.amplitudes.norm() - 1.0) > 1e-9) {
        throw ValidationError(std::string(where) +
                              ": state is not normalised");
    }
}

} // namespace

FockState vacuum_state(Index dim) { return fock_state(0, dim); }

FockState fock_state(Index n, Index dim) {
    if (dim < 1 || n < 0 || n >= dim) {
        throw ShapeError("fock_state: need 0 <= n < dim");
    }
    FockState psi;
    psi.amplitudes = ComplexVector::Zero(dim);
    psi.amplitudes[n] = 1.0;
    return psi;
}

FockState coherent_state_with_dim(Complex alpha, Index dim) {
    if (dim < 1) {
        throw ShapeError("coherent_state: dim must be positive");
    }
    const double nbar = std::norm(alpha);
    const double log_r = nbar > 0.0 ? 0.5 * std::log(nbar) : 0.0;
    const double theta = std::arg(alpha);
    ComplexVector amps(dim);
    double mass = 0.0;
    for (Index n = 0; n < dim; ++n) {
        const double log_mag = -0.5 * nbar + static_cast<double>(n) * log_r -
                               0.5 * std::lgamma(static_cast<double>(n) + 1.0);
        const double mag = (nbar == 0.0 && n > 0) ? 0.0 : std::exp(log_mag);
        amps[n] = std::polar(mag, static_cast<double>(n) * theta);
        mass += mag * mag;
    }
    FockState psi;
    psi.truncation_tail = std::max(0.0, 1.0 - mass);
    psi.amplitudes = amps / std::sqrt(mass);
    return psi;
}

FockState coherent_state(Complex alpha, double tail_bound) {
    const double nbar = std::norm(alpha);
    // mean + wide Gaussian margin, then grow until the tail is small enough
    Index dim = static_cast<Index>(nbar + 12.0 * std::sqrt(nbar + 1.0)) + 8;
    for (;;) {
        FockState psi = coherent_state_with_dim(alpha, dim);
        if (psi.truncation_tail < tail_bound || dim > (1 << 16)) {
            return psi;
        }
        dim *= 2;
    }
}

MaximalPom canonical_phase_pom(Index d, Index m_bins) {
    if (d < 1) {
        throw ShapeError("canonical_phase_pom: dimension must be positive");
    }
    if (m_bins < d) {
        throw AliasError("canonical_phase_pom: need M >= d bins, got M = " +
                         std::to_string(m_bins) + " for d = " +
                         std::to_string(d));
    }
    MaximalPom pom;
    pom.dim = d;
    for (Index j = 1; j <= m_bins; ++j) {
        const double phi =
            -kPi + 2.0 * kPi * static_cast<double>(j) /
                       static_cast<double>(m_bins);
        pom.elements.push_back({phi, phase_ket(d, m_bins, phi)});
    }
    return pom;
}

GeneralPom number_pom(Index d) {
    if (d < 1) {
        throw ShapeError("number_pom: dimension must be positive");
    }
    GeneralPom pom;
    pom.dim = d;
    for (Index n = 0; n < d; ++n) {
        ComplexMatrix op = ComplexMatrix::Zero(d, d);
        op(n, n) = 1.0;
        pom.elements.push_back({static_cast<double>(n), op});
    }
    return pom;
}

MaximalPom number_pom_maximal(Index d) {
    if (d < 1) {
        throw ShapeError("number_pom_maximal: dimension must be positive");
    }
    MaximalPom pom;
    pom.dim = d;
    for (Index n = 0; n < d; ++n) {
        ComplexVector ket = ComplexVector::Zero(d);
        ket[n] = 1.0;
        pom.elements.push_back({static_cast<double>(n), ket});
    }
    return pom;
}

ComplexMatrix phase_shift_op(Index d) {
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (Index n = 0; n + 1 < d; ++n) {
        s(n, n + 1) = 1.0;
    }
    return s;
}

double heterodyne_coefficient(Index n) {
    const double z = static_cast<double>(n);
    return std::exp(std::lgamma(z + 1.5) - std::lgamma(z + 1.0) -
                    0.5 * std::log(z + 1.0));
}

ComplexMatrix heterodyne_exp_op(Index d) {
    if (d < 2) {
        throw ShapeError("heterodyne_exp_op: dimension must be at least 2");
    }
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    for (Index n = 0; n + 1 < d; ++n) {
        h(n + 1, n) = heterodyne_coefficient(n);
    }
    return h;
}

double number_phase_bound(const FockState &psi, Index m_bins) {
    require_unit(psi, "number_phase_bound");
    const Index d = psi.dim();
    if (m_bins < d) {
        throw AliasError("number_phase_bound: need M >= d bins");
    }
    const ComplexVector pi_bin = phase_ket(d, m_bins, kPi);
    const double bin_prob = std::norm(pi_bin.dot(psi.amplitudes));
    const double density =
        bin_prob * static_cast<double>(m_bins) / (2.0 * kPi);
    return 0.5 * std::abs(1.0 - 2.0 * kPi * density);
}

double number_phase_bound_algebraic(const JointSpace &js, const FockState &psi,
                                    const Tolerance &tol) {
    return 0.5 * std::abs(commutator_expect(js, psi.to_state(), tol));
}

double number_phase_bound_algebraic(const FockState &psi, Index m_bins,
                                    const Tolerance &tol) {
    require_unit(psi, "number_phase_bound_algebraic");
    const Index d = psi.dim();
    const JointSpace js = build_joint_space(
        number_pom_maximal(d), canonical_phase_pom(d, m_bins), tol);
    return number_phase_bound_algebraic(js, psi, tol);
}

double circular_deviation(const FockState &psi, const Tolerance &tol) {
    require_unit(psi, "circular_deviation");
    const Index d = psi.dim();
    double series = 0.0;
    for (Index n = 0; n < d; ++n) {
        series += std::norm(psi.amplitudes[n]) * heterodyne_coefficient(n);
    }
    const double direct = 1.0 - series;

    // product of the two mean operators, on a one-larger truncation so the
    // top diagonal entry of the product is not lost
    ComplexVector padded = ComplexVector::Zero(d + 1);
    padded.head(d) = psi.amplitudes;
    const ComplexMatrix product =
        phase_shift_op(d + 1) * heterodyne_exp_op(d + 1);
    const double via_operators = 1.0 - std::abs(padded.dot(product * padded));

    if (std::abs(direct - via_operators) > tol.eps_eq) {
        throw NumericsError(
            "circular_deviation: series and operator routes differ by " +
            std::to_string(std::abs(direct - via_operators)));
    }
    return direct;
}

double delta_asymptote(const FockState &psi) {
    require_unit(psi, "delta_asymptote");
    double sum = 0.0;
    for (Index n = 0; n < psi.dim(); ++n) {
        sum += std::norm(psi.amplitudes[n]) /
               (8.0 * (static_cast<double>(n) + 1.0));
    }
    return sum;
}

} // namespace pomalg
