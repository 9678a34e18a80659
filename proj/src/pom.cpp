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

#include "pomalg/pom.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "pomalg/numerics.hpp"

namespace pomalg {

namespace {

void check_dims(Index pom_dim, const State &psi, const char *where) {
    if (pom_dim != psi.dim()) {
        throw ShapeError(std::string(where) + ": state dimension " +
                         std::to_string(psi.dim()) +
                         " does not match POM dimension " +
                         std::to_string(pom_dim));
    }
}

/// Least-squares proportionality scale for A ~ lambda * B; returns the
/// scale and whether the fit is within tolerance.
bool proportional(const ComplexMatrix &a, const ComplexMatrix &b, double eps,
                  double &scale) {
    const double bb = (b.adjoint() * b).trace().real();
    if (bb <= 0.0) {
        return false;
    }
    scale = (b.adjoint() * a).trace().real() / bb;
    const double residual = (a - scale * b).norm();
    return residual <= eps * std::max(a.norm(), b.norm());
}

double min_eigenvalue(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        ComplexMatrix(0.5 * (m + m.adjoint())), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

} // namespace

GeneralPom MaximalPom::to_general() const {
    GeneralPom out;
    out.dim = dim;
    out.elements.reserve(elements.size());
    for (const auto &e : elements) {
        out.elements.push_back({e.outcome, e.ket * e.ket.adjoint()});
    }
    return out;
}

ComplexMatrix MaximalPom::ket_matrix() const {
    ComplexMatrix t(dim, size());
    for (Index j = 0; j < size(); ++j) {
        t.col(j) = elements[static_cast<std::size_t>(j)].ket;
    }
    return t;
}

RealVector MaximalPom::outcomes() const {
    RealVector a(size());
    for (Index j = 0; j < size(); ++j) {
        a[j] = elements[static_cast<std::size_t>(j)].outcome;
    }
    return a;
}

State::State(ComplexVector k, const Tolerance &tol) : ket(std::move(k)) {
    if (ket.size() == 0) {
        throw ValidationError("State: empty vector");
    }
    if (!ket.allFinite()) {
        throw ValidationError("State: non-finite amplitude");
    }
    if (std::abs(ket.norm() - 1.0) > tol.eps_eq) {
        throw ValidationError("State: norm " + std::to_string(ket.norm()) +
                              " is not 1 within eps_eq");
    }
}

State State::normalized(ComplexVector k) {
    const double n = k.norm();
    if (n == 0.0) {
        throw ValidationError("State::normalized: zero vector");
    }
    return State(ComplexVector(k / n));
}

ValidationReport validate(const GeneralPom &pom, const Tolerance &tol) {
    ValidationReport report;
    ComplexMatrix total = ComplexMatrix::Zero(pom.dim, pom.dim);
    for (const auto &e : pom.elements) {
        if (e.op.rows() != pom.dim || e.op.cols() != pom.dim) {
            throw ShapeError("validate: element shape does not match dim");
        }
        if (!std::isfinite(e.outcome)) {
            throw ShapeError("validate: non-finite outcome label");
        }
        report.hermiticity_defects.push_back(hermiticity_defect(e.op));
        report.min_eigenvalues.push_back(min_eigenvalue(e.op));
        total += e.op;
    }
    report.completeness_defect =
        (total - ComplexMatrix::Identity(pom.dim, pom.dim)).norm();

    const auto n = pom.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double scale = 0.0;
            if (pom.elements[i].op.norm() > 0.0 &&
                pom.elements[j].op.norm() > 0.0 &&
                proportional(pom.elements[i].op, pom.elements[j].op,
                             tol.eps_eq, scale) &&
                scale > 0.0) {
                report.redundancy_pairs.push_back({i, j, scale});
            }
        }
    }

    report.positivity_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (report.min_eigenvalues[i] < -tol.eps_pos ||
            report.hermiticity_defects[i] >
                eq_slack(tol.eps_eq, pom.elements[i].op.norm())) {
            report.positivity_ok = false;
        }
    }
    report.completeness_ok = report.completeness_defect <= tol.eps_eq;
    report.pass = report.positivity_ok && report.completeness_ok;
    return report;
}

ValidationReport validate(const MaximalPom &pom, const Tolerance &tol) {
    return validate(pom.to_general(), tol);
}

RealVector probabilities(const GeneralPom &pom, const State &psi) {
    check_dims(pom.dim, psi, "probabilities");
    RealVector p(pom.size());
    for (Index i = 0; i < pom.size(); ++i) {
        p[i] = (psi.ket.adjoint() *
                pom.elements[static_cast<std::size_t>(i)].op * psi.ket)(0)
                   .real();
    }
    return p;
}

RealVector probabilities(const MaximalPom &pom, const State &psi) {
    check_dims(pom.dim, psi, "probabilities");
    RealVector p(pom.size());
    for (Index i = 0; i < pom.size(); ++i) {
        p[i] = std::norm(
            pom.elements[static_cast<std::size_t>(i)].ket.dot(psi.ket));
    }
    return p;
}

ReduceResult reduce_nonredundant(const GeneralPom &pom, const Tolerance &tol) {
    const auto n = pom.elements.size();
    std::vector<bool> used(n, false);
    ReduceResult result;
    result.pom.dim = pom.dim;

    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) {
            continue;
        }
        // numerically zero elements carry no statistics
        if (pom.elements[i].op.norm() <= tol.eps_pos) {
            used[i] = true;
            continue;
        }
        std::vector<std::size_t> group{i};
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) {
                continue;
            }
            double scale = 0.0;
            if (pom.elements[i].op.norm() > 0.0 &&
                pom.elements[j].op.norm() > 0.0 &&
                proportional(pom.elements[j].op, pom.elements[i].op,
                             tol.eps_eq, scale) &&
                scale > 0.0) {
                group.push_back(j);
                used[j] = true;
            }
        }
        used[i] = true;

        ComplexMatrix merged = ComplexMatrix::Zero(pom.dim, pom.dim);
        double best_trace = -1.0;
        double outcome = pom.elements[i].outcome;
        bool mixed_outcomes = false;
        std::vector<double> outcomes;
        for (std::size_t k : group) {
            merged += pom.elements[k].op;
            outcomes.push_back(pom.elements[k].outcome);
            if (pom.elements[k].outcome != outcomes.front()) {
                mixed_outcomes = true;
            }
            const double tr = pom.elements[k].op.trace().real();
            if (tr > best_trace + tol.eps_eq ||
                (std::abs(tr - best_trace) <= tol.eps_eq &&
                 pom.elements[k].outcome < outcome)) {
                best_trace = std::max(tr, best_trace);
                outcome = pom.elements[k].outcome;
            }
        }
        result.pom.elements.push_back({outcome, merged});
        if (group.size() > 1 && mixed_outcomes) {
            result.warnings.push_back({group, outcomes, outcome});
        }
    }
    return result;
}

MaximalPom maximal_extension(const GeneralPom &pom, const Tolerance &tol) {
    MaximalPom out;
    out.dim = pom.dim;
    for (const auto &e : pom.elements) {
        const EigResult eig = eig_hermitian(e.op, tol);
        const double lambda_max = eig.values.size() ? eig.values.maxCoeff() : 0.0;
        if (eig.values.size() && eig.values.minCoeff() < -tol.eps_pos) {
            throw PositivityError(
                "maximal_extension: element has eigenvalue " +
                std::to_string(eig.values.minCoeff()) + " below -eps_pos");
        }
        const double cutoff = tol.eps_rank * std::max(lambda_max, 0.0);
        for (Index k = 0; k < eig.values.size(); ++k) {
            if (eig.values[k] > cutoff && eig.values[k] > 0.0) {
                out.elements.push_back(
                    {e.outcome, ComplexVector(std::sqrt(eig.values[k]) *
                                              eig.vectors.col(k))});
            }
        }
    }
    return out;
}

ComplexMatrix mean_operator(const GeneralPom &pom,
                            const std::function<double(double)> &f) {
    ComplexMatrix m = ComplexMatrix::Zero(pom.dim, pom.dim);
    for (const auto &e : pom.elements) {
        const double fa = f(e.outcome);
        if (!std::isfinite(fa)) {
            throw DomainError("mean_operator: f(" + std::to_string(e.outcome) +
                              ") is not finite");
        }
        m += fa * e.op;
    }
    return m;
}

double expect_f(const GeneralPom &pom, const std::function<double(double)> &f,
                const State &psi, const Tolerance &tol) {
    check_dims(pom.dim, psi, "expect_f");
    const RealVector p = probabilities(pom, psi);
    double via_distribution = 0.0;
    for (Index i = 0; i < pom.size(); ++i) {
        const double fa = f(pom.elements[static_cast<std::size_t>(i)].outcome);
        if (!std::isfinite(fa)) {
            throw DomainError("expect_f: non-finite f(a)");
        }
        via_distribution += fa * p[i];
    }
    const double via_operator =
        (psi.ket.adjoint() * mean_operator(pom, f) * psi.ket)(0).real();
    if (std::abs(via_distribution - via_operator) >
        eq_slack(tol.eps_eq, std::abs(via_distribution))) {
        throw NumericsError("expect_f: distribution route " +
                            std::to_string(via_distribution) +
                            " disagrees with mean-operator route " +
                            std::to_string(via_operator));
    }
    return via_distribution;
}

double variance(const GeneralPom &pom, const State &psi,
                const Tolerance &tol) {
    const double m1 = expect_f(
        pom, [](double a) { return a; }, psi, tol);
    const double m2 = expect_f(
        pom, [](double a) { return a * a; }, psi, tol);
    return m2 - m1 * m1;
}

double variance(const MaximalPom &pom, const State &psi,
                const Tolerance &tol) {
    check_dims(pom.dim, psi, "variance");
    (void)tol;
    const RealVector p = probabilities(pom, psi);
    double m1 = 0.0;
    double m2 = 0.0;
    for (Index i = 0; i < pom.size(); ++i) {
        const double a = pom.elements[static_cast<std::size_t>(i)].outcome;
        m1 += a * p[i];
        m2 += a * a * p[i];
    }
    return m2 - m1 * m1;
}

std::vector<double> sample(const GeneralPom &pom, const State &psi,
                           std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw ShapeError("sample: n must be at least 1");
    }
    RealVector p = probabilities(pom, psi).cwiseMax(0.0);
    const double total = p.sum();
    std::mt19937_64 rng(seed);
    std::vector<double> outcomes;
    outcomes.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        // 53-bit uniform in [0,1); inverse-CDF walk keeps the draw sequence
        // independent of the standard library's distribution internals
        const double u =
            static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        double acc = 0.0;
        Index pick = pom.size() - 1;
        for (Index i = 0; i < pom.size(); ++i) {
            acc += p[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        outcomes.push_back(
            pom.elements[static_cast<std::size_t>(pick)].outcome);
    }
    return outcomes;
}

} // namespace pomalg
