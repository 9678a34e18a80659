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

#include "pomalg/joint.hpp"

#include <cmath>

#include "pomalg/numerics.hpp"

namespace pomalg {

namespace {

ComplexMatrix projector(const ComplexVector &ket) {
    return ket * ket.adjoint();
}

void require_nonredundant(const MaximalPom &pom, const Tolerance &tol,
                          const char *label) {
    for (Index i = 0; i < pom.size(); ++i) {
        const auto &ki = pom.elements[static_cast<std::size_t>(i)].ket;
        if (ki.squaredNorm() == 0.0) {
            throw RedundancyError(std::string("common_elements: POM ") +
                                  label + " has a zero element");
        }
        for (Index j = i + 1; j < pom.size(); ++j) {
            const auto &kj = pom.elements[static_cast<std::size_t>(j)].ket;
            // proportional kets <=> normalised projectors within eps_match
            // in Frobenius distance: ||P-Q||^2 = 2(1 - |<p|q>|^2)
            const double overlap = std::norm(ki.dot(kj));
            const double bound = ki.squaredNorm() * kj.squaredNorm();
            if (overlap >=
                bound * (1.0 - 0.5 * tol.eps_match * tol.eps_match)) {
                throw RedundancyError(
                    std::string("common_elements: POM ") + label +
                    " is redundant (elements " + std::to_string(i) + ", " +
                    std::to_string(j) + " proportional)");
            }
        }
    }
}

} // namespace

CommonDecomposition common_elements(const MaximalPom &a, const MaximalPom &b,
                                    const Tolerance &tol) {
    if (a.dim != b.dim) {
        throw ShapeError("common_elements: POM dimensions differ");
    }
    require_nonredundant(a, tol, "A");
    require_nonredundant(b, tol, "B");

    CommonDecomposition dec;
    dec.dim = a.dim;

    std::vector<Index> match_of_a(static_cast<std::size_t>(a.size()), -1);
    std::vector<bool> b_taken(static_cast<std::size_t>(b.size()), false);
    for (Index i = 0; i < a.size(); ++i) {
        const ComplexMatrix pa =
            projector(a.elements[static_cast<std::size_t>(i)].ket);
        Index found = -1;
        for (Index j = 0; j < b.size(); ++j) {
            const ComplexMatrix pb =
                projector(b.elements[static_cast<std::size_t>(j)].ket);
            const double dist = (pa - pb).norm();
            if (dist <= tol.eps_match) {
                if (found >= 0) {
                    throw MatchError(
                        "common_elements: element " + std::to_string(i) +
                        " of A matches more than one element of B");
                }
                if (b_taken[static_cast<std::size_t>(j)]) {
                    throw MatchError(
                        "common_elements: element " + std::to_string(j) +
                        " of B matched twice");
                }
                found = j;
            } else if (dist <= 10.0 * tol.eps_match) {
                dec.warnings.push_back(
                    "near-miss match: A[" + std::to_string(i) + "] vs B[" +
                    std::to_string(j) + "], projector distance " +
                    std::to_string(dist));
            }
        }
        match_of_a[static_cast<std::size_t>(i)] = found;
        if (found >= 0) {
            b_taken[static_cast<std::size_t>(found)] = true;
        }
    }

    ComplexMatrix common_sum = ComplexMatrix::Zero(a.dim, a.dim);
    for (Index i = 0; i < a.size(); ++i) {
        const auto &ea = a.elements[static_cast<std::size_t>(i)];
        const Index j = match_of_a[static_cast<std::size_t>(i)];
        if (j >= 0) {
            ComplexVector ket = ea.ket;
            canonicalize_phase(ket);
            dec.common.push_back(
                {ea.outcome, b.elements[static_cast<std::size_t>(j)].outcome,
                 ket});
            common_sum += projector(ket);
        } else {
            dec.only_a.push_back(ea);
        }
    }
    for (Index j = 0; j < b.size(); ++j) {
        if (!b_taken[static_cast<std::size_t>(j)]) {
            dec.only_b.push_back(b.elements[static_cast<std::size_t>(j)]);
        }
    }

    dec.c0 = ComplexMatrix::Identity(a.dim, a.dim) - common_sum;
    {
        // both remainders must resolve C0 (fails only on invalid input)
        ComplexMatrix sum_a = ComplexMatrix::Zero(a.dim, a.dim);
        for (const auto &e : dec.only_a) {
            sum_a += projector(e.ket);
        }
        ComplexMatrix sum_b = ComplexMatrix::Zero(a.dim, a.dim);
        for (const auto &e : dec.only_b) {
            sum_b += projector(e.ket);
        }
        if ((sum_a - dec.c0).norm() > eq_slack(tol.eps_eq, dec.c0.norm()) ||
            (sum_b - dec.c0).norm() > eq_slack(tol.eps_eq, dec.c0.norm())) {
            throw ValidationError(
                "common_elements: remainders do not resolve C0; input POMs "
                "are not complete");
        }
    }
    dec.c0_pinv = pinv_psd(dec.c0, tol);
    return dec;
}

ComplexMatrix cross_gram(const CommonDecomposition &dec) {
    const Index na = static_cast<Index>(dec.only_a.size());
    const Index nb = static_cast<Index>(dec.only_b.size());
    ComplexMatrix g(na, nb);
    for (Index i = 0; i < na; ++i) {
        const ComplexVector lhs =
            dec.c0_pinv * dec.only_a[static_cast<std::size_t>(i)].ket;
        for (Index j = 0; j < nb; ++j) {
            g(i, j) = lhs.dot(dec.only_b[static_cast<std::size_t>(j)].ket);
        }
    }
    return g;
}

MaximalPom JointSpace::pom(Route route) const {
    const ComplexMatrix &kets = route == Route::A ? a_kets : b_kets;
    const RealVector &outs = route == Route::A ? a_outcomes : b_outcomes;
    MaximalPom out;
    out.dim = dim_h;
    for (Index i = 0; i < kets.cols(); ++i) {
        out.elements.push_back({outs[i], kets.col(i)});
    }
    return out;
}

JointSpace build_joint_space(const MaximalPom &a, const MaximalPom &b,
                             const Tolerance &tol) {
    JointSpace js;
    js.dec = common_elements(a, b, tol);
    js.dim_h = a.dim;
    js.cross = cross_gram(js.dec);

    const Index nc = static_cast<Index>(js.dec.common.size());
    const Index na = static_cast<Index>(js.dec.only_a.size());
    const Index nb = static_cast<Index>(js.dec.only_b.size());

    ComplexMatrix joint_gram(na + nb, na + nb);
    joint_gram.topLeftCorner(na, na) = ComplexMatrix::Identity(na, na);
    joint_gram.bottomRightCorner(nb, nb) = ComplexMatrix::Identity(nb, nb);
    joint_gram.topRightCorner(na, nb) = js.cross;
    joint_gram.bottomLeftCorner(nb, na) = js.cross.adjoint();

    const std::vector<ComplexVector> embedded = gram_embed(joint_gram, tol);
    const Index rank = embedded.empty() ? 0 : embedded.front().size();
    js.joint_dim = nc + rank;

    ComplexMatrix w(rank, na + nb);
    for (Index i = 0; i < na + nb; ++i) {
        w.col(i) = embedded[static_cast<std::size_t>(i)];
    }
    {
        const double defect = (w.adjoint() * w - joint_gram).norm();
        if (defect > eq_slack(tol.eps_eq, joint_gram.norm())) {
            throw NumericsError(
                "build_joint_space: Gram embedding defect " +
                std::to_string(defect));
        }
    }

    js.a_vectors = ComplexMatrix::Zero(js.joint_dim, nc + na);
    js.b_vectors = ComplexMatrix::Zero(js.joint_dim, nc + nb);
    for (Index i = 0; i < nc; ++i) {
        js.a_vectors(i, i) = 1.0;
        js.b_vectors(i, i) = 1.0;
    }
    for (Index j = 0; j < na; ++j) {
        js.a_vectors.col(nc + j).tail(rank) = w.col(j);
    }
    for (Index k = 0; k < nb; ++k) {
        js.b_vectors.col(nc + k).tail(rank) = w.col(na + k);
    }

    js.a_kets = ComplexMatrix(js.dim_h, nc + na);
    js.b_kets = ComplexMatrix(js.dim_h, nc + nb);
    js.a_outcomes = RealVector(nc + na);
    js.b_outcomes = RealVector(nc + nb);
    for (Index i = 0; i < nc; ++i) {
        const auto &c = js.dec.common[static_cast<std::size_t>(i)];
        js.a_kets.col(i) = c.ket;
        js.b_kets.col(i) = c.ket;
        js.a_outcomes[i] = c.outcome_a;
        js.b_outcomes[i] = c.outcome_b;
    }
    for (Index j = 0; j < na; ++j) {
        const auto &e = js.dec.only_a[static_cast<std::size_t>(j)];
        js.a_kets.col(nc + j) = e.ket;
        js.a_outcomes[nc + j] = e.outcome;
    }
    for (Index k = 0; k < nb; ++k) {
        const auto &e = js.dec.only_b[static_cast<std::size_t>(k)];
        js.b_kets.col(nc + k) = e.ket;
        js.b_outcomes[nc + k] = e.outcome;
    }

    js.a_hat = js.a_vectors * js.a_outcomes.cast<Complex>().asDiagonal() *
               js.a_vectors.adjoint();
    js.b_hat = js.b_vectors * js.b_outcomes.cast<Complex>().asDiagonal() *
               js.b_vectors.adjoint();
    js.e_physical = js.a_vectors * (js.a_kets.adjoint() * js.a_kets) *
                    js.a_vectors.adjoint();
    return js;
}

ComplexVector extend_state_joint(const JointSpace &js, const State &psi,
                                 Route route) {
    if (psi.dim() != js.dim_h) {
        throw ShapeError("extend_state_joint: state dimension mismatch");
    }
    const ComplexMatrix &kets = route == Route::A ? js.a_kets : js.b_kets;
    const ComplexMatrix &vectors =
        route == Route::A ? js.a_vectors : js.b_vectors;
    return vectors * (kets.adjoint() * psi.ket);
}

ComplexVector project_back_joint(const JointSpace &js, const ComplexVector &k,
                                 Route route) {
    if (k.size() != js.joint_dim) {
        throw ShapeError("project_back_joint: vector dimension mismatch");
    }
    const ComplexMatrix &kets = route == Route::A ? js.a_kets : js.b_kets;
    const ComplexMatrix &vectors =
        route == Route::A ? js.a_vectors : js.b_vectors;
    return kets * (vectors.adjoint() * k);
}

} // namespace pomalg
