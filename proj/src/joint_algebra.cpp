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

#include "pomalg/joint_algebra.hpp"

#include <array>
#include <cmath>

#include "pomalg/numerics.hpp"

namespace pomalg {

namespace {

double pom_stddev(const ComplexMatrix &kets, const RealVector &outcomes,
                  const State &psi) {
    double m1 = 0.0;
    double m2 = 0.0;
    for (Index i = 0; i < kets.cols(); ++i) {
        const double p = std::norm(kets.col(i).dot(psi.ket));
        m1 += outcomes[i] * p;
        m2 += outcomes[i] * outcomes[i] * p;
    }
    return std::sqrt(std::max(m2 - m1 * m1, 0.0));
}

} // namespace

CombinedPom combine(const JointSpace &js, const OpExpr &g,
                    const Tolerance &tol) {
    if (!g.hermitian_preserving()) {
        throw HermiticityError("combine: expression \"" + g.text() +
                               "\" is not Hermiticity-preserving");
    }
    const std::array<ComplexMatrix, 2> operands{js.a_hat, js.b_hat};
    const EigResult eig = eig_hermitian(g.eval(operands), tol);

    const Index n = eig.values.size();
    std::vector<ComplexVector> kets(static_cast<std::size_t>(n));
    double max_sq = 0.0;
    for (Index i = 0; i < n; ++i) {
        const ComplexVector via_a =
            project_back_joint(js, eig.vectors.col(i), Route::A);
        const ComplexVector via_b =
            project_back_joint(js, eig.vectors.col(i), Route::B);
        if ((via_a - via_b).norm() > eq_slack(tol.eps_eq, via_a.norm())) {
            throw RouteMismatchError(
                "combine: A-route and B-route back-projections differ by " +
                std::to_string((via_a - via_b).norm()));
        }
        kets[static_cast<std::size_t>(i)] = via_a;
        max_sq = std::max(max_sq, via_a.squaredNorm());
    }

    MaximalPom pom;
    pom.dim = js.dim_h;
    for (Index i = 0; i < n; ++i) {
        auto &k = kets[static_cast<std::size_t>(i)];
        if (k.squaredNorm() > tol.eps_rank * max_sq) {
            pom.elements.push_back({eig.values[i], std::move(k)});
        }
    }
    const ComplexMatrix t = pom.ket_matrix();
    const double defect =
        (t * t.adjoint() - ComplexMatrix::Identity(pom.dim, pom.dim)).norm();
    if (defect > tol.eps_eq) {
        throw NumericsError("combine: completeness defect " +
                            std::to_string(defect));
    }
    return {std::move(pom), g.text()};
}

CombinedPom combine(const MaximalPom &a, const MaximalPom &b, const OpExpr &g,
                    const Tolerance &tol) {
    return combine(build_joint_space(a, b, tol), g, tol);
}

Complex expect_joint(const JointSpace &js, const OpExpr &g, const State &psi,
                     const Tolerance &tol) {
    const ComplexVector psi_j = extend_state_joint(js, psi, Route::A);
    const std::array<ComplexMatrix, 2> operands{js.a_hat, js.b_hat};
    (void)tol;
    return psi_j.dot(g.eval(operands) * psi_j);
}

Complex expect_joint(const MaximalPom &a, const MaximalPom &b, const OpExpr &g,
                     const State &psi, const Tolerance &tol) {
    return expect_joint(build_joint_space(a, b, tol), g, psi, tol);
}

Complex commutator_expect(const JointSpace &js, const State &psi,
                          const Tolerance &tol) {
    if (psi.dim() != js.dim_h) {
        throw ShapeError("commutator_expect: state dimension mismatch");
    }
    // closed form on the physical space
    const Index nc = static_cast<Index>(js.dec.common.size());
    const Index na = static_cast<Index>(js.dec.only_a.size());
    const Index nb = static_cast<Index>(js.dec.only_b.size());
    ComplexMatrix a_restricted = ComplexMatrix::Zero(js.dim_h, js.dim_h);
    for (Index j = 0; j < na; ++j) {
        const auto &e = js.dec.only_a[static_cast<std::size_t>(j)];
        a_restricted += e.outcome * (e.ket * e.ket.adjoint());
    }
    ComplexMatrix b_restricted = ComplexMatrix::Zero(js.dim_h, js.dim_h);
    for (Index k = 0; k < nb; ++k) {
        const auto &e = js.dec.only_b[static_cast<std::size_t>(k)];
        b_restricted += e.outcome * (e.ket * e.ket.adjoint());
    }
    const ComplexMatrix ab = a_restricted * js.dec.c0_pinv * b_restricted;
    const Complex closed =
        Complex(0.0, 1.0) * (psi.ket.dot((ab - ab.adjoint()) * psi.ket));

    // joint-space route, matrix-vector only
    const ComplexVector psi_j = extend_state_joint(js, psi, Route::A);
    const ComplexVector a_psi = js.a_hat * psi_j;
    const ComplexVector b_psi = js.b_hat * psi_j;
    const Complex via_joint =
        Complex(0.0, 1.0) * (psi_j.dot(js.a_hat * b_psi) -
                             psi_j.dot(js.b_hat * a_psi));

    if (std::abs(closed - via_joint) > eq_slack(tol.eps_eq, std::abs(closed))) {
        throw NumericsError(
            "commutator_expect: closed form disagrees with joint route by " +
            std::to_string(std::abs(closed - via_joint)));
    }
    (void)nc;
    return closed;
}

Complex commutator_expect(const MaximalPom &a, const MaximalPom &b,
                          const State &psi, const Tolerance &tol) {
    return commutator_expect(build_joint_space(a, b, tol), psi, tol);
}

UncertaintyReport uncertainty(const JointSpace &js, const State &psi,
                              const Tolerance &tol) {
    UncertaintyReport report;
    report.delta_a = pom_stddev(js.a_kets, js.a_outcomes, psi);
    report.delta_b = pom_stddev(js.b_kets, js.b_outcomes, psi);
    report.commutator_expectation = commutator_expect(js, psi, tol);
    report.bound = 0.5 * std::abs(report.commutator_expectation);
    report.satisfied =
        report.delta_a * report.delta_b >= report.bound - tol.eps_eq;
    return report;
}

UncertaintyReport uncertainty(const MaximalPom &a, const MaximalPom &b,
                              const State &psi, const Tolerance &tol) {
    return uncertainty(build_joint_space(a, b, tol), psi, tol);
}

ComplexMatrix extend_hermitian_joint(const JointSpace &js,
                                     const ComplexMatrix &x,
                                     const Tolerance &tol) {
    if (x.rows() != js.dim_h || x.cols() != js.dim_h) {
        throw ShapeError("extend_hermitian_joint: operator shape mismatch");
    }
    if (!is_hermitian(x, tol.eps_eq)) {
        throw HermiticityError(
            "extend_hermitian_joint: operator is not Hermitian");
    }
    const ComplexMatrix via_a = js.a_vectors *
                                (js.a_kets.adjoint() * x * js.a_kets) *
                                js.a_vectors.adjoint();
    const ComplexMatrix via_b = js.b_vectors *
                                (js.b_kets.adjoint() * x * js.b_kets) *
                                js.b_vectors.adjoint();
    if ((via_a - via_b).norm() > eq_slack(tol.eps_eq, via_a.norm())) {
        throw RouteMismatchError(
            "extend_hermitian_joint: A and B coordinate extensions differ "
            "by " +
            std::to_string((via_a - via_b).norm()));
    }
    return via_a;
}

Complex expect_chain(const JointSpace &js,
                     const std::vector<ComplexMatrix> &herms, const OpExpr &g,
                     const State &psi, const Tolerance &tol) {
    std::vector<ComplexMatrix> operands;
    operands.reserve(herms.size() + 2);
    operands.push_back(js.a_hat);
    operands.push_back(js.b_hat);
    for (const auto &x : herms) {
        operands.push_back(extend_hermitian_joint(js, x, tol));
    }
    const ComplexVector psi_j = extend_state_joint(js, psi, Route::A);
    return psi_j.dot(g.eval(operands) * psi_j);
}

Complex expect_chain(const MaximalPom &a, const MaximalPom &b,
                     const std::vector<ComplexMatrix> &herms, const OpExpr &g,
                     const State &psi, const Tolerance &tol) {
    return expect_chain(build_joint_space(a, b, tol), herms, g, psi, tol);
}

} // namespace pomalg
