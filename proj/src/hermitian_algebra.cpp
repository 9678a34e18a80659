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

#include "pomalg/hermitian_algebra.hpp"

#include <array>
#include <cmath>

#include "pomalg/numerics.hpp"

namespace pomalg {

namespace {

void require_preserving(const OpExpr &g, const char *where) {
    if (!g.hermitian_preserving()) {
        throw HermiticityError(std::string(where) +
                               ": expression \"" + g.text() +
                               "\" is not Hermiticity-preserving");
    }
}

/// Drops back-projected kets that vanished (eigenvectors living in the
/// unphysical sector); the cutoff is relative to the largest ket norm.
MaximalPom back_project_eigensystem(const ExtendedSpace &space,
                                    const EigResult &eig,
                                    const Tolerance &tol) {
    const Index n = eig.values.size();
    std::vector<ComplexVector> kets(static_cast<std::size_t>(n));
    double max_sq = 0.0;
    for (Index i = 0; i < n; ++i) {
        kets[static_cast<std::size_t>(i)] =
            space.project_back(eig.vectors.col(i));
        max_sq = std::max(max_sq,
                          kets[static_cast<std::size_t>(i)].squaredNorm());
    }
    MaximalPom out;
    out.dim = space.source_dim();
    for (Index i = 0; i < n; ++i) {
        auto &k = kets[static_cast<std::size_t>(i)];
        if (k.squaredNorm() > tol.eps_rank * max_sq) {
            out.elements.push_back({eig.values[i], std::move(k)});
        }
    }
    const ComplexMatrix t = out.ket_matrix();
    const double defect =
        (t * t.adjoint() - ComplexMatrix::Identity(out.dim, out.dim)).norm();
    if (defect > tol.eps_eq) {
        throw NumericsError(
            "combined POM completeness defect " + std::to_string(defect));
    }
    return out;
}

} // namespace

CombinedPom combine_with_hermitian(const MaximalPom &a, const ComplexMatrix &x,
                                   const OpExpr &g, const Tolerance &tol) {
    require_preserving(g, "combine_with_hermitian");
    const ExtendedSpace space(a, tol);
    const std::array<ComplexMatrix, 2> operands{
        space.hat_operator(), space.extend_hermitian(x, tol)};
    const ComplexMatrix k_hat = g.eval(operands);
    const EigResult eig = eig_hermitian(k_hat, tol);
    return {back_project_eigensystem(space, eig, tol), g.text()};
}

double expect_g(const MaximalPom &a, const ComplexMatrix &x, const OpExpr &g,
                const State &psi, const Tolerance &tol) {
    require_preserving(g, "expect_g");
    const ExtendedSpace space(a, tol);
    const std::array<ComplexMatrix, 2> operands{
        space.hat_operator(), space.extend_hermitian(x, tol)};
    const ComplexVector psi_a = space.extend_state(psi);
    const Complex value = psi_a.dot(g.eval(operands) * psi_a);
    return value.real();
}

double deviation(const MaximalPom &a, const ComplexMatrix &x, const State &psi,
                 const Tolerance &tol) {
    if (x.rows() != a.dim || x.cols() != a.dim) {
        throw ShapeError("deviation: operator shape mismatch");
    }
    if (!is_hermitian(x, tol.eps_eq)) {
        throw HermiticityError("deviation: X is not Hermitian");
    }
    if (psi.dim() != a.dim) {
        throw ShapeError("deviation: state dimension mismatch");
    }
    const ComplexMatrix t = a.ket_matrix();
    const RealVector outcomes = a.outcomes();
    const ComplexMatrix mean = t * outcomes.cast<Complex>().asDiagonal() *
                               t.adjoint();
    const ComplexMatrix mean_sq =
        t * outcomes.array().square().matrix().cast<Complex>().asDiagonal() *
        t.adjoint();

    const ComplexMatrix shifted = x - mean;
    const double closed_form =
        (psi.ket.adjoint() * (shifted * shifted + mean_sq - mean * mean) *
         psi.ket)(0)
            .real();

    const ComplexVector x_psi = x * psi.ket;
    double per_outcome = 0.0;
    for (Index j = 0; j < a.size(); ++j) {
        const auto &e = a.elements[static_cast<std::size_t>(j)];
        per_outcome += std::norm(e.ket.dot(x_psi) -
                                 e.outcome * e.ket.dot(psi.ket));
    }
    if (std::abs(closed_form - per_outcome) >
        eq_slack(tol.eps_eq, std::abs(closed_form))) {
        throw NumericsError("deviation: closed form " +
                            std::to_string(closed_form) +
                            " disagrees with per-outcome sum " +
                            std::to_string(per_outcome));
    }
    return closed_form;
}

double distance(const MaximalPom &a, const ComplexMatrix &x,
                const Tolerance &tol) {
    if (x.rows() != a.dim || x.cols() != a.dim) {
        throw ShapeError("distance: operator shape mismatch");
    }
    if (!is_hermitian(x, tol.eps_eq)) {
        throw HermiticityError("distance: X is not Hermitian");
    }
    const ExtendedSpace space(a, tol);
    const ComplexMatrix diff =
        space.hat_operator() - space.extend_hermitian(x, tol);
    // trace over the physical sector of the outcome space
    const double on_extension =
        (diff * diff * space.e_projector()).trace().real();

    const ComplexMatrix t = a.ket_matrix();
    const RealVector outcomes = a.outcomes();
    const ComplexMatrix mean = t * outcomes.cast<Complex>().asDiagonal() *
                               t.adjoint();
    const ComplexMatrix mean_sq =
        t * outcomes.array().square().matrix().cast<Complex>().asDiagonal() *
        t.adjoint();
    const ComplexMatrix shifted = x - mean;
    const double on_source =
        (shifted * shifted + mean_sq - mean * mean).trace().real();

    if (std::abs(on_extension - on_source) >
        eq_slack(tol.eps_eq, std::abs(on_extension))) {
        throw NumericsError("distance: extension-space trace " +
                            std::to_string(on_extension) +
                            " disagrees with source-space trace " +
                            std::to_string(on_source));
    }
    return std::sqrt(std::max(on_extension, 0.0));
}

std::pair<double, ComplexMatrix> min_distance(const MaximalPom &a,
                                              const Tolerance &tol) {
    (void)tol;
    const ComplexMatrix t = a.ket_matrix();
    const RealVector outcomes = a.outcomes();
    const ComplexMatrix mean =
        t * outcomes.cast<Complex>().asDiagonal() * t.adjoint();
    const ComplexMatrix mean_sq =
        t * outcomes.array().square().matrix().cast<Complex>().asDiagonal() *
        t.adjoint();
    // difference before trace: the two terms cancel entrywise for
    // projective POMs
    const double fuzziness_sq = (mean_sq - mean * mean).trace().real();
    return {std::sqrt(std::max(fuzziness_sq, 0.0)), mean};
}

} // namespace pomalg
