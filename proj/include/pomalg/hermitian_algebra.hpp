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

#pragma once

#include <string>
#include <utility>

#include "pomalg/naimark.hpp"
#include "pomalg/op_expr.hpp"
#include "pomalg/pom.hpp"

namespace pomalg {

/// The POM observable produced by an algebraic combination: rank-1 elements
/// whose outcomes are the eigenvalues of the combined operator on the
/// extension space, with provenance.
struct CombinedPom {
    MaximalPom pom;
    std::string expression;
};

/// g(A, X) for a maximal POM A and Hermitian X: builds g of the hat
/// operator and the extended X on the outcome space, diagonalises, and maps
/// every eigenvector back. Slots: `a`, `x`.
CombinedPom combine_with_hermitian(const MaximalPom &a, const ComplexMatrix &x,
                                   const OpExpr &g, const Tolerance &tol = {});

/// Expectation of g(A, X) without diagonalisation, via the extension-space
/// sandwich. g must be Hermiticity-preserving.
double expect_g(const MaximalPom &a, const ComplexMatrix &x, const OpExpr &g,
                const State &psi, const Tolerance &tol = {});

/// Statistical deviation <(X - A)^2>. Both closed forms are evaluated and
/// checked against each other.
double deviation(const MaximalPom &a, const ComplexMatrix &x, const State &psi,
                 const Tolerance &tol = {});

/// Distance between a POM and a Hermitian operator, the Hilbert-Schmidt
/// metric of their extensions on the physical sector. Both trace forms are
/// evaluated and checked against each other.
double distance(const MaximalPom &a, const ComplexMatrix &x,
                const Tolerance &tol = {});

/// The closest Hermitian operator (the mean operator) and its distance,
/// a measure of the inherent fuzziness of the POM; zero exactly when the
/// POM is projective.
std::pair<double, ComplexMatrix> min_distance(const MaximalPom &a,
                                              const Tolerance &tol = {});

} // namespace pomalg
