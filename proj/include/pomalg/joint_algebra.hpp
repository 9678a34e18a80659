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

#include "pomalg/hermitian_algebra.hpp"
#include "pomalg/joint.hpp"
#include "pomalg/op_expr.hpp"

namespace pomalg {

struct UncertaintyReport {
    double delta_a = 0.0;
    double delta_b = 0.0;
    double bound = 0.0;
    Complex commutator_expectation{0.0, 0.0};
    bool satisfied = false;
};

/// g(A, B) for two maximal POMs: g of the two hat operators on the joint
/// space, diagonalised, every eigenvector mapped back through the A
/// coordinates (the B route is evaluated as a consistency check).
/// Slots: `a`, `b`.
CombinedPom combine(const JointSpace &js, const OpExpr &g,
                    const Tolerance &tol = {});
CombinedPom combine(const MaximalPom &a, const MaximalPom &b, const OpExpr &g,
                    const Tolerance &tol = {});

/// Expectation of g(A, B) through the joint-space sandwich, no
/// diagonalisation. g may be non-Hermitian here (e.g. an operator product),
/// in which case the value is complex and no POM is implied.
Complex expect_joint(const JointSpace &js, const OpExpr &g, const State &psi,
                     const Tolerance &tol = {});
Complex expect_joint(const MaximalPom &a, const MaximalPom &b, const OpExpr &g,
                     const State &psi, const Tolerance &tol = {});

/// Expectation of i[A, B], evaluated both through the closed form on the
/// physical space (restrictions of the mean operators through C0^+) and
/// through the joint space; the routes are checked against each other.
Complex commutator_expect(const JointSpace &js, const State &psi,
                          const Tolerance &tol = {});
Complex commutator_expect(const MaximalPom &a, const MaximalPom &b,
                          const State &psi, const Tolerance &tol = {});

/// The generalised uncertainty relation: Delta A * Delta B against half the
/// commutator-expectation modulus.
UncertaintyReport uncertainty(const JointSpace &js, const State &psi,
                              const Tolerance &tol = {});
UncertaintyReport uncertainty(const MaximalPom &a, const MaximalPom &b,
                              const State &psi, const Tolerance &tol = {});

/// Extension of a Hermitian operator to the joint space; both per-observable
/// coordinate extensions are computed and must agree.
ComplexMatrix extend_hermitian_joint(const JointSpace &js,
                                     const ComplexMatrix &x,
                                     const Tolerance &tol = {});

/// Expectation of a chained combination of the two POMs with any number of
/// Hermitian observables. Slots: `a`, `b`, `x1` ... `xn`.
Complex expect_chain(const JointSpace &js,
                     const std::vector<ComplexMatrix> &herms, const OpExpr &g,
                     const State &psi, const Tolerance &tol = {});
Complex expect_chain(const MaximalPom &a, const MaximalPom &b,
                     const std::vector<ComplexMatrix> &herms, const OpExpr &g,
                     const State &psi, const Tolerance &tol = {});

} // namespace pomalg
