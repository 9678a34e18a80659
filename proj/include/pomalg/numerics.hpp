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

#include <vector>

#include "pomalg/errors.hpp"
#include "pomalg/types.hpp"

namespace pomalg {

struct EigResult {
    RealVector values;     ///< ascending
    ComplexMatrix vectors; ///< orthonormal columns, phase-canonical
};

/// Fixes the global phase of a vector so that its largest-magnitude
/// component is real and positive. No-op on the zero vector.
void canonicalize_phase(ComplexVector &v);

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector phases canonical, output deterministic for identical input.
EigResult eig_hermitian(const ComplexMatrix &m, const Tolerance &tol = {});

/// Support pseudo-inverse of a PSD matrix: eigenvalues at or below
/// eps_rank * lambda_max map to zero, the rest to their reciprocal.
ComplexMatrix pinv_psd(const ComplexMatrix &m, const Tolerance &tol = {});

/// Realises abstract vectors from a Gram matrix: returns n vectors of
/// dimension rank(G) whose pairwise inner products (conjugate-linear in
/// the first argument) reproduce G. Eigenvalues in [-eps_pos, 0] are
/// clamped to zero; anything lower is rejected.
std::vector<ComplexVector> gram_embed(const ComplexMatrix &gram,
                                      const Tolerance &tol = {});

} // namespace pomalg
