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

#include "pomalg/naimark.hpp"

namespace pomalg {

ExtendedSpace::ExtendedSpace(MaximalPom pom, const Tolerance &tol)
    : pom_(std::move(pom)) {
    kets_ = pom_.ket_matrix();
    outcomes_ = pom_.outcomes();
    const double defect =
        (kets_ * kets_.adjoint() -
         ComplexMatrix::Identity(pom_.dim, pom_.dim))
            .norm();
    if (defect > tol.eps_eq) {
        throw ValidationError(
            "ExtendedSpace: POM completeness defect " +
            std::to_string(defect) + " exceeds eps_eq");
    }
}

ComplexVector ExtendedSpace::extend_state(const State &psi) const {
    if (psi.dim() != source_dim()) {
        throw ShapeError("extend_state: dimension mismatch");
    }
    return kets_.adjoint() * psi.ket;
}

ComplexMatrix ExtendedSpace::hat_operator() const {
    return outcomes_.cast<Complex>().asDiagonal();
}

ComplexMatrix ExtendedSpace::e_projector() const {
    return kets_.adjoint() * kets_;
}

ComplexMatrix ExtendedSpace::extend_hermitian(const ComplexMatrix &x,
                                              const Tolerance &tol) const {
    if (x.rows() != source_dim() || x.cols() != source_dim()) {
        throw ShapeError("extend_hermitian: operator shape mismatch");
    }
    if (!is_hermitian(x, tol.eps_eq)) {
        throw HermiticityError("extend_hermitian: operator is not Hermitian");
    }
    return kets_.adjoint() * x * kets_;
}

ComplexVector ExtendedSpace::project_back(const ComplexVector &k) const {
    if (k.size() != outcome_count()) {
        throw ShapeError("project_back: vector dimension mismatch");
    }
    return kets_ * k;
}

} // namespace pomalg
