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

#include "pomalg/pom.hpp"

namespace pomalg {

/// The outcome space of a maximal POM: one orthonormal coordinate per
/// element, with the POM kets providing the mapping to and from the
/// physical space. The coordinate order is the POM element order.
class ExtendedSpace {
  public:
    explicit ExtendedSpace(MaximalPom pom, const Tolerance &tol = {});

    Index source_dim() const { return pom_.dim; }
    Index outcome_count() const { return pom_.size(); }
    const MaximalPom &pom() const { return pom_; }
    /// dim x N matrix of POM kets (columns).
    const ComplexMatrix &ket_matrix() const { return kets_; }
    const RealVector &outcomes() const { return outcomes_; }

    /// |psi) with component <a|psi> at coordinate a; unit norm.
    ComplexVector extend_state(const State &psi) const;

    /// The diagonal operator of outcomes, statistically equivalent to the
    /// POM on extended states.
    ComplexMatrix hat_operator() const;

    /// Projector onto the physical sector: entries <a|a'>. Idempotent with
    /// rank equal to the source dimension.
    ComplexMatrix e_projector() const;

    /// Natural extension of a Hermitian operator: entries <a|X|a'>.
    /// Products and operator-on-state actions are preserved on the
    /// physical sector.
    ComplexMatrix extend_hermitian(const ComplexMatrix &x,
                                   const Tolerance &tol = {}) const;

    /// Inverse mapping: |k> = sum_a (a|k) |a>. Sends any orthonormal basis
    /// of the outcome space to a complete set of kets on the source space.
    ComplexVector project_back(const ComplexVector &k) const;

  private:
    MaximalPom pom_;
    ComplexMatrix kets_;
    RealVector outcomes_;
};

} // namespace pomalg
