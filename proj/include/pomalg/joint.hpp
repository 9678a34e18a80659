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
#include <vector>

#include "pomalg/pom.hpp"

namespace pomalg {

/// A POM element shared by both observables, with the outcome it carries
/// in each. The representative ket is taken from A, phase-canonicalised.
struct CommonElement {
    double outcome_a = 0.0;
    double outcome_b = 0.0;
    ComplexVector ket;
};

/// Splits two maximal POMs into their common elements and the remainders.
/// C0 = 1 - sum of common projectors is what both remainders resolve.
struct CommonDecomposition {
    Index dim = 0;
    std::vector<CommonElement> common;
    std::vector<MaximalElement> only_a;
    std::vector<MaximalElement> only_b;
    ComplexMatrix c0;
    ComplexMatrix c0_pinv;
    std::vector<std::string> warnings; ///< near-miss projector matches
};

/// Matches elements whose projectors coincide within eps_match
/// (one-to-one; ambiguity is an error, guaranteed absent for non-redundant
/// input). Inputs must be non-redundant.
CommonDecomposition common_elements(const MaximalPom &a, const MaximalPom &b,
                                    const Tolerance &tol = {});

/// Inner products between the two remainder coordinate sets:
/// G(i,j) = <a_i| C0^+ |b_j>.
ComplexMatrix cross_gram(const CommonDecomposition &dec);

enum class Route { A, B };

/// The joint extension space of two maximal POMs. Coordinates: an
/// orthonormal block for the common elements, then an embedding of the two
/// remainder coordinate sets realised from the Gram matrix
/// [[1, G], [G^+, 1]]. Column order in the per-observable data is common
/// elements first, remainders after, each preserving input order.
struct JointSpace {
    Index dim_h = 0;
    Index joint_dim = 0;
    CommonDecomposition dec;
    ComplexMatrix cross; ///< G

    ComplexMatrix a_vectors; ///< joint_dim x Na, orthonormal columns
    ComplexMatrix b_vectors; ///< joint_dim x Nb, orthonormal columns
    ComplexMatrix a_kets;    ///< dim_h x Na
    ComplexMatrix b_kets;    ///< dim_h x Nb
    RealVector a_outcomes;
    RealVector b_outcomes;

    ComplexMatrix a_hat;
    ComplexMatrix b_hat;
    ComplexMatrix e_physical; ///< projector onto extended physical states

    MaximalPom pom(Route route) const;
};

JointSpace build_joint_space(const MaximalPom &a, const MaximalPom &b,
                             const Tolerance &tol = {});

/// Extension of a state into the joint space through either observable's
/// coordinates; the two routes agree.
ComplexVector extend_state_joint(const JointSpace &js, const State &psi,
                                 Route route);

/// Back-projection of a joint-space vector onto the physical space through
/// either observable's kets.
ComplexVector project_back_joint(const JointSpace &js, const ComplexVector &k,
                                 Route route);

} // namespace pomalg
