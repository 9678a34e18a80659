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

#include <cstdint>
#include <functional>
#include <vector>

#include "pomalg/errors.hpp"
#include "pomalg/types.hpp"

namespace pomalg {

/// One element of a probability operator measure: a positive operator
/// labelled with a real outcome.
struct PomElement {
    double outcome = 0.0;
    ComplexMatrix op;
};

/// A generalised observable: positive operators {A_a} summing to the
/// identity, with real outcome labels.
struct GeneralPom {
    Index dim = 0;
    std::vector<PomElement> elements;

    Index size() const { return static_cast<Index>(elements.size()); }
};

/// One rank-1 element, stored as the unnormalised ket carrying its weight:
/// the element operator is |a><a|.
struct MaximalElement {
    double outcome = 0.0;
    ComplexVector ket;
};

/// A maximal POM: every element is rank 1. Kets need be neither orthogonal
/// nor normalised.
struct MaximalPom {
    Index dim = 0;
    std::vector<MaximalElement> elements;

    Index size() const { return static_cast<Index>(elements.size()); }
    GeneralPom to_general() const;
    /// dim x size matrix whose columns are the kets.
    ComplexMatrix ket_matrix() const;
    RealVector outcomes() const;
};

/// A pure state; unit norm enforced on construction.
struct State {
    ComplexVector ket;

    State() = default;
    explicit State(ComplexVector k, const Tolerance &tol = {});
    /// Normalises the vector first, then constructs.
    static State normalized(ComplexVector k);

    Index dim() const { return ket.size(); }
};

struct RedundancyPair {
    std::size_t first = 0;
    std::size_t second = 0;
    double scale = 0.0; ///< A_first ~ scale * A_second
};

struct ValidationReport {
    std::vector<double> min_eigenvalues;
    std::vector<double> hermiticity_defects;
    double completeness_defect = 0.0;
    std::vector<RedundancyPair> redundancy_pairs;
    bool positivity_ok = false;
    bool completeness_ok = false;
    /// Positivity and completeness within tolerance. Redundancy is reported
    /// but does not fail validation.
    bool pass = false;
};

ValidationReport validate(const GeneralPom &pom, const Tolerance &tol = {});
ValidationReport validate(const MaximalPom &pom, const Tolerance &tol = {});

RealVector probabilities(const GeneralPom &pom, const State &psi);
RealVector probabilities(const MaximalPom &pom, const State &psi);

/// A group of proportional elements that was merged and carried differing
/// outcome labels; the statistics of the reduced observable differ from the
/// original in that case.
struct MergeNote {
    std::vector<std::size_t> merged_indices;
    std::vector<double> outcomes;
    double chosen_outcome = 0.0;
};

struct ReduceResult {
    GeneralPom pom;
    std::vector<MergeNote> warnings;
};

/// Merges proportional elements. The merged outcome comes from the group
/// member with the largest trace (ties: smallest outcome); element order is
/// first occurrence.
ReduceResult reduce_nonredundant(const GeneralPom &pom,
                                 const Tolerance &tol = {});

/// Decomposes every element into rank(A_a) back-to-back kets sqrt(l_i) v_i
/// via its eigendecomposition, inheriting the outcome label.
MaximalPom maximal_extension(const GeneralPom &pom, const Tolerance &tol = {});

/// The mean operator of f over the measure: sum_a f(a) A_a.
ComplexMatrix mean_operator(const GeneralPom &pom,
                            const std::function<double(double)> &f);

/// Expectation of f of the outcome, computed both through the outcome
/// distribution and through the mean operator; the two routes are checked
/// against each other.
double expect_f(const GeneralPom &pom, const std::function<double(double)> &f,
                const State &psi, const Tolerance &tol = {});

double variance(const GeneralPom &pom, const State &psi,
                const Tolerance &tol = {});
double variance(const MaximalPom &pom, const State &psi,
                const Tolerance &tol = {});

/// n i.i.d. outcome draws from p(a|psi), reproducible for a given seed.
std::vector<double> sample(const GeneralPom &pom, const State &psi,
                           std::size_t n, std::uint64_t seed);

} // namespace pomalg
