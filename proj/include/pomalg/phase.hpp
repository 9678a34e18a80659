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

#include "pomalg/joint.hpp"
#include "pomalg/pom.hpp"

namespace pomalg {

/// A photon-number-basis state truncated at dimension d. For generated
/// states, truncation_tail records the probability mass discarded before
/// renormalisation.
struct FockState {
    ComplexVector amplitudes;
    double truncation_tail = 0.0;

    Index dim() const { return amplitudes.size(); }
    State to_state() const { return State(amplitudes); }
};

FockState vacuum_state(Index dim);
FockState fock_state(Index n, Index dim);

/// Coherent state of complex amplitude alpha; the truncation is grown until
/// the discarded tail mass is below tail_bound.
FockState coherent_state(Complex alpha, double tail_bound = 1e-12);
FockState coherent_state_with_dim(Complex alpha, Index dim);

/// Discretised canonical phase POM on a d-dimensional number basis:
/// M kets M^{-1/2} sum_n e^{i n phi_j} |n>, phi_j = -pi + 2 pi j / M for
/// j = 1..M, so the last bin sits exactly at pi. Complete exactly when
/// M >= d.
MaximalPom canonical_phase_pom(Index d, Index m_bins);

/// The projective photon-number POM {|n><n| @ n}.
GeneralPom number_pom(Index d);
/// Its maximal (rank-1) form, kets |n> with outcome n.
MaximalPom number_pom_maximal(Index d);

/// Mean operator of e^{i Phi} for the exact canonical phase: the lowering
/// shift sum_n |n><n+1| on a d-dimensional truncation.
ComplexMatrix phase_shift_op(Index d);

/// Heterodyne coefficient c_n = Gamma(n + 3/2) / (n! sqrt(n + 1)),
/// computed through log-Gamma differences.
double heterodyne_coefficient(Index n);

/// Mean operator of e^{-i Phi_H} for the heterodyne phase: the raising
/// matrix with subdiagonal entries c_n, truncated at dimension d.
ComplexMatrix heterodyne_exp_op(Index d);

/// Number-phase uncertainty bound |1 - 2 pi p(pi)| / 2, with the phase
/// density at pi estimated from the bin at phi = pi of the M-point grid
/// (density convention: bin probability times M / (2 pi)).
double number_phase_bound(const FockState &psi, Index m_bins);

/// The same bound through the algebraic machinery: half the modulus of the
/// commutator expectation of the number and discretised-phase observables.
/// Converges to the closed form as the grid is refined.
double number_phase_bound_algebraic(const FockState &psi, Index m_bins,
                                    const Tolerance &tol = {});
/// Variant reusing a prebuilt joint space of the two observables.
double number_phase_bound_algebraic(const JointSpace &js, const FockState &psi,
                                    const Tolerance &tol = {});

/// Circular deviation between canonical and heterodyne phase,
/// 1 - |<e^{i Phi} e^{-i Phi_H}>| = 1 - sum_n |psi_n|^2 c_n; evaluated both
/// as the series and through the mean-operator product, checked against
/// each other.
double circular_deviation(const FockState &psi, const Tolerance &tol = {});

/// First-order large-energy estimate <(N+1)^{-1}>/8 of the circular
/// deviation.
double delta_asymptote(const FockState &psi);

} // namespace pomalg
