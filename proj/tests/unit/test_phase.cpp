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

#include <doctest.h>

#include <numbers>

#include "generators.hpp"
#include "pomalg/phase.hpp"

using namespace pomalg;

namespace {

constexpr double kPi = std::numbers::pi;

/// Independent route to the heterodyne coefficients: the recurrence
/// c_n = c_{n-1} (n + 1/2) / n * sqrt(n / (n+1)) seeded by sqrt(pi)/2.
double coefficient_by_recurrence(Index n) {
    double c = std::sqrt(kPi) / 2.0;
    for (Index k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        c *= (kd + 0.5) / kd * std::sqrt(kd / (kd + 1.0));
    }
    return c;
}

} // namespace

TEST_CASE("canonical phase POM: completeness and grid conventions") {
    // d = 2, M = 2: kets (|0> +- |1>)/sqrt(2), a projective pair
    const MaximalPom two = canonical_phase_pom(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two.elements[0].outcome == doctest::Approx(0.0));
    CHECK(two.elements[1].outcome == doctest::Approx(kPi));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(two.elements[0].ket[0] - Complex(s)) <= 1e-14);
    CHECK(std::abs(two.elements[0].ket[1] - Complex(s)) <= 1e-14);
    CHECK(std::abs(two.elements[1].ket[1] + Complex(s)) <= 1e-14);

    // exact completeness for M >= d
    for (const auto &[d, m] : std::vector<std::pair<Index, Index>>{
             {2, 2}, {3, 5}, {8, 8}, {32, 256}}) {
        const MaximalPom pom = canonical_phase_pom(d, m);
        const ComplexMatrix t = pom.ket_matrix();
        CHECK((t * t.adjoint() - ComplexMatrix::Identity(d, d)).norm() <=
              1e-12);
        // angles in (-pi, pi], last bin exactly at pi
        CHECK(pom.elements.back().outcome == doctest::Approx(kPi));
        for (const auto &e : pom.elements) {
            CHECK(e.outcome > -kPi - 1e-12);
            CHECK(e.outcome <= kPi + 1e-12);
        }
    }

    CHECK_THROWS_AS(canonical_phase_pom(4, 3), AliasError);

    // d = 1: M identical weight-1/M kets, redundant by construction
    const MaximalPom degenerate = canonical_phase_pom(1, 4);
    const auto report = validate(degenerate);
    CHECK(report.pass);
    CHECK_FALSE(report.redundancy_pairs.empty());
}

TEST_CASE("number POM basics") {
    const GeneralPom n2 = number_pom(2);
    CHECK(validate(n2).pass);
    CHECK(n2.elements[0].outcome == 0.0);
    CHECK(n2.elements[1].outcome == 1.0);

    const FockState one = fock_state(1, 2);
    CHECK(variance(n2, one.to_state()) == doctest::Approx(0.0));
    ComplexVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(variance(n2, State(plus)) == doctest::Approx(0.25));

    const MaximalPom nm = number_pom_maximal(3);
    CHECK(validate(nm).pass);
}

TEST_CASE("heterodyne coefficients against the recurrence oracle") {
    CHECK(heterodyne_coefficient(0) ==
          doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-12));
    CHECK(heterodyne_coefficient(0) ==
          doctest::Approx(0.886226925452758).epsilon(1e-12));
    CHECK(heterodyne_coefficient(1) ==
          doctest::Approx(0.939985602986625).epsilon(1e-12));

    for (Index n = 0; n <= 60; ++n) {
        const double c = heterodyne_coefficient(n);
        CHECK(c == doctest::Approx(coefficient_by_recurrence(n))
                       .epsilon(1e-12));
        CHECK(c > 0.0);
        CHECK(c < 1.0);
        if (n > 0) {
            CHECK(c > heterodyne_coefficient(n - 1)); // monotone to 1
        }
    }

    // Stirling asymptote: relative gap to 1 - 1/(8(n+1)) shrinks
    double previous_gap = 1.0;
    for (Index n : {10, 100, 1000}) {
        const double estimate = 1.0 - 1.0 / (8.0 * (static_cast<double>(n) + 1));
        const double gap = std::abs(heterodyne_coefficient(n) - estimate) /
                           (1.0 - heterodyne_coefficient(n));
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
    CHECK(previous_gap < 1e-2);
}

TEST_CASE("heterodyne operator layout") {
    const ComplexMatrix h = heterodyne_exp_op(4);
    for (Index n = 0; n + 1 < 4; ++n) {
        CHECK(std::abs(h(n + 1, n).real() - heterodyne_coefficient(n)) <=
              1e-14);
    }
    CHECK(h.cwiseAbs().sum() ==
          doctest::Approx(heterodyne_coefficient(0) +
                          heterodyne_coefficient(1) +
                          heterodyne_coefficient(2)));
    CHECK_THROWS_AS(heterodyne_exp_op(1), ShapeError);
}

TEST_CASE("number-phase bound: Fock states make it vanish") {
    for (Index n : {0, 1, 5, 20}) {
        const FockState psi = fock_state(n, 32);
        CHECK(number_phase_bound(psi, 64) <= 1e-12);
    }

    // (|0> + |1>)/sqrt(2): the pi-bin density vanishes, bound = 1/2
    FockState plus;
    plus.amplitudes = ComplexVector(2);
    plus.amplitudes << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(number_phase_bound(plus, 16) == doctest::Approx(0.5));

    CHECK_THROWS_AS(number_phase_bound(fock_state(0, 8), 4), AliasError);
}

TEST_CASE("number-phase bound: algebraic route converges to the closed form") {
    testing::Rng rng(3);
    const Index d = 8;
    ComplexVector raw = testing::random_complex_vector(d, rng);
    FockState psi;
    psi.amplitudes = raw / raw.norm();

    const double closed = number_phase_bound(psi, 64);
    double previous_error = 1e9;
    for (Index m : {16, 64, 256}) {
        const double algebraic = number_phase_bound_algebraic(psi, m);
        const double error = std::abs(algebraic - closed);
        CHECK(error < previous_error);
        previous_error = error;
    }
    CHECK(previous_error < 1e-2);
}

TEST_CASE("circular deviation: frozen values and Fock structure") {
    const FockState vac = vacuum_state(1);
    CHECK(circular_deviation(vac) ==
          doctest::Approx(1.0 - std::sqrt(kPi) / 2.0).epsilon(1e-12));
    CHECK(circular_deviation(vac) ==
          doctest::Approx(0.113773074547242).epsilon(1e-9));

    double previous = 1.0;
    for (Index n : {0, 1, 2, 5, 10, 25}) {
        const FockState psi = fock_state(n, n + 1);
        const double delta = circular_deviation(psi);
        CHECK(delta ==
              doctest::Approx(1.0 - heterodyne_coefficient(n)).epsilon(1e-12));
        CHECK(delta > 0.0);
        CHECK(delta < previous); // strictly decreasing in n
        previous = delta;
    }
}

TEST_CASE("coherent states: truncation control and the asymptote") {
    const FockState alpha2 = coherent_state(Complex(2.0, 0.0));
    CHECK(alpha2.truncation_tail < 1e-12);
    CHECK(alpha2.amplitudes.norm() == doctest::Approx(1.0));
    // Poisson photon statistics: mean |alpha|^2
    double mean = 0.0;
    for (Index n = 0; n < alpha2.dim(); ++n) {
        mean += static_cast<double>(n) * std::norm(alpha2.amplitudes[n]);
    }
    CHECK(mean == doctest::Approx(4.0).epsilon(1e-9));

    // complex amplitude only rotates the phases, not the distribution
    const FockState rotated = coherent_state(Complex(0.0, 2.0));
    for (Index n = 0; n < std::min(alpha2.dim(), rotated.dim()); ++n) {
        CHECK(std::abs(std::norm(rotated.amplitudes[n]) -
                       std::norm(alpha2.amplitudes[n])) <= 1e-12);
    }

    CHECK(delta_asymptote(vacuum_state(1)) == doctest::Approx(0.125));
    CHECK(delta_asymptote(fock_state(3, 4)) == doctest::Approx(1.0 / 32.0));

    // ratio delta / asymptote approaches 1 from below along coherent states
    double previous_ratio = 0.0;
    for (double nbar : {4.0, 16.0, 64.0}) {
        const FockState psi = coherent_state(std::sqrt(nbar));
        const double ratio = circular_deviation(psi) / delta_asymptote(psi);
        CHECK(ratio > 0.8);
        CHECK(ratio < 1.2);
        CHECK(ratio > previous_ratio);
        previous_ratio = ratio;
    }
    CHECK(std::abs(previous_ratio - 1.0) < 0.1);
}
