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

#include "generators.hpp"
#include "pomalg/joint_algebra.hpp"
#include "pomalg/numerics.hpp"

using namespace pomalg;

namespace {

const std::vector<std::string> kSlots{"a", "b"};

double first_moment(const CombinedPom &k, const State &psi) {
    const RealVector p = probabilities(k.pom, psi);
    double total = 0.0;
    for (Index i = 0; i < k.pom.size(); ++i) {
        total +=
            k.pom.elements[static_cast<std::size_t>(i)].outcome * p[i];
    }
    return total;
}

} // namespace

TEST_CASE("A - A is the zero observable") {
    testing::Rng rng(3);
    const OpExpr diff = OpExpr::parse("a - b", kSlots);
    for (int trial = 0; trial < 10; ++trial) {
        const Index dim = 2 + static_cast<Index>(rng() % 3);
        const Index count = dim + static_cast<Index>(rng() % 4);
        const MaximalPom a = testing::random_maximal_pom(dim, count, rng);
        const CombinedPom zero = combine(a, a, diff);

        const State psi = testing::random_state(dim, rng);
        const RealVector p = probabilities(zero.pom, psi);
        double mass_at_zero = 0.0;
        for (Index i = 0; i < zero.pom.size(); ++i) {
            if (std::abs(
                    zero.pom.elements[static_cast<std::size_t>(i)].outcome) <=
                1e-9) {
                mass_at_zero += p[i];
            }
        }
        CHECK(mass_at_zero >= 1.0 - 1e-9);
        CHECK(std::abs(expect_joint(a, a, diff, psi)) <= 1e-9);
    }
}

TEST_CASE("projective pair: combine matches the spectral POM (sigma_z + sigma_x)") {
    const OpExpr sum = OpExpr::parse("a + b", kSlots);
    const CombinedPom combined =
        combine(testing::pauli_z_pom(), testing::pauli_x_pom(), sum);
    REQUIRE(combined.pom.size() == 2);
    RealVector outcomes = combined.pom.outcomes();
    std::sort(outcomes.begin(), outcomes.end());
    CHECK(outcomes[0] == doctest::Approx(-std::sqrt(2.0)));
    CHECK(outcomes[1] == doctest::Approx(std::sqrt(2.0)));

    // distribution against the spectral decomposition of sigma_z + sigma_x
    testing::Rng rng(5);
    const EigResult spectral = eig_hermitian(
        ComplexMatrix(testing::pauli('z') + testing::pauli('x')));
    for (int trial = 0; trial < 20; ++trial) {
        const State psi = testing::random_state(2, rng);
        const RealVector p = probabilities(combined.pom, psi);
        for (Index i = 0; i < 2; ++i) {
            const double outcome =
                combined.pom.elements[static_cast<std::size_t>(i)].outcome;
            double expected = 0.0;
            for (Index j = 0; j < 2; ++j) {
                if (std::abs(spectral.values[j] - outcome) < 1e-9) {
                    expected +=
                        std::norm(spectral.vectors.col(j).dot(psi.ket));
                }
            }
            CHECK(p[i] == doctest::Approx(expected).epsilon(1e-8));
        }
    }
}

TEST_CASE("combine moment transport on a trine / projective pair") {
    testing::Rng rng(7);
    const MaximalPom trine = testing::trine_pom();
    const MaximalPom z = testing::pauli_z_pom();
    const OpExpr sym = OpExpr::parse("sym(a, b)", kSlots);
    const JointSpace js = build_joint_space(trine, z);
    const CombinedPom combined = combine(js, sym);

    const ComplexMatrix k_hat = sym.eval(
        std::array<ComplexMatrix, 2>{js.a_hat, js.b_hat});
    for (int trial = 0; trial < 25; ++trial) {
        const State psi = testing::random_state(2, rng);
        const ComplexVector ext = extend_state_joint(js, psi, Route::A);
        const double m1 = ext.dot(k_hat * ext).real();
        const double m2 = ext.dot(k_hat * (k_hat * ext)).real();
        const RealVector p = probabilities(combined.pom, psi);
        double s1 = 0.0;
        double s2 = 0.0;
        for (Index i = 0; i < combined.pom.size(); ++i) {
            const double k =
                combined.pom.elements[static_cast<std::size_t>(i)].outcome;
            s1 += k * p[i];
            s2 += k * k * p[i];
        }
        CHECK(s1 == doctest::Approx(m1).epsilon(1e-9));
        CHECK(s2 == doctest::Approx(m2).epsilon(1e-9));
    }
}

TEST_CASE("expect_joint: slots, shortcuts, non-Hermitian products") {
    testing::Rng rng(11);
    const MaximalPom trine = testing::trine_pom();
    const MaximalPom z = testing::pauli_z_pom();
    const OpExpr only_a = OpExpr::parse("a", kSlots);

    for (int trial = 0; trial < 15; ++trial) {
        const State psi = testing::random_state(2, rng);
        const RealVector p = probabilities(trine, psi);
        double m1 = 0.0;
        for (Index i = 0; i < 3; ++i) {
            m1 += trine.elements[static_cast<std::size_t>(i)].outcome * p[i];
        }
        CHECK(expect_joint(trine, z, only_a, psi).real() ==
              doctest::Approx(m1).epsilon(1e-9));
        CHECK(std::abs(expect_joint(trine, z, only_a, psi).imag()) <= 1e-10);
    }

    // shortcut equals first moment of the explicit combination
    const OpExpr sym = OpExpr::parse("sym(a, b)", kSlots);
    const JointSpace js = build_joint_space(trine, z);
    const CombinedPom combined = combine(js, sym);
    for (int trial = 0; trial < 15; ++trial) {
        const State psi = testing::random_state(2, rng);
        CHECK(expect_joint(js, sym, psi).real() ==
              doctest::Approx(first_moment(combined, psi)).epsilon(1e-9));
    }

    // disjoint projective POMs, product expression: <AB> = <A_bar B_bar>
    const MaximalPom zp = testing::pauli_z_pom();
    const MaximalPom xp = testing::pauli_x_pom();
    const OpExpr product = OpExpr::parse("a*b", kSlots);
    CHECK_FALSE(product.hermitian_preserving());
    for (int trial = 0; trial < 15; ++trial) {
        const State psi = testing::random_state(2, rng);
        const Complex via_joint = expect_joint(zp, xp, product, psi);
        const Complex direct =
            psi.ket.dot(testing::pauli('z') * (testing::pauli('x') * psi.ket));
        CHECK(std::abs(via_joint - direct) <= 1e-9);
    }

    // POM construction refuses non-Hermitian expressions
    CHECK_THROWS_AS(combine(zp, xp, product), HermiticityError);
}

TEST_CASE("commutator_expect: Pauli oracle i[sz, sx] = -2 sy") {
    const MaximalPom zp = testing::pauli_z_pom();
    const MaximalPom xp = testing::pauli_x_pom();

    ComplexVector e0(2);
    e0 << 1.0, 0.0;
    CHECK(std::abs(commutator_expect(zp, xp, State(e0))) <= 1e-10);

    ComplexVector plus_i(2);
    plus_i << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
    const Complex value = commutator_expect(zp, xp, State(plus_i));
    CHECK(value.real() == doctest::Approx(-2.0));
    CHECK(std::abs(value.imag()) <= 1e-10);

    // B = A: the commutator vanishes identically
    testing::Rng rng(13);
    const MaximalPom a = testing::random_maximal_pom(3, 5, rng);
    for (int trial = 0; trial < 5; ++trial) {
        CHECK(std::abs(commutator_expect(a, a, testing::random_state(3, rng))) <=
              1e-10);
    }
}

TEST_CASE("uncertainty relation on random instances") {
    testing::Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Index dim = 2 + static_cast<Index>(rng() % 4);
        const Index count_a = dim + static_cast<Index>(rng() % 3);
        const Index count_b = dim + static_cast<Index>(rng() % 3);
        const MaximalPom a = testing::random_maximal_pom(dim, count_a, rng);
        const MaximalPom b = testing::random_maximal_pom(dim, count_b, rng);
        const State psi = testing::random_state(dim, rng);
        const UncertaintyReport report = uncertainty(a, b, psi);
        CHECK(report.satisfied);
        CHECK(report.delta_a * report.delta_b >= report.bound - 1e-9);
        CHECK(report.bound ==
              doctest::Approx(0.5 *
                              std::abs(report.commutator_expectation)));
    }

    // B = A gives a zero bound
    const MaximalPom a = testing::random_maximal_pom(3, 4, rng);
    const UncertaintyReport same = uncertainty(a, a, testing::random_state(3, rng));
    CHECK(same.bound <= 1e-10);
    CHECK(same.satisfied);

    // sigma_z, sigma_x on |0>: both sides vanish
    ComplexVector e0(2);
    e0 << 1.0, 0.0;
    const UncertaintyReport pauli_case = uncertainty(
        testing::pauli_z_pom(), testing::pauli_x_pom(), State(e0));
    CHECK(pauli_case.delta_a <= 1e-9);
    CHECK(pauli_case.bound <= 1e-9);
    CHECK(pauli_case.satisfied);

    // when C0 = 1 the bound reduces to the mean-operator commutator
    const MaximalPom zp = testing::pauli_z_pom();
    const MaximalPom xp = testing::pauli_x_pom();
    for (int trial = 0; trial < 10; ++trial) {
        const State psi = testing::random_state(2, rng);
        const UncertaintyReport report = uncertainty(zp, xp, psi);
        const ComplexMatrix commutator =
            testing::pauli('z') * testing::pauli('x') -
            testing::pauli('x') * testing::pauli('z');
        const double reduced =
            0.5 * std::abs(psi.ket.dot(commutator * psi.ket));
        CHECK(report.bound == doctest::Approx(reduced).epsilon(1e-9));
    }
}

TEST_CASE("expect_chain extends Hermitian observables to the joint space") {
    testing::Rng rng(19);
    const MaximalPom trine = testing::trine_pom();
    const MaximalPom z = testing::pauli_z_pom();
    const std::vector<std::string> chain_slots{"a", "b", "x1"};

    // empty list reduces to expect_joint
    const OpExpr plain = OpExpr::parse("sym(a, b)", chain_slots);
    for (int trial = 0; trial < 10; ++trial) {
        const State psi = testing::random_state(2, rng);
        CHECK(std::abs(expect_chain(trine, z, {}, plain, psi) -
                       expect_joint(trine, z, plain, psi)) <= 1e-10);
    }

    // projective everything reduces to plain operator algebra
    const MaximalPom zp = testing::pauli_z_pom();
    const MaximalPom xp = testing::pauli_x_pom();
    const OpExpr sum3 = OpExpr::parse("a + b + x1", chain_slots);
    for (int trial = 0; trial < 10; ++trial) {
        const State psi = testing::random_state(2, rng);
        const Complex chained =
            expect_chain(zp, xp, {testing::pauli('y')}, sum3, psi);
        const ComplexMatrix direct = testing::pauli('z') +
                                     testing::pauli('x') +
                                     testing::pauli('y');
        CHECK(std::abs(chained - psi.ket.dot(direct * psi.ket)) <= 1e-9);
    }

    // trine vs sigma_z with X = sigma_y: against an explicit joint-space
    // construction of the combined observable
    const OpExpr mixed = OpExpr::parse("sym(a, x1) + b", chain_slots);
    const JointSpace js = build_joint_space(trine, z);
    const ComplexMatrix x_joint =
        extend_hermitian_joint(js, testing::pauli('y'));
    const ComplexMatrix k_hat = mixed.eval(std::array<ComplexMatrix, 3>{
        js.a_hat, js.b_hat, x_joint});
    const EigResult eig = eig_hermitian(k_hat);
    for (int trial = 0; trial < 10; ++trial) {
        const State psi = testing::random_state(2, rng);
        // brute force: sum_k k |(k|psi)|^2 over the joint eigensystem
        const ComplexVector ext = extend_state_joint(js, psi, Route::A);
        double brute = 0.0;
        for (Index i = 0; i < eig.values.size(); ++i) {
            brute += eig.values[i] * std::norm(eig.vectors.col(i).dot(ext));
        }
        const Complex value =
            expect_chain(trine, z, {testing::pauli('y')}, mixed, psi);
        CHECK(value.real() == doctest::Approx(brute).epsilon(1e-9));
        CHECK(std::abs(value.imag()) <= 1e-9);
    }

    ComplexMatrix not_hermitian(2, 2);
    not_hermitian << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(expect_chain(trine, z, {not_hermitian}, mixed,
                                 testing::random_state(2, rng)),
                    HermiticityError);
}
