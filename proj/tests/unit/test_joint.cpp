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

#include <Eigen/SVD>

#include "generators.hpp"
#include "pomalg/joint.hpp"
#include "pomalg/numerics.hpp"

using namespace pomalg;

TEST_CASE("common_elements: identical POMs are fully common") {
    const MaximalPom trine = testing::trine_pom();
    const CommonDecomposition dec = common_elements(trine, trine);
    CHECK(dec.common.size() == 3);
    CHECK(dec.only_a.empty());
    CHECK(dec.only_b.empty());
    CHECK(dec.c0.norm() <= 1e-12);
}

TEST_CASE("common_elements: disjoint projective POMs give C0 = 1") {
    const CommonDecomposition dec =
        common_elements(testing::pauli_z_pom(), testing::pauli_x_pom());
    CHECK(dec.common.empty());
    CHECK(dec.only_a.size() == 2);
    CHECK(dec.only_b.size() == 2);
    CHECK((dec.c0 - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
    CHECK((dec.c0_pinv - ComplexMatrix::Identity(2, 2)).norm() <= 1e-9);
}

TEST_CASE("common_elements: phase-rotated kets still match") {
    const MaximalPom trine = testing::trine_pom();
    MaximalPom rotated = trine;
    rotated.elements[1].ket *= std::polar(1.0, 0.987);
    const CommonDecomposition dec = common_elements(trine, rotated);
    CHECK(dec.common.size() == 3);
    // representative kets are phase-canonical
    for (const auto &c : dec.common) {
        Index pivot = 0;
        c.ket.cwiseAbs().maxCoeff(&pivot);
        CHECK(c.ket[pivot].imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(c.ket[pivot].real() > 0.0);
    }
}

TEST_CASE("common_elements rejects redundant input") {
    MaximalPom redundant;
    redundant.dim = 2;
    const double s = 1.0 / std::sqrt(2.0);
    for (int copy = 0; copy < 2; ++copy) {
        for (Index i = 0; i < 2; ++i) {
            ComplexVector ket = ComplexVector::Zero(2);
            ket[i] = s;
            redundant.elements.push_back({static_cast<double>(copy), ket});
        }
    }
    CHECK_THROWS_AS(common_elements(redundant, testing::pauli_z_pom()),
                    RedundancyError);
}

TEST_CASE("cross_gram for sigma_z vs sigma_x is the Hadamard overlap") {
    const CommonDecomposition dec =
        common_elements(testing::pauli_z_pom(), testing::pauli_x_pom());
    const ComplexMatrix g = cross_gram(dec);
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix expected(2, 2);
    expected << s, s, s, -s;
    CHECK((g - expected).norm() <= 1e-12);
    // unitary here
    CHECK((g * g.adjoint() - ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);

    // all-common case: the cross Gram is empty
    const MaximalPom trine = testing::trine_pom();
    CHECK(cross_gram(common_elements(trine, trine)).size() == 0);
}

TEST_CASE("cross_gram reconstruction identities and norm bounds") {
    testing::Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Index dim = 2 + static_cast<Index>(rng() % 4);
        const Index count = dim + static_cast<Index>(rng() % 4);
        const Index n_common = static_cast<Index>(rng() % (count - dim + 1));
        const auto [a, b] =
            testing::random_pom_pair_with_common(dim, count, n_common, rng);
        const CommonDecomposition dec = common_elements(a, b);
        CHECK(static_cast<Index>(dec.common.size()) == n_common);
        const ComplexMatrix g = cross_gram(dec);

        // conjugate symmetry comes with the construction; check the norm
        // bounds the existence proof needs: row/column sums and sigma_max
        for (Index i = 0; i < g.rows(); ++i) {
            CHECK(g.row(i).squaredNorm() <= 1.0 + 1e-9);
        }
        for (Index j = 0; j < g.cols(); ++j) {
            CHECK(g.col(j).squaredNorm() <= 1.0 + 1e-9);
        }
        if (g.size() > 0) {
            const Eigen::JacobiSVD<ComplexMatrix> svd(g);
            CHECK(svd.singularValues().maxCoeff() <= 1.0 + 1e-9);
        }

        // reconstruction: |a~> = sum_b (b|a) |b~> and vice versa
        for (std::size_t i = 0; i < dec.only_a.size(); ++i) {
            ComplexVector rebuilt = ComplexVector::Zero(dim);
            for (std::size_t j = 0; j < dec.only_b.size(); ++j) {
                rebuilt += std::conj(g(static_cast<Index>(i),
                                       static_cast<Index>(j))) *
                           dec.only_b[j].ket;
            }
            CHECK((rebuilt - dec.only_a[i].ket).norm() <= 1e-9);
        }
        for (std::size_t j = 0; j < dec.only_b.size(); ++j) {
            ComplexVector rebuilt = ComplexVector::Zero(dim);
            for (std::size_t i = 0; i < dec.only_a.size(); ++i) {
                rebuilt += g(static_cast<Index>(i), static_cast<Index>(j)) *
                           dec.only_a[i].ket;
            }
            CHECK((rebuilt - dec.only_b[j].ket).norm() <= 1e-9);
        }

        // tilde kets live on the support of C0
        const ComplexMatrix support = dec.c0 * dec.c0_pinv;
        for (const auto &e : dec.only_a) {
            CHECK((support * e.ket - e.ket).norm() <= 1e-9);
        }
    }
}

TEST_CASE("build_joint_space: disjoint projective pair collapses to H") {
    const JointSpace js =
        build_joint_space(testing::pauli_z_pom(), testing::pauli_x_pom());
    CHECK(js.joint_dim == 2);

    // the hat operators are unitarily equivalent to the original Paulis
    const EigResult ea = eig_hermitian(js.a_hat);
    CHECK(ea.values[0] == doctest::Approx(-1.0));
    CHECK(ea.values[1] == doctest::Approx(1.0));
    const EigResult eb = eig_hermitian(js.b_hat);
    CHECK(eb.values[0] == doctest::Approx(-1.0));
    CHECK(eb.values[1] == doctest::Approx(1.0));
}

TEST_CASE("build_joint_space: B = A gives identical hat operators") {
    const MaximalPom trine = testing::trine_pom();
    const JointSpace js = build_joint_space(trine, trine);
    CHECK(js.joint_dim == 3);
    CHECK((js.a_hat - js.b_hat).norm() <= 1e-12);
}

TEST_CASE("joint space invariants on random pairs") {
    testing::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Index dim = 2 + static_cast<Index>(rng() % 4);
        const Index count = dim + static_cast<Index>(rng() % 4);
        const Index n_common = static_cast<Index>(rng() % (count - dim + 1));
        const auto [a, b] =
            testing::random_pom_pair_with_common(dim, count, n_common, rng);
        const JointSpace js = build_joint_space(a, b);

        // orthonormal coordinate sets
        const Index na = js.a_vectors.cols();
        const Index nb = js.b_vectors.cols();
        CHECK((js.a_vectors.adjoint() * js.a_vectors -
               ComplexMatrix::Identity(na, na))
                  .norm() <= 1e-9);
        CHECK((js.b_vectors.adjoint() * js.b_vectors -
               ComplexMatrix::Identity(nb, nb))
                  .norm() <= 1e-9);

        // common coordinates coincide; cross block reproduces the Gram
        const Index nc = static_cast<Index>(js.dec.common.size());
        const ComplexMatrix cross_block =
            js.a_vectors.rightCols(na - nc).adjoint() *
            js.b_vectors.rightCols(nb - nc);
        CHECK((cross_block - js.cross).norm() <= 1e-9);

        // physical projector: idempotent, Hermitian, same from both routes
        const ComplexMatrix e_b = js.b_vectors *
                                  (js.b_kets.adjoint() * js.b_kets) *
                                  js.b_vectors.adjoint();
        CHECK((js.e_physical - e_b).norm() <= 1e-9);
        CHECK(hermiticity_defect(js.e_physical) <= 1e-9);
        CHECK((js.e_physical * js.e_physical - js.e_physical).norm() <= 1e-9);

        // state extension: consistency, norm, probability transport
        for (int inner = 0; inner < 5; ++inner) {
            const State psi = testing::random_state(dim, rng);
            const ComplexVector via_a = extend_state_joint(js, psi, Route::A);
            const ComplexVector via_b = extend_state_joint(js, psi, Route::B);
            CHECK((via_a - via_b).norm() <= 1e-9);
            CHECK(via_a.norm() == doctest::Approx(1.0).epsilon(1e-9));
            CHECK((js.e_physical * via_a - via_a).norm() <= 1e-9);

            const RealVector pa = probabilities(js.pom(Route::A), psi);
            for (Index i = 0; i < na; ++i) {
                CHECK(std::abs(std::norm(js.a_vectors.col(i).dot(via_a)) -
                               pa[i]) <= 1e-10);
            }
            const RealVector pb = probabilities(js.pom(Route::B), psi);
            for (Index i = 0; i < nb; ++i) {
                CHECK(std::abs(std::norm(js.b_vectors.col(i).dot(via_b)) -
                               pb[i]) <= 1e-10);
            }
        }

        // round trip back to the physical space
        const State psi = testing::random_state(dim, rng);
        const ComplexVector ext = extend_state_joint(js, psi, Route::A);
        CHECK((project_back_joint(js, ext, Route::A) - psi.ket).norm() <=
              1e-9);
        CHECK((project_back_joint(js, ext, Route::B) - psi.ket).norm() <=
              1e-9);
    }
}

TEST_CASE("tilde-sector weight of an extended state is <psi|C0|psi>") {
    // in particular, states annihilated by C0 extend into the common block
    // coordinates only
    testing::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Index dim = 2 + static_cast<Index>(rng() % 3);
        const Index count = dim + 1 + static_cast<Index>(rng() % 3);
        const Index n_common =
            1 + static_cast<Index>(rng() % (count - dim));
        const auto [a, b] =
            testing::random_pom_pair_with_common(dim, count, n_common, rng);
        const JointSpace js = build_joint_space(a, b);
        const Index nc = static_cast<Index>(js.dec.common.size());
        const State psi = testing::random_state(dim, rng);
        const ComplexVector ext = extend_state_joint(js, psi, Route::A);
        const double c0_weight = psi.ket.dot(js.dec.c0 * psi.ket).real();
        const double tail_weight = ext.tail(js.joint_dim - nc).squaredNorm();
        CHECK(tail_weight == doctest::Approx(c0_weight).epsilon(1e-8));
    }

    // projective A = B: the extension coordinates are the overlaps <a|psi>
    const MaximalPom z = testing::pauli_z_pom();
    const JointSpace zz = build_joint_space(z, z);
    const State psi = testing::random_state(2, rng);
    const ComplexVector ext = extend_state_joint(zz, psi, Route::A);
    for (Index i = 0; i < 2; ++i) {
        CHECK(std::abs(ext[i] - zz.a_kets.col(i).dot(psi.ket)) <= 1e-12);
    }
}
