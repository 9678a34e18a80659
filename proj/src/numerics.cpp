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

#include "pomalg/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace pomalg {

void canonicalize_phase(ComplexVector &v) {
    Index pivot = 0;
    double best = 0.0;
    for (Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v[i]);
        if (mag > best) {
            best = mag;
            pivot = i;
        }
    }
    if (best == 0.0) {
        return;
    }
    v *= std::conj(v[pivot]) / best;
    // kill the residual imaginary part of the pivot left by rounding
    v[pivot] = Complex(std::abs(v[pivot]), 0.0);
}

EigResult eig_hermitian(const ComplexMatrix &m, const Tolerance &tol) {
    if (m.rows() != m.cols()) {
        throw ShapeError("eig_hermitian: matrix is not square");
    }
    if (!is_hermitian(m, tol.eps_eq)) {
        throw HermiticityError("eig_hermitian: matrix is not Hermitian "
                               "(defect " +
                               std::to_string(hermiticity_defect(m)) + ")");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        ComplexMatrix(0.5 * (m + m.adjoint())));
    if (solver.info() != Eigen::Success) {
        throw NumericsError("eig_hermitian: eigensolver failed to converge");
    }
    EigResult result{solver.eigenvalues(), solver.eigenvectors()};
    for (Index j = 0; j < result.vectors.cols(); ++j) {
        ComplexVector col = result.vectors.col(j);
        canonicalize_phase(col);
        result.vectors.col(j) = col;
    }
    return result;
}

ComplexMatrix pinv_psd(const ComplexMatrix &m, const Tolerance &tol) {
    const EigResult eig = eig_hermitian(m, tol);
    const double lambda_max = eig.values.size() ? eig.values.maxCoeff() : 0.0;
    if (eig.values.size() && eig.values.minCoeff() < -tol.eps_pos) {
        throw PositivityError(
            "pinv_psd: negative eigenvalue " +
            std::to_string(eig.values.minCoeff()) + " below -eps_pos");
    }
    const double cutoff = tol.eps_rank * std::max(lambda_max, 0.0);
    RealVector inv = RealVector::Zero(eig.values.size());
    for (Index i = 0; i < eig.values.size(); ++i) {
        if (eig.values[i] > cutoff && eig.values[i] > 0.0) {
            inv[i] = 1.0 / eig.values[i];
        }
    }
    return eig.vectors * inv.asDiagonal() * eig.vectors.adjoint();
}

std::vector<ComplexVector> gram_embed(const ComplexMatrix &gram,
                                      const Tolerance &tol) {
    if (gram.rows() != gram.cols()) {
        throw ShapeError("gram_embed: matrix is not square");
    }
    if (gram.rows() == 0) {
        return {};
    }
    const EigResult eig = eig_hermitian(gram, tol);
    if (eig.values.minCoeff() < -tol.eps_pos) {
        throw NotAGramError("gram_embed: eigenvalue " +
                            std::to_string(eig.values.minCoeff()) +
                            " below -eps_pos, not a Gram matrix");
    }
    RealVector lambda = eig.values.cwiseMax(0.0);
    const double lambda_max = lambda.maxCoeff();
    const double cutoff = tol.eps_rank * lambda_max;
    std::vector<Index> kept;
    for (Index i = 0; i < lambda.size(); ++i) {
        if (lambda[i] > cutoff) {
            kept.push_back(i);
        }
    }
    // Row k of sqrt(Lambda) V^dagger, restricted to retained eigenvalues,
    // gives vector components; column i across those rows is the embedding
    // of index i.
    const Index rank = static_cast<Index>(kept.size());
    const Index n = gram.rows();
    std::vector<ComplexVector> vectors(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        ComplexVector v(rank);
        for (Index k = 0; k < rank; ++k) {
            v[k] = std::sqrt(lambda[kept[static_cast<std::size_t>(k)]]) *
                   std::conj(eig.vectors(i, kept[static_cast<std::size_t>(k)]));
        }
        vectors[static_cast<std::size_t>(i)] = std::move(v);
    }
    return vectors;
}

} // namespace pomalg
