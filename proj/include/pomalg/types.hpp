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

#include <Eigen/Dense>
#include <algorithm>
#include <complex>

namespace pomalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical slacks used throughout: positivity (eigenvalues may dip to
/// -eps_pos), equality (Frobenius/absolute comparisons), the relative
/// spectral cutoff for pseudo-inverses and rank decisions, and the
/// projector-matching tolerance for common-element detection.
struct Tolerance {
    double eps_pos = 1e-9;
    double eps_eq = 1e-9;
    double eps_rank = 1e-10;
    double eps_match = 1e-8;
};

inline double hermiticity_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).norm();
}

inline bool is_hermitian(const ComplexMatrix &m, double eps) {
    return m.rows() == m.cols() &&
           hermiticity_defect(m) <= eps * std::max(1.0, m.norm());
}

/// Slack for comparing quantities of the given magnitude scale.
inline double eq_slack(double eps, double scale) {
    return eps * std::max(1.0, scale);
}

} // namespace pomalg
