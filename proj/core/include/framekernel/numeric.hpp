// Copyright 2026 The framekernel Authors
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

// Dense complex linear algebra used throughout the library.
//
// Scalars are complex doubles. The inner product <f, g> is linear in f and
// conjugate-linear in g, i.e. <f, g> = g^H f.

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "framekernel/error.hpp"

namespace framekernel {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kDefaultTolerance = 1e-9;

/// <f, g> = sum_k f_k conj(g_k).
inline Complex inner(const ComplexVector& f, const ComplexVector& g) {
  // Eigen's dot() conjugates its left operand.
  return g.dot(f);
}

/// Eigenvalues in ascending order, optionally with orthonormal eigenvectors
/// stored column-wise in matching order.
struct Spectrum {
  RealVector values;
  std::optional<ComplexMatrix> vectors;
};

bool all_finite(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);

/// Largest absolute deviation from Hermitian symmetry, max |M - M^H|.
double hermitian_defect(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix.
///
/// Throws PreconditionError if `m` is not square or deviates from Hermitian
/// symmetry by more than `hermitian_tol * ||m||_F`.
Spectrum hermitian_eig(const ComplexMatrix& m, bool with_vectors = true,
                       double hermitian_tol = 1e-10);

/// Singular values, descending, min(rows, cols) of them.
std::vector<double> svd_values(const ComplexMatrix& m);

/// Solves M X = B for Hermitian positive definite M.
///
/// Throws ConditioningError (carrying the smallest eigenvalue) when
/// lambda_min(M) <= min_relative_eigenvalue * ||M||_2.
ComplexMatrix solve_posdef(const ComplexMatrix& m, const ComplexMatrix& b,
                           double min_relative_eigenvalue = 1e-12);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

/// Kronecker product, (a ⊗ b)(i*p + k, j*q + l) = a(i,j) b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||x||_p for p in [1, inf]; p = infinity() gives the sup norm.
double lp_norm(const RealVector& magnitudes, double p);

/// Hölder conjugate of p: 1/p + 1/q = 1.
double conjugate_exponent(double p);

bool is_infinite_exponent(double p);
void require_exponent(double p, const char* what);

}  // namespace framekernel
