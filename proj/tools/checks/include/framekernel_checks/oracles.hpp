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

// Brute-force reference computations. None of them calls the library's norm,
// Galerkin or Schur routines.

#pragma once

#include <vector>

#include "framekernel/numeric.hpp"

namespace framekernel::oracle {

/// (sum_k |x_k|^p)^{1/p} by plain summation; max for p = inf.
double lp(const std::vector<double>& x, double p);

/// k(i, j) = <O dual1_i, dual2_j> by explicit inner products.
ComplexMatrix galerkin(const ComplexMatrix& op, const ComplexMatrix& dual1,
                       const ComplexMatrix& dual2);

/// sum_{i,j} k(i, j) psi_2j psi_1i^H as a sum of rank-one matrices.
ComplexMatrix synthesize(const ComplexMatrix& k, const ComplexMatrix& frame1,
                         const ComplexMatrix& frame2);

/// ||f||_{H^p_w} = || (<f, dual_i> w_i)_i ||_p.
double coorbit_norm(const ComplexVector& f, const ComplexMatrix& dual, const RealVector& w,
                    double p);

/// Norm of O : l^1_{w1} -> l^q_{1/w2} on an orthonormal basis, as the
/// maximum over the extreme points e_i / w1_i of the unit ball.
double onb_extreme_point_norm(const ComplexMatrix& op, const RealVector& w1,
                              const RealVector& w2, double q);

/// Norm of O : l^p_{w1} -> l^inf_{1/w2} on an orthonormal basis, evaluated
/// at the Hoelder-extremal input of every output coordinate.
double onb_row_dual_norm(const ComplexMatrix& op, const RealVector& w1, const RealVector& w2,
                         double p);

/// sum |k_ij| w1_i w2_j.
double weighted_abs_sum(const ComplexMatrix& k, const RealVector& w1, const RealVector& w2);

/// sqrt(sum |a_ij|^2).
double frobenius(const ComplexMatrix& a);

/// (sum_i ||A e_i||^p)^{1/p}.
double column_norm_sum(const ComplexMatrix& a, double p);

/// Eigenvalues of the frame operator from a general (non-Hermitian) solver.
std::vector<double> frame_operator_spectrum(const ComplexMatrix& vectors);

}  // namespace framekernel::oracle
