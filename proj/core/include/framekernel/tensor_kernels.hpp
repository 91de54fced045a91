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

// Kernels of operators between finite-dimensional spaces.
//
// A kernel K in H1 (x) H2 is stored as the d2 x d1 matrix of the
// Hilbert-Schmidt operator it defines, so K f = matrix * f. The simple
// tensor f1 (x) f2 is the rank-one operator f -> <f, f1> f2 with matrix
// f2 f1^H; it is conjugate-homogeneous in f1:
//   a (f1 (x) f2) = (conj(a) f1) (x) f2 = f1 (x) (a f2).
// The Hilbert-Schmidt inner product of simple tensors is conj(<f1, g1>) <f2, g2>.
//
// Coefficient arrays over I x J have rows indexed by I and columns by J.
// Whenever I x J is flattened, (i, j) maps to i * |J| + j.

#pragma once

#include <cstddef>

#include <nlohmann/json.hpp>

#include "framekernel/coorbit.hpp"
#include "framekernel/frames.hpp"
#include "framekernel/numeric.hpp"

namespace framekernel {

class KernelRep {
 public:
  KernelRep() = default;
  explicit KernelRep(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t input_dim() const noexcept { return static_cast<std::size_t>(matrix_.cols()); }
  std::size_t output_dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  ComplexVector apply(const ComplexVector& f) const;

  friend KernelRep operator+(const KernelRep& a, const KernelRep& b);
  friend KernelRep operator*(Complex alpha, const KernelRep& k);

 private:
  ComplexMatrix matrix_;
};

/// f1 (x) f2 : f -> <f, f1> f2.
KernelRep simple_tensor(const ComplexVector& f1, const ComplexVector& f2);

/// <K1, K2>_HS = trace(K2^H K1).
Complex hs_inner(const KernelRep& k1, const KernelRep& k2);

/// Psi1 (x) Psi2, a frame for H1 (x) H2 with canonical dual Psi1~ (x) Psi2~.
class TensorFrame {
 public:
  TensorFrame(FramePair first, FramePair second);

  const FramePair& first() const noexcept { return first_; }
  const FramePair& second() const noexcept { return second_; }
  std::size_t size() const noexcept { return first_.size() * second_.size(); }
  std::size_t flat_index(std::size_t i, std::size_t j) const { return i * second_.size() + j; }

  KernelRep element(std::size_t i, std::size_t j) const;
  KernelRep dual_element(std::size_t i, std::size_t j) const;

  /// Bounds (A1 A2, B1 B2).
  FrameBounds bounds() const;

  /// Synthesis matrix on column-major vec(K): column (i, j) is
  /// vec(psi_2j psi_1i^H) = conj(psi_1i) (x) psi_2j.
  ComplexMatrix synthesis_matrix() const;

  /// The tensor frame as an ordinary frame of C^{d1 d2} (linear index set).
  Frame as_frame() const;

 private:
  FramePair first_;
  FramePair second_;
};

TensorFrame tensor_frame(const FramePair& first, const FramePair& second);

/// Gram matrix of Psi1 (x) Psi2: conj(G_Psi1) (x) G_Psi2.
ComplexMatrix tensor_gram(const FramePair& first, const FramePair& second);

/// Coefficient array over I x J together with its index sets.
struct GalerkinMatrix {
  IndexSet rows_index;  // I
  IndexSet cols_index;  // J
  ComplexMatrix entries;
};

/// k(i, j) = <O psi1~_i, psi2~_j>, the kernel coefficients C_{Psi1~ (x) Psi2~} O.
GalerkinMatrix galerkin(const ComplexMatrix& op, const FramePair& first, const FramePair& second);

/// K = sum_{i,j} k(i, j) psi_1i (x) psi_2j.
KernelRep synthesize_kernel(const GalerkinMatrix& k, const FramePair& first,
                            const FramePair& second);
KernelRep synthesize_kernel(const ComplexMatrix& k, const FramePair& first,
                            const FramePair& second);

/// C_{Psi~ (x) Psi~} D_{Psi (x) Psi} k; idempotent, its range is the set of
/// coefficient arrays of kernels.
ComplexMatrix correspondence_projection(const ComplexMatrix& k, const FramePair& first,
                                        const FramePair& second);

/// ||k - P k||_max / max(||k||_max, 1) for the projection above.
double correspondence_residual(const ComplexMatrix& k, const FramePair& first,
                               const FramePair& second);
inline double correspondence_residual(const GalerkinMatrix& k, const FramePair& first,
                                      const FramePair& second) {
  return correspondence_residual(k.entries, first, second);
}

/// mixed_norm(galerkin(K), spec).
double kernel_norm(const KernelRep& kernel, const FramePair& first, const FramePair& second,
                   const MixedSpaceSpec& spec);

/// {"I": {...}, "J": {...}, "rows": |I|, "cols": |J|, "entries": [[re, im], ...]}
nlohmann::json galerkin_to_json(const GalerkinMatrix& k);
GalerkinMatrix galerkin_from_json(const nlohmann::json& j);

}  // namespace framekernel
