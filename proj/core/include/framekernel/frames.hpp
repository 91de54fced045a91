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

// Frames of a finite-dimensional Hilbert space C^d and their canonical duals.

#pragma once

#include <cstddef>
#include <vector>

#include "framekernel/index_set.hpp"
#include "framekernel/numeric.hpp"

namespace framekernel {

/// Optimal frame bounds: extreme eigenvalues of the frame operator.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Smallest admissible lower/upper frame-bound ratio at construction.
inline constexpr double kMinFrameBoundRatio = 1e-12;
/// Smallest lower/upper ratio for which the canonical dual is computed.
inline constexpr double kMinDualBoundRatio = 1e-10;

/// An immutable indexed family {psi_i} spanning C^d.
///
/// Vectors are stored as the columns of a d x |I| matrix, which is also the
/// matrix of the synthesis operator. Construction fails with NotAFrameError
/// unless lambda_min(S) >= 1e-12 * lambda_max(S).
class Frame {
 public:
  Frame(IndexSet index_set, ComplexMatrix vectors);
  Frame(IndexSet index_set, const std::vector<ComplexVector>& vectors);

  std::size_t space_dim() const noexcept { return static_cast<std::size_t>(vectors_.rows()); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(vectors_.cols()); }
  const IndexSet& index_set() const noexcept { return index_set_; }
  const ComplexMatrix& vectors() const noexcept { return vectors_; }
  ComplexVector vector(std::size_t i) const { return vectors_.col(static_cast<Eigen::Index>(i)); }
  const FrameBounds& bounds() const noexcept { return bounds_; }

  /// True when |I| equals the dimension, i.e. the frame is a Riesz basis.
  bool is_basis() const noexcept { return size() == space_dim(); }

 private:
  IndexSet index_set_;
  ComplexMatrix vectors_;
  FrameBounds bounds_;
};

/// A frame together with its canonical dual psi~_i = S^{-1} psi_i and
/// its optimal bounds. Only obtainable through canonical_dual().
class FramePair {
 public:
  const Frame& frame() const noexcept { return frame_; }
  const Frame& dual() const noexcept { return dual_; }
  const FrameBounds& bounds() const noexcept { return frame_.bounds(); }
  std::size_t space_dim() const noexcept { return frame_.space_dim(); }
  std::size_t size() const noexcept { return frame_.size(); }
  const IndexSet& index_set() const noexcept { return frame_.index_set(); }

 private:
  friend FramePair canonical_dual(const Frame& frame);
  FramePair(Frame frame, Frame dual) : frame_(std::move(frame)), dual_(std::move(dual)) {}

  Frame frame_;
  Frame dual_;
};

/// c_i = <f, psi_i>.
ComplexVector analysis(const Frame& frame, const ComplexVector& f);

/// sum_i c_i psi_i.
ComplexVector synthesis(const Frame& frame, const ComplexVector& c);

/// Cross-Gram matrix G(i, i') = <a_{i'}, b_i>, i.e. the matrix of
/// analysis(b) o synthesis(a). cross_gram(F, F) is the Gram matrix of F.
ComplexMatrix cross_gram(const Frame& a, const Frame& b);

inline ComplexMatrix gram(const Frame& frame) { return cross_gram(frame, frame); }

/// S f = sum_i <f, psi_i> psi_i.
ComplexMatrix frame_operator(const Frame& frame);

/// Recomputes the optimal bounds from the spectrum of the frame operator.
FrameBounds frame_bounds(const Frame& frame);

/// Throws ConditioningError if lower/upper < kMinDualBoundRatio.
FramePair canonical_dual(const Frame& frame);

/// || D_dual C_frame f - f || / max(||f||, 1).
double reconstruction_residual(const FramePair& pair, const ComplexVector& f);

}  // namespace framekernel
