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

#include "framekernel/frames.hpp"

#include <algorithm>
#include <sstream>

namespace framekernel {

namespace {

ComplexMatrix stack_columns(const std::vector<ComplexVector>& vectors) {
  if (vectors.empty()) throw NotAFrameError("frame: no vectors", 0.0, 0.0);
  const Eigen::Index d = vectors.front().size();
  ComplexMatrix m(d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != d) {
      throw DimensionError("frame: vectors have differing dimensions");
    }
    m.col(static_cast<Eigen::Index>(k)) = vectors[k];
  }
  return m;
}

FrameBounds bounds_of(const ComplexMatrix& vectors) {
  const Spectrum s = hermitian_eig(vectors * vectors.adjoint(), false);
  return {s.values(0), s.values(s.values.size() - 1)};
}

void require_same_dim(const Frame& frame, Eigen::Index n, const char* what) {
  if (static_cast<std::size_t>(n) != frame.space_dim()) {
    std::ostringstream os;
    os << what << ": vector has dimension " << n << ", frame spans C^" << frame.space_dim();
    throw DimensionError(os.str());
  }
}

}  // namespace

Frame::Frame(IndexSet index_set, ComplexMatrix vectors)
    : index_set_(std::move(index_set)), vectors_(std::move(vectors)) {
  if (vectors_.rows() == 0) throw NotAFrameError("frame: space dimension is zero", 0.0, 0.0);
  if (static_cast<std::size_t>(vectors_.cols()) != index_set_.size()) {
    std::ostringstream os;
    os << "frame: " << vectors_.cols() << " vectors but index set has " << index_set_.size()
       << " entries";
    throw DimensionError(os.str());
  }
  require_finite(vectors_, "frame");
  bounds_ = bounds_of(vectors_);
  if (!(bounds_.upper > 0.0) || bounds_.lower < kMinFrameBoundRatio * bounds_.upper) {
    std::ostringstream os;
    os << "frame: vectors do not span C^" << vectors_.rows() << " (frame bounds "
       << bounds_.lower << ", " << bounds_.upper << ")";
    throw NotAFrameError(os.str(), bounds_.lower, bounds_.upper);
  }
}

Frame::Frame(IndexSet index_set, const std::vector<ComplexVector>& vectors)
    : Frame(std::move(index_set), stack_columns(vectors)) {}

ComplexVector analysis(const Frame& frame, const ComplexVector& f) {
  require_same_dim(frame, f.size(), "analysis");
  return frame.vectors().adjoint() * f;
}

ComplexVector synthesis(const Frame& frame, const ComplexVector& c) {
  if (static_cast<std::size_t>(c.size()) != frame.size()) {
    std::ostringstream os;
    os << "synthesis: " << c.size() << " coefficients for a frame of " << frame.size()
       << " vectors";
    throw DimensionError(os.str());
  }
  return frame.vectors() * c;
}

ComplexMatrix cross_gram(const Frame& a, const Frame& b) {
  if (a.space_dim() != b.space_dim()) {
    throw DimensionError("cross_gram: frames live in spaces of different dimension");
  }
  return b.vectors().adjoint() * a.vectors();
}

ComplexMatrix frame_operator(const Frame& frame) {
  return frame.vectors() * frame.vectors().adjoint();
}

FrameBounds frame_bounds(const Frame& frame) {
  const FrameBounds b = bounds_of(frame.vectors());
  if (!(b.upper > 0.0) || b.lower < kMinFrameBoundRatio * b.upper) {
    throw NotAFrameError("frame_bounds: rank-deficient system", b.lower, b.upper);
  }
  return b;
}

FramePair canonical_dual(const Frame& frame) {
  const FrameBounds& b = frame.bounds();
  if (b.lower < kMinDualBoundRatio * b.upper) {
    std::ostringstream os;
    os << "canonical_dual: frame bound ratio " << b.lower / b.upper << " below "
       << kMinDualBoundRatio;
    throw ConditioningError(os.str(), b.lower);
  }
  ComplexMatrix dual = solve_posdef(frame_operator(frame), frame.vectors());
  return FramePair(frame, Frame(frame.index_set(), std::move(dual)));
}

double reconstruction_residual(const FramePair& pair, const ComplexVector& f) {
  const ComplexVector back = synthesis(pair.dual(), analysis(pair.frame(), f));
  return (back - f).norm() / std::max(f.norm(), 1.0);
}

}  // namespace framekernel
