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

#include "framekernel/tensor_kernels.hpp"

#include <sstream>

#include "framekernel/index_set.hpp"
#include "framekernel/matrix_io.hpp"

namespace framekernel {

namespace {

void require_operator_shape(const ComplexMatrix& op, const FramePair& first,
                            const FramePair& second, const char* what) {
  if (static_cast<std::size_t>(op.cols()) != first.space_dim() ||
      static_cast<std::size_t>(op.rows()) != second.space_dim()) {
    std::ostringstream os;
    os << what << ": operator is " << op.rows() << "x" << op.cols() << ", expected "
       << second.space_dim() << "x" << first.space_dim();
    throw DimensionError(os.str());
  }
}

void require_coefficient_shape(const ComplexMatrix& k, const FramePair& first,
                               const FramePair& second, const char* what) {
  if (static_cast<std::size_t>(k.rows()) != first.size() ||
      static_cast<std::size_t>(k.cols()) != second.size()) {
    std::ostringstream os;
    os << what << ": coefficient array is " << k.rows() << "x" << k.cols() << ", expected "
       << first.size() << "x" << second.size();
    throw DimensionError(os.str());
  }
}

}  // namespace

KernelRep::KernelRep(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  require_finite(matrix_, "KernelRep");
}

ComplexVector KernelRep::apply(const ComplexVector& f) const {
  if (f.size() != matrix_.cols()) throw DimensionError("KernelRep::apply: dimension mismatch");
  return matrix_ * f;
}

KernelRep operator+(const KernelRep& a, const KernelRep& b) {
  if (a.matrix_.rows() != b.matrix_.rows() || a.matrix_.cols() != b.matrix_.cols()) {
    throw DimensionError("KernelRep: shape mismatch in sum");
  }
  return KernelRep(a.matrix_ + b.matrix_);
}

KernelRep operator*(Complex alpha, const KernelRep& k) { return KernelRep(alpha * k.matrix_); }

KernelRep simple_tensor(const ComplexVector& f1, const ComplexVector& f2) {
  return KernelRep(f2 * f1.adjoint());
}

Complex hs_inner(const KernelRep& k1, const KernelRep& k2) {
  const ComplexMatrix& a = k1.matrix();
  const ComplexMatrix& b = k2.matrix();
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: kernels have different shapes");
  }
  return (b.conjugate().cwiseProduct(a)).sum();
}

TensorFrame::TensorFrame(FramePair first, FramePair second)
    : first_(std::move(first)), second_(std::move(second)) {}

KernelRep TensorFrame::element(std::size_t i, std::size_t j) const {
  return simple_tensor(first_.frame().vector(i), second_.frame().vector(j));
}

KernelRep TensorFrame::dual_element(std::size_t i, std::size_t j) const {
  return simple_tensor(first_.dual().vector(i), second_.dual().vector(j));
}

FrameBounds TensorFrame::bounds() const {
  return {first_.bounds().lower * second_.bounds().lower,
          first_.bounds().upper * second_.bounds().upper};
}

ComplexMatrix TensorFrame::synthesis_matrix() const {
  return kron(first_.frame().vectors().conjugate(), second_.frame().vectors());
}

Frame TensorFrame::as_frame() const { return Frame(IndexSet::linear(size()), synthesis_matrix()); }

TensorFrame tensor_frame(const FramePair& first, const FramePair& second) {
  return TensorFrame(first, second);
}

ComplexMatrix tensor_gram(const FramePair& first, const FramePair& second) {
  return kron(gram(first.frame()).conjugate(), gram(second.frame()));
}

GalerkinMatrix galerkin(const ComplexMatrix& op, const FramePair& first, const FramePair& second) {
  require_operator_shape(op, first, second, "galerkin");
  // (Psi2~^H O Psi1~)(j, i) = <O psi1~_i, psi2~_j>.
  ComplexMatrix k =
      (second.dual().vectors().adjoint() * op * first.dual().vectors()).transpose();
  return {first.index_set(), second.index_set(), std::move(k)};
}

KernelRep synthesize_kernel(const ComplexMatrix& k, const FramePair& first,
                            const FramePair& second) {
  require_coefficient_shape(k, first, second, "synthesize_kernel");
  return KernelRep(second.frame().vectors() * k.transpose() * first.frame().vectors().adjoint());
}

KernelRep synthesize_kernel(const GalerkinMatrix& k, const FramePair& first,
                            const FramePair& second) {
  return synthesize_kernel(k.entries, first, second);
}

ComplexMatrix correspondence_projection(const ComplexMatrix& k, const FramePair& first,
                                        const FramePair& second) {
  return galerkin(synthesize_kernel(k, first, second).matrix(), first, second).entries;
}

double correspondence_residual(const ComplexMatrix& k, const FramePair& first,
                               const FramePair& second) {
  const ComplexMatrix projected = correspondence_projection(k, first, second);
  return max_abs(k - projected) / std::max(max_abs(k), 1.0);
}

double kernel_norm(const KernelRep& kernel, const FramePair& first, const FramePair& second,
                   const MixedSpaceSpec& spec) {
  return mixed_norm(galerkin(kernel.matrix(), first, second).entries, spec);
}

nlohmann::json galerkin_to_json(const GalerkinMatrix& k) {
  nlohmann::json j = matrix_to_json(k.entries);
  j["I"] = index_set_to_json(k.rows_index);
  j["J"] = index_set_to_json(k.cols_index);
  return j;
}

GalerkinMatrix galerkin_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("I") || !j.contains("J")) {
    throw ValidationError("Galerkin JSON needs \"I\" and \"J\" index sets");
  }
  GalerkinMatrix k{index_set_from_json(j.at("I")), index_set_from_json(j.at("J")),
                   matrix_from_json(j)};
  if (static_cast<std::size_t>(k.entries.rows()) != k.rows_index.size() ||
      static_cast<std::size_t>(k.entries.cols()) != k.cols_index.size()) {
    throw ValidationError("Galerkin JSON: entries do not match the index sets");
  }
  return k;
}

}  // namespace framekernel
