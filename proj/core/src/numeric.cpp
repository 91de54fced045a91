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

#include "framekernel/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace framekernel {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Complex z = m(r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) {
    throw PreconditionError(std::string(what) + ": matrix has non-finite entries");
  }
}

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

void require_hermitian(const ComplexMatrix& m, double tol, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw PreconditionError(os.str());
  }
  require_finite(m, what);
  const double scale = m.norm();
  if (hermitian_defect(m) > tol * std::max(scale, 1e-300)) {
    throw PreconditionError(std::string(what) + ": matrix is not Hermitian");
  }
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& m, bool with_vectors, double hermitian_tol) {
  require_hermitian(m, hermitian_tol, "hermitian_eig");
  Spectrum out;
  if (m.size() == 0) {
    out.values.resize(0);
    if (with_vectors) out.vectors = ComplexMatrix(0, 0);
    return out;
  }
  // Symmetrize so round-off in the input cannot leak into the solver.
  const ComplexMatrix h = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver did not converge");
  }
  out.values = solver.eigenvalues();
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

std::vector<double> svd_values(const ComplexMatrix& m) {
  require_finite(m, "svd_values");
  const auto n = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const RealVector& s = svd.singularValues();
  for (std::size_t k = 0; k < n; ++k) out[k] = s(static_cast<Eigen::Index>(k));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ComplexMatrix solve_posdef(const ComplexMatrix& m, const ComplexMatrix& b,
                           double min_relative_eigenvalue) {
  require_hermitian(m, 1e-10, "solve_posdef");
  if (b.rows() != m.rows()) {
    std::ostringstream os;
    os << "solve_posdef: right-hand side has " << b.rows() << " rows, expected " << m.rows();
    throw DimensionError(os.str());
  }
  require_finite(b, "solve_posdef");
  if (m.size() == 0) return ComplexMatrix(0, b.cols());

  const Spectrum spec = hermitian_eig(m, false);
  const double lmin = spec.values(0);
  const double lmax = spec.values(spec.values.size() - 1);
  if (!(lmin > min_relative_eigenvalue * std::max(lmax, 0.0)) || !(lmax > 0.0)) {
    std::ostringstream os;
    os << "solve_posdef: matrix is not safely positive definite (smallest eigenvalue "
       << lmin << ", largest " << lmax << ")";
    throw ConditioningError(os.str(), lmin);
  }
  const ComplexMatrix h = (m + m.adjoint()) * 0.5;
  Eigen::LLT<ComplexMatrix> llt(h);
  if (llt.info() != Eigen::Success) {
    throw ConditioningError("solve_posdef: Cholesky factorization failed", lmin);
  }
  ComplexMatrix x = llt.solve(b);
  // One step of iterative refinement.
  const ComplexMatrix r = b - h * x;
  x += llt.solve(r);
  return x;
}

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_infinite_exponent(double p) { return std::isinf(p) && p > 0; }

void require_exponent(double p, const char* what) {
  if (std::isnan(p) || p < 1.0) {
    std::ostringstream os;
    os << what << ": exponent " << p << " outside [1, inf]";
    throw PreconditionError(os.str());
  }
}

double conjugate_exponent(double p) {
  require_exponent(p, "conjugate_exponent");
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  if (is_infinite_exponent(p)) return 1.0;
  return p / (p - 1.0);
}

double lp_norm(const RealVector& magnitudes, double p) {
  require_exponent(p, "lp_norm");
  if (magnitudes.size() == 0) return 0.0;
  if (is_infinite_exponent(p)) return magnitudes.cwiseAbs().maxCoeff();
  if (p == 1.0) return magnitudes.cwiseAbs().sum();
  // Scale by the largest entry.
  const double scale = magnitudes.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index k = 0; k < magnitudes.size(); ++k) {
    acc += std::pow(std::abs(magnitudes(k)) / scale, p);
  }
  return scale * std::pow(acc, 1.0 / p);
}

}  // namespace framekernel
