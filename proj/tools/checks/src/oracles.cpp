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

#include "framekernel_checks/oracles.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace framekernel::oracle {

double lp(const std::vector<double>& x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

ComplexMatrix galerkin(const ComplexMatrix& op, const ComplexMatrix& dual1,
                       const ComplexMatrix& dual2) {
  ComplexMatrix k(dual1.cols(), dual2.cols());
  for (Eigen::Index i = 0; i < dual1.cols(); ++i) {
    const ComplexVector image = op * dual1.col(i);
    for (Eigen::Index j = 0; j < dual2.cols(); ++j) {
      Complex s = 0.0;
      for (Eigen::Index t = 0; t < image.size(); ++t) s += image(t) * std::conj(dual2(t, j));
      k(i, j) = s;
    }
  }
  return k;
}

ComplexMatrix synthesize(const ComplexMatrix& k, const ComplexMatrix& frame1,
                         const ComplexMatrix& frame2) {
  ComplexMatrix out = ComplexMatrix::Zero(frame2.rows(), frame1.rows());
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      if (k(i, j) == Complex(0.0, 0.0)) continue;
      for (Eigen::Index r = 0; r < out.rows(); ++r) {
        for (Eigen::Index c = 0; c < out.cols(); ++c) {
          out(r, c) += k(i, j) * frame2(r, j) * std::conj(frame1(c, i));
        }
      }
    }
  }
  return out;
}

double coorbit_norm(const ComplexVector& f, const ComplexMatrix& dual, const RealVector& w,
                    double p) {
  std::vector<double> c(static_cast<std::size_t>(dual.cols()));
  for (Eigen::Index i = 0; i < dual.cols(); ++i) {
    Complex s = 0.0;
    for (Eigen::Index t = 0; t < f.size(); ++t) s += f(t) * std::conj(dual(t, i));
    c[static_cast<std::size_t>(i)] = std::abs(s) * w(i);
  }
  return lp(c, p);
}

double onb_extreme_point_norm(const ComplexMatrix& op, const RealVector& w1,
                              const RealVector& w2, double q) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < op.cols(); ++i) {
    ComplexVector e = ComplexVector::Zero(op.cols());
    e(i) = 1.0 / w1(i);
    const ComplexVector image = op * e;
    std::vector<double> scaled(static_cast<std::size_t>(image.size()));
    for (Eigen::Index j = 0; j < image.size(); ++j) {
      scaled[static_cast<std::size_t>(j)] = std::abs(image(j)) / w2(j);
    }
    // ||e||_{l^1_{w1}} = 1.
    best = std::max(best, lp(scaled, q));
  }
  return best;
}

double onb_row_dual_norm(const ComplexMatrix& op, const RealVector& w1, const RealVector& w2,
                         double p) {
  const double q = p == 1.0 ? INFINITY : (std::isinf(p) ? 1.0 : p / (p - 1.0));
  double best = 0.0;
  for (Eigen::Index j = 0; j < op.rows(); ++j) {
    // a_i = O(j, i) / w1_i; extremal c_i = conj(phase(a_i)) |a_i|^{q-1} / w1_i.
    ComplexVector c = ComplexVector::Zero(op.cols());
    if (std::isinf(q)) {
      Eigen::Index arg = 0;
      double top = -1.0;
      for (Eigen::Index i = 0; i < op.cols(); ++i) {
        const double a = std::abs(op(j, i)) / w1(i);
        if (a > top) {
          top = a;
          arg = i;
        }
      }
      c(arg) = 1.0 / w1(arg);
    } else {
      for (Eigen::Index i = 0; i < op.cols(); ++i) {
        const Complex a = op(j, i) / w1(i);
        const double mag = std::abs(a);
        if (mag == 0.0) continue;
        c(i) = std::conj(a / mag) * std::pow(mag, q - 1.0) / w1(i);
      }
    }
    std::vector<double> weighted(static_cast<std::size_t>(c.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      weighted[static_cast<std::size_t>(i)] = std::abs(c(i)) * w1(i);
    }
    const double denom = lp(weighted, p);
    if (denom == 0.0) continue;
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) s += op(j, i) * c(i);
    best = std::max(best, std::abs(s) / w2(j) / denom);
  }
  return best;
}

double weighted_abs_sum(const ComplexMatrix& k, const RealVector& w1, const RealVector& w2) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) s += std::abs(k(i, j)) * w1(i) * w2(j);
  }
  return s;
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  }
  return std::sqrt(s);
}

double column_norm_sum(const ComplexMatrix& a, double p) {
  std::vector<double> norms;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) s += std::norm(a(i, j));
    norms.push_back(std::sqrt(s));
  }
  return lp(norms, p);
}

std::vector<double> frame_operator_spectrum(const ComplexMatrix& vectors) {
  const ComplexMatrix s = vectors * vectors.adjoint();
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(s, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    out.push_back(solver.eigenvalues()(i).real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace framekernel::oracle
