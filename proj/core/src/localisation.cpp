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

#include "framekernel/localisation.hpp"

#include <cmath>
#include <sstream>

namespace framekernel {

WeightVector::WeightVector(RealVector values) : values_(std::move(values)) {
  for (Eigen::Index k = 0; k < values_.size(); ++k) {
    const double x = values_(k);
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw PreconditionError("weight entries must be positive and finite");
    }
  }
}

WeightVector WeightVector::ones(std::size_t n) {
  return WeightVector(RealVector::Ones(static_cast<Eigen::Index>(n)));
}

WeightVector WeightVector::reciprocal() const { return WeightVector(values_.cwiseInverse()); }

double jaffard_norm(const ComplexMatrix& m, const IndexSet& index_set, JaffardParams params) {
  if (!(params.exponent >= 0.0) || !std::isfinite(params.exponent)) {
    throw PreconditionError("jaffard_norm: exponent must be finite and >= 0");
  }
  const auto n = static_cast<Eigen::Index>(index_set.size());
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "jaffard_norm: " << m.rows() << "x" << m.cols() << " matrix on an index set of size "
       << n;
    throw DimensionError(os.str());
  }
  double sup = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const double a = std::abs(m(r, c));
      if (a == 0.0) continue;
      const double rho = index_set.distance(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      sup = std::max(sup, a * std::pow(1.0 + rho, params.exponent));
    }
  }
  return sup;
}

double schur_weighted_bound(const ComplexMatrix& m, const WeightVector& w_out,
                            const WeightVector& w_in, double p) {
  require_exponent(p, "schur_weighted_bound");
  if (static_cast<std::size_t>(m.rows()) != w_out.size() ||
      static_cast<std::size_t>(m.cols()) != w_in.size()) {
    throw DimensionError("schur_weighted_bound: weights do not match the matrix shape");
  }
  if (m.size() == 0) return 0.0;
  RealMatrix scaled = m.cwiseAbs();
  for (Eigen::Index c = 0; c < scaled.cols(); ++c) {
    for (Eigen::Index r = 0; r < scaled.rows(); ++r) scaled(r, c) *= w_out.values()(r) / w_in.values()(c);
  }
  const double c_row = scaled.rowwise().sum().maxCoeff();
  const double c_col = scaled.colwise().sum().maxCoeff();
  if (is_infinite_exponent(p)) return c_row;
  if (p == 1.0) return c_col;
  return std::pow(c_row, 1.0 - 1.0 / p) * std::pow(c_col, 1.0 / p);
}

double schur_weighted_bound(const ComplexMatrix& m, const WeightVector& w, double p) {
  return schur_weighted_bound(m, w, w, p);
}

WeightVector poly_weight(const IndexSet& index_set, double t) {
  if (!std::isfinite(t)) throw PreconditionError("poly_weight: exponent must be finite");
  RealVector w(static_cast<Eigen::Index>(index_set.size()));
  for (std::size_t i = 0; i < index_set.size(); ++i) {
    w(static_cast<Eigen::Index>(i)) = std::pow(1.0 + index_set.distance(i, 0), t);
  }
  return WeightVector(std::move(w));
}

LocalisationReport localisation_report(const FramePair& pair, JaffardParams params,
                                       double threshold) {
  const IndexSet& set = pair.index_set();
  LocalisationReport r;
  r.exponent = params.exponent;
  r.threshold = threshold;
  r.jaffard_gram = jaffard_norm(gram(pair.frame()), set, params);
  r.jaffard_dual_gram = jaffard_norm(gram(pair.dual()), set, params);
  r.jaffard_cross = jaffard_norm(cross_gram(pair.frame(), pair.dual()), set, params);
  r.verdict = std::isfinite(r.jaffard_gram) && std::isfinite(r.jaffard_dual_gram) &&
              std::isfinite(r.jaffard_cross) && r.jaffard_gram <= threshold &&
              r.jaffard_dual_gram <= threshold && r.jaffard_cross <= threshold;
  return r;
}

nlohmann::json to_json(const LocalisationReport& report) {
  return nlohmann::json{{"jaffard_gram", report.jaffard_gram},
                        {"jaffard_dual_gram", report.jaffard_dual_gram},
                        {"jaffard_cross", report.jaffard_cross},
                        {"exponent", report.exponent},
                        {"verdict", report.verdict},
                        {"threshold", report.threshold}};
}

}  // namespace framekernel
