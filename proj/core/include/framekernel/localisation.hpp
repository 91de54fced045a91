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

// Checkable stand-ins for spectral matrix algebras: the polynomial
// off-diagonal decay (Jaffard) constant and weighted Schur bounds.

#pragma once

#include <cstddef>

#include <nlohmann/json.hpp>

#include "framekernel/frames.hpp"
#include "framekernel/index_set.hpp"
#include "framekernel/numeric.hpp"

namespace framekernel {

/// Positive finite weights indexed like a frame.
class WeightVector {
 public:
  explicit WeightVector(RealVector values);
  static WeightVector ones(std::size_t n);

  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  double operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }
  const RealVector& values() const noexcept { return values_; }

  /// Entrywise 1/w, the weight of the dual sequence space.
  WeightVector reciprocal() const;

 private:
  RealVector values_;
};

struct JaffardParams {
  double exponent = 0.0;  // s >= 0
};

/// sup_{i,i'} |M(i,i')| (1 + rho(i,i'))^s over the metric of `index_set`:
/// the smallest C with |M(i,i')| <= C (1 + rho(i,i'))^{-s}.
double jaffard_norm(const ComplexMatrix& m, const IndexSet& index_set, JaffardParams params);

/// Schur-test upper bound for the norm of M : l^p_{w_in} -> l^p_{w_out},
///   C_row^{1-1/p} C_col^{1/p},
///   C_row = sup_i  sum_i' |M(i,i')| w_out_i / w_in_i',
///   C_col = sup_i' sum_i  |M(i,i')| w_out_i / w_in_i'.
/// Exact for p = 1 and p = infinity.
double schur_weighted_bound(const ComplexMatrix& m, const WeightVector& w_out,
                            const WeightVector& w_in, double p);

/// Square case with the same weight on both sides.
double schur_weighted_bound(const ComplexMatrix& m, const WeightVector& w, double p);

/// w_i = (1 + rho(i, origin))^t with the origin at flat index 0.
WeightVector poly_weight(const IndexSet& index_set, double t);

inline constexpr double kDefaultLocalisationThreshold = 1e6;

struct LocalisationReport {
  double jaffard_gram = 0.0;       // G_Psi
  double jaffard_dual_gram = 0.0;  // G_Psi~
  double jaffard_cross = 0.0;      // C_Psi~ D_Psi
  double exponent = 0.0;
  double threshold = kDefaultLocalisationThreshold;
  bool verdict = false;
};

LocalisationReport localisation_report(const FramePair& pair, JaffardParams params,
                                       double threshold = kDefaultLocalisationThreshold);

nlohmann::json to_json(const LocalisationReport& report);

}  // namespace framekernel
