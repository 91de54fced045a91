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

// Finite-dimensional checks of the operator/kernel correspondences.
//
// Each check returns a VerificationReport whose `budget` is computed from the
// frames at hand (frame bounds and Schur bounds of Gram and cross-Gram
// matrices). A report passes when its ratio lies inside the admissible band
// for its mode, with a relative slack of `tol`:
//   equivalence  1/budget <= ratio <= budget
//   upper        ratio <= budget
//   sandwich     1 <= ratio <= budget

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "framekernel/coorbit.hpp"
#include "framekernel/frames.hpp"
#include "framekernel/localisation.hpp"
#include "framekernel/numeric.hpp"
#include "framekernel/tensor_kernels.hpp"

namespace framekernel {

enum class ReportMode { kEquivalence, kUpper, kSandwich };

struct VerificationReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 1.0;
  double budget = 1.0;
  bool pass = false;
  ReportMode mode = ReportMode::kEquivalence;
  std::uint64_t seed = 0;
  nlohmann::json details = nlohmann::json::object();
};

/// Fills ratio and pass from lhs, rhs and budget.
void finalize(VerificationReport& report, double tol = kDefaultTolerance);

nlohmann::json to_json(const VerificationReport& report);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);
std::string to_string(ReportMode mode);

struct RankOneTerm {
  ComplexVector f;
  ComplexVector g;
};

struct RankOneDecomposition {
  std::vector<RankOneTerm> terms;
  double nuclear_sum = 0.0;

  /// sum_r simple_tensor(f_r, g_r) as a d2 x d1 kernel.
  KernelRep reconstruct(std::size_t input_dim, std::size_t output_dim) const;
};

struct CompressionReport {
  double threshold = 0.0;
  std::size_t kept = 0;
  std::size_t total = 0;
  double sparsity = 0.0;
  double error_surrogate = 0.0;
  /// ||O - synthesize_kernel(k_tau)||_2, filled for spaces of dimension <= 64.
  std::optional<double> spectral_error;
};

nlohmann::json to_json(const CompressionReport& report);

/// ||K||_{H^{inf,inf}_{1/(w1 (x) w2)}} against ||O||_{H^1_{w1} -> H^inf_{1/w2}}.
VerificationReport verify_outer(const ComplexMatrix& op, const FramePair& pair1,
                                const FramePair& pair2, const WeightVector& w1,
                                const WeightVector& w2, std::uint64_t seed = 0,
                                double tol = kDefaultTolerance);

/// Rank-one decomposition K = sum (psi_1i, k_ij psi_2j) over nonzero k_ij,
/// with its nuclear sum compared to ||K||_{H^{1,1}_{w1 (x) w2}}.
std::pair<RankOneDecomposition, VerificationReport> verify_inner(
    const KernelRep& kernel, const FramePair& pair1, const FramePair& pair2,
    const WeightVector& w1, const WeightVector& w2, double tol = kDefaultTolerance);

/// lower = ||K||_{H^{1,1}}, upper = nuclear sum of the canonical decomposition.
VerificationReport verify_projective(const KernelRep& kernel, const FramePair& pair1,
                                     const FramePair& pair2, const WeightVector& w1,
                                     const WeightVector& w2, double tol = kDefaultTolerance);

enum class SchurVariant {
  kFirst,   // ||O||_{H^1_{w1} -> H^p_{1/w2}}    vs  script-l^{p,inf}_{1/(w1 (x) w2)}
  kSecond,  // ||O||_{H^p_{w1} -> H^inf_{1/w2}}  vs  l^{q,inf}_{1/(w1 (x) w2)}, 1/p + 1/q = 1
};

VerificationReport schur_characterization(const ComplexMatrix& op, const FramePair& pair1,
                                          const FramePair& pair2, const WeightVector& w1,
                                          const WeightVector& w2, double p, SchurVariant variant,
                                          std::uint64_t seed = 0,
                                          double tol = kDefaultTolerance);

struct PairOfFrames {
  FramePair first;
  FramePair second;
};

/// Kernel norms of one operator in two tensor frames. Both specs must be
/// built with MixedSpaceSpec::tensor or tensor_reciprocal and share p, q and
/// the summation order.
VerificationReport verify_frame_independence(const ComplexMatrix& op, const PairOfFrames& a,
                                             const PairOfFrames& b, const MixedSpaceSpec& spec_a,
                                             const MixedSpaceSpec& spec_b,
                                             double tol = kDefaultTolerance);

/// Single-spec form. When the index sets of `a` and `b` differ in size the
/// spec must carry unit weights, which are then resized for `b`.
VerificationReport verify_frame_independence(const ComplexMatrix& op, const PairOfFrames& a,
                                             const PairOfFrames& b, const MixedSpaceSpec& spec,
                                             double tol = kDefaultTolerance);

/// Schatten-p norm of O against (sum_i ||O psi1~_i||^p)^{1/p}, p in [1, 2].
/// One-sided: lhs <= sqrt(B1) rhs.
VerificationReport schatten_check(const ComplexMatrix& op, const FramePair& pair1,
                                  const FramePair& pair2, double p,
                                  double tol = kDefaultTolerance);

/// Zeroes the Galerkin entries with |k_ij| / (w1_i w2_j) < tau.
std::pair<GalerkinMatrix, CompressionReport> compress_operator(
    const ComplexMatrix& op, const FramePair& pair1, const FramePair& pair2,
    const WeightVector& w1, const WeightVector& w2, double tau);

/// Up to `count` increasing thresholds, one between each pair of consecutive
/// distinct values of |k_ij| / (w1_i w2_j), so that each step drops entries.
std::vector<double> compression_thresholds(const GalerkinMatrix& k, const WeightVector& w1,
                                           const WeightVector& w2, std::size_t count);

}  // namespace framekernel
