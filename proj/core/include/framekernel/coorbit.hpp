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

// Weighted and mixed-norm sequence spaces and the co-orbit norms they induce
// through canonical-dual frame coefficients. Everything is finite
// dimensional, so H^p_w(Psi) is C^d with the norm ||C_{Psi~} f||_{l^p_w};
// p = infinity is the sup norm of weighted coefficients.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "framekernel/frames.hpp"
#include "framekernel/localisation.hpp"
#include "framekernel/numeric.hpp"

namespace framekernel {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// l^p_w(I): ||c|| = ||c . w||_p.
struct SeqSpaceSpec {
  SeqSpaceSpec(double p, WeightVector weight);

  double p;
  WeightVector weight;
};

/// Which index the inner norm runs over. The two orders only differ when p != q.
enum class SummationOrder {
  kInnerOverFirst,   // l^{p,q}:  (sum_j (sum_i |c_ij w_ij|^p)^{q/p})^{1/q}
  kInnerOverSecond,  // script-l^{p,q}: (sum_i (sum_j |c_ij w_ij|^p)^{q/p})^{1/q}
};

/// Mixed-norm space over I x J. Rows of coefficient arrays are indexed by I,
/// columns by J.
class MixedSpaceSpec {
 public:
  MixedSpaceSpec(double p, double q, SummationOrder order, RealMatrix weight_grid);

  /// Separable weight w1 (x) w2; the factors are kept for budget computations.
  static MixedSpaceSpec tensor(double p, double q, SummationOrder order, const WeightVector& w1,
                               const WeightVector& w2);

  /// Weight 1/(w1 (x) w2), the dual weighting used by the kernel theorems.
  static MixedSpaceSpec tensor_reciprocal(double p, double q, SummationOrder order,
                                          const WeightVector& w1, const WeightVector& w2);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  SummationOrder order() const noexcept { return order_; }
  const RealMatrix& weight_grid() const noexcept { return grid_; }
  const std::optional<WeightVector>& first_factor() const noexcept { return w1_; }
  const std::optional<WeightVector>& second_factor() const noexcept { return w2_; }

 private:
  double p_;
  double q_;
  SummationOrder order_;
  RealMatrix grid_;
  std::optional<WeightVector> w1_;
  std::optional<WeightVector> w2_;
};

struct CoorbitSpec {
  CoorbitSpec(FramePair pair, SeqSpaceSpec seq);

  FramePair pair;
  SeqSpaceSpec seq;
};

double weighted_seq_norm(const ComplexVector& c, const SeqSpaceSpec& spec);

double mixed_norm(const ComplexMatrix& c, const MixedSpaceSpec& spec);

/// ||C_{Psi~} f||_{l^p_w}.
double coorbit_norm(const CoorbitSpec& spec, const ComplexVector& f);

/// <C_{Psi~} f, C_Psi g> = sum_i (C_{Psi~} f)_i conj((C_Psi g)_i).
Complex coorbit_pairing(const CoorbitSpec& spec, const ComplexVector& f, const ComplexVector& g);

/// Canonical atomic decomposition c = C_{Psi~} f, so that f = D_Psi c and
/// ||c||_{l^1_w} = ||f||_{H^1_w}. Requires spec.seq.p == 1.
ComplexVector atomic_decomposition(const CoorbitSpec& spec, const ComplexVector& f);

/// Bounds relating the co-orbit norms of two frames of the same space:
///   ||f||_Phi <= forward ||f||_Psi   and   ||f||_Psi <= backward ||f||_Phi,
/// both obtained from Schur bounds of the cross-Gram matrices.
struct FrameChangeBounds {
  double forward = 0.0;
  double backward = 0.0;
};

FrameChangeBounds frame_change_bounds(const FramePair& psi, const FramePair& phi,
                                      const WeightVector& w, double p);

/// Bounds for the norm of M : l^p_{w_in} -> l^q_{w_out}.
struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
};

/// Exact when p = 1, q = infinity or p = q = 2; otherwise a probe-based lower
/// bound and the smallest of several Schur/Hölder upper bounds.
NormInterval sequence_opnorm(const ComplexMatrix& m, const WeightVector& w_in,
                             const WeightVector& w_out, double p, double q,
                             std::uint64_t seed = 0);

enum class OpNormMethod { kExact, kBound };

struct OpNormResult {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  /// Provable bound on upper / (true norm) when the sequence-level norm is
  /// exact; +inf otherwise.
  double consistency_constant = kInf;
  std::string route;
};

/// Norm of O : H^p_{w1}(Psi1) -> H^q_{w2}(Psi2) with p, w1 from `src` and
/// q, w2 from `dst`. Always lower <= true norm <= upper.
///
/// With kExact the result is a point (lower == upper) whenever the source
/// frame is a basis and the coefficient-level problem has a closed form
/// (p = 1, q = infinity, or p = q = 2). Otherwise the interval combines
/// 10*d seeded random probes plus local refinement (lower) with the
/// sequence-level norm of C_{Psi2~} O D_{Psi1} (upper).
OpNormResult coorbit_opnorm(const ComplexMatrix& op, const CoorbitSpec& src,
                            const CoorbitSpec& dst, OpNormMethod method = OpNormMethod::kExact,
                            std::uint64_t seed = 0);

std::string to_string(SummationOrder order);
/// "inf" for infinity, otherwise the shortest round-trip decimal.
std::string exponent_to_string(double p);
/// Accepts numbers or the strings "inf" / "infinity".
double exponent_from_string(const std::string& s);

}  // namespace framekernel
