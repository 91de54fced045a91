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

#include "framekernel_checks/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "framekernel/coorbit.hpp"
#include "framekernel/frames.hpp"
#include "framekernel/generators.hpp"
#include "framekernel/localisation.hpp"
#include "framekernel/matrix_io.hpp"
#include "framekernel/rng.hpp"
#include "framekernel/tensor_kernels.hpp"
#include "framekernel/theorems.hpp"
#include "framekernel/version.hpp"
#include "framekernel_checks/oracles.hpp"

namespace framekernel::checks {

namespace {

class Check {
 public:
  Check(std::string name, const SuiteOptions& options) : options_(options) {
    result_.name = std::move(name);
  }

  const SuiteOptions& options() const { return options_; }
  std::size_t trials(std::size_t base) const { return base * options_.scale; }
  std::uint64_t seed(std::uint64_t trial) const {
    return substream_seed(options_.seed, "suite", result_.name, trial);
  }
  Rng rng(std::uint64_t trial) const { return Rng(seed(trial)); }

  void trial() { ++result_.trials; }

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (result_.pass) {
      result_.pass = false;
      result_.failure = what;
    }
  }

  void track_max(const std::string& key, double v) {
    auto& d = result_.details;
    if (!d.contains(key) || v > d[key].get<double>()) d[key] = v;
  }
  void track_min(const std::string& key, double v) {
    auto& d = result_.details;
    if (!d.contains(key) || v < d[key].get<double>()) d[key] = v;
  }
  nlohmann::json& details() { return result_.details; }

  CheckResult finish() {
    result_.details["failures"] = failures_;
    return std::move(result_);
  }

 private:
  SuiteOptions options_;
  CheckResult result_;
  std::size_t failures_ = 0;
};

std::string where(const std::string& label, std::size_t trial) {
  std::ostringstream os;
  os << label << " (trial " << trial << ")";
  return os.str();
}

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

FramePair onb_pair(std::size_t d) { return canonical_dual(onb(d)); }
FramePair gabor16() { return canonical_dual(finite_gabor(16, 2, 2, gaussian_window(16))); }
FramePair gabor8() { return canonical_dual(finite_gabor(8, 2, 2, gaussian_window(8))); }
FramePair mercedes_pair() { return canonical_dual(mercedes()); }

FramePair rotated(const FramePair& pair, std::uint64_t seed) {
  const ComplexMatrix u = random_unitary(pair.space_dim(), seed);
  return canonical_dual(Frame(pair.index_set(), ComplexMatrix(u * pair.frame().vectors())));
}

std::size_t dim_in(Rng& rng, std::size_t max_dim) {
  return 1 + static_cast<std::size_t>(rng.below(max_dim));
}

WeightVector unit_or_poly(const FramePair& pair, bool poly) {
  return poly ? poly_weight(pair.index_set(), 1.0) : WeightVector::ones(pair.size());
}

double oracle_mixed(const ComplexMatrix& k, const RealVector& w1, const RealVector& w2, double p,
                    double q, SummationOrder order) {
  std::vector<double> outer;
  if (order == SummationOrder::kInnerOverFirst) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      std::vector<double> inner;
      for (Eigen::Index i = 0; i < k.rows(); ++i) inner.push_back(std::abs(k(i, j)) * w1(i) * w2(j));
      outer.push_back(oracle::lp(inner, p));
    }
  } else {
    for (Eigen::Index i = 0; i < k.rows(); ++i) {
      std::vector<double> inner;
      for (Eigen::Index j = 0; j < k.cols(); ++j) inner.push_back(std::abs(k(i, j)) * w1(i) * w2(j));
      outer.push_back(oracle::lp(inner, p));
    }
  }
  return oracle::lp(outer, q);
}

constexpr std::array<double, 3> kExponents = {1.0, 2.0, kInf};

// ---------------------------------------------------------------------------

CheckResult kernel_roundtrip(const SuiteOptions& opts) {
  Check c("kernel_roundtrip", opts);
  const std::array<FramePair, 2> fixed = {gabor16(), canonical_dual(decaying_perturbation(32, 4.0, 0.05, opts.seed))};
  for (std::size_t t = 0; t < c.trials(100); ++t) {
    Rng rng = c.rng(t);
    auto pick = [&](std::size_t family) -> FramePair {
      if (family == 0) return onb_pair(dim_in(rng, 32));
      return fixed[family - 1];
    };
    const FramePair p1 = pick(t % 3);
    const FramePair p2 = pick((t / 3) % 3);
    const ComplexMatrix op = random_operator(p2.space_dim(), p1.space_dim(), DenseKind{}, c.seed(t));
    const GalerkinMatrix k = galerkin(op, p1, p2);
    const ComplexMatrix back = synthesize_kernel(k, p1, p2).matrix();
    const double err = (back - op).norm() / op.norm();
    c.trial();
    c.track_max("max_relative_error", err);
    c.expect(err <= 1e-9, where("round trip error " + std::to_string(err), t));

    const double gal_gap = (k.entries - oracle::galerkin(op, p1.dual().vectors(), p2.dual().vectors())).norm() /
                           std::max(1.0, k.entries.norm());
    c.track_max("max_galerkin_oracle_gap", gal_gap);
    c.expect(gal_gap <= 1e-10, where("galerkin differs from the inner-product oracle", t));
    if (t % 10 == 0) {
      const double syn_gap =
          (back - oracle::synthesize(k.entries, p1.frame().vectors(), p2.frame().vectors())).norm() /
          std::max(1.0, op.norm());
      c.track_max("max_synthesis_oracle_gap", syn_gap);
      c.expect(syn_gap <= 1e-10, where("synthesis differs from the rank-one oracle", t));
    }
  }
  return c.finish();
}

CheckResult correspondence_principle(const SuiteOptions& opts) {
  Check c("correspondence_principle", opts);
  const std::vector<std::pair<std::string, FramePair>> families = {
      {"onb8", onb_pair(8)},
      {"gabor16", gabor16()},
      {"perturbed16", canonical_dual(decaying_perturbation(16, 4.0, 0.05, opts.seed))},
      {"mercedes", mercedes_pair()}};
  std::uint64_t trial = 0;
  for (const auto& [label, pair] : families) {
    for (std::size_t t = 0; t < c.trials(10); ++t, ++trial) {
      const ComplexMatrix op = random_operator(pair.space_dim(), pair.space_dim(), DenseKind{}, c.seed(trial));
      const double r = correspondence_residual(galerkin(op, pair, pair), pair, pair);
      c.trial();
      c.track_max("max_galerkin_residual", r);
      c.expect(r <= 1e-9, where(label + ": galerkin output outside the kernel range", t));
    }
    double min_raw = kInf;
    for (std::size_t t = 0; t < c.trials(50); ++t, ++trial) {
      Rng rng = c.rng(trial);
      const auto n = static_cast<Eigen::Index>(pair.size());
      const ComplexMatrix k = rng.disk_matrix(n, n);
      const ComplexMatrix pk = correspondence_projection(k, pair, pair);
      const double idem = correspondence_residual(pk, pair, pair);
      c.trial();
      c.track_max("max_idempotence_defect", idem);
      c.expect(idem <= 1e-10, where(label + ": projection not idempotent", t));
      min_raw = std::min(min_raw, correspondence_residual(k, pair, pair));
    }
    c.details()["min_raw_residual_" + label] = min_raw;
  }
  return c.finish();
}

CheckResult outer_onb_equality(const SuiteOptions& opts) {
  Check c("outer_onb_equality", opts);
  for (std::size_t t = 0; t < c.trials(100); ++t) {
    Rng rng = c.rng(t);
    const FramePair p1 = onb_pair(dim_in(rng, 16));
    const FramePair p2 = onb_pair(dim_in(rng, 16));
    const bool poly = t % 2 == 1;
    const WeightVector w1 = unit_or_poly(p1, poly);
    const WeightVector w2 = unit_or_poly(p2, poly);
    const ComplexMatrix op = random_operator(p2.space_dim(), p1.space_dim(), DenseKind{}, c.seed(t));
    const VerificationReport r = verify_outer(op, p1, p2, w1, w2, c.seed(t), opts.tol);
    const double oracle = oracle::onb_extreme_point_norm(op, w1.values(), w2.values(), kInf);
    c.trial();
    c.track_max("max_lhs_rhs_gap", rel_gap(r.lhs, r.rhs));
    c.track_max("max_oracle_gap", rel_gap(r.rhs, oracle));
    c.expect(rel_gap(r.lhs, r.rhs) <= 1e-9, where("kernel norm differs from operator norm", t));
    c.expect(rel_gap(r.rhs, oracle) <= 1e-9, where("operator norm differs from extreme-point oracle", t));
    c.expect(rel_gap(r.lhs, oracle) <= 1e-9, where("kernel norm differs from extreme-point oracle", t));
    c.expect(r.pass, where("report failed", t));
  }
  return c.finish();
}

CheckResult schur_onb(const SuiteOptions& opts) {
  Check c("schur_onb", opts);
  std::uint64_t trial = 0;
  for (const SchurVariant variant : {SchurVariant::kFirst, SchurVariant::kSecond}) {
    for (const double p : kExponents) {
      for (std::size_t t = 0; t < c.trials(10); ++t, ++trial) {
        Rng rng = c.rng(trial);
        const FramePair p1 = onb_pair(dim_in(rng, 12));
        const FramePair p2 = onb_pair(dim_in(rng, 12));
        const bool poly = t % 2 == 1;
        const WeightVector w1 = unit_or_poly(p1, poly);
        const WeightVector w2 = unit_or_poly(p2, poly);
        const ComplexMatrix op = random_operator(p2.space_dim(), p1.space_dim(), DenseKind{}, c.seed(trial));
        const VerificationReport r =
            schur_characterization(op, p1, p2, w1, w2, p, variant, c.seed(trial), opts.tol);
        const double oracle = variant == SchurVariant::kFirst
                                  ? oracle::onb_extreme_point_norm(op, w1.values(), w2.values(), p)
                                  : oracle::onb_row_dual_norm(op, w1.values(), w2.values(), p);
        const std::string tag = r.name + " p=" + exponent_to_string(p);
        c.trial();
        c.track_max("max_oracle_gap", std::max(rel_gap(r.rhs, oracle), rel_gap(r.lhs, oracle)));
        c.expect(rel_gap(r.rhs, oracle) <= 1e-9, where(tag + ": operator norm differs from oracle", t));
        c.expect(rel_gap(r.lhs, oracle) <= 1e-9, where(tag + ": mixed norm differs from oracle", t));
        c.expect(r.pass, where(tag + ": report failed", t));
      }
    }
  }
  return c.finish();
}

CheckResult schur_gabor_budget(const SuiteOptions& opts) {
  Check c("schur_gabor_budget", opts);
  const FramePair g = gabor8();
  for (std::size_t t = 0; t < c.trials(50); ++t) {
    const double p = kExponents[t % 3];
    const SchurVariant variant = (t / 3) % 2 == 0 ? SchurVariant::kFirst : SchurVariant::kSecond;
    const bool poly = (t / 6) % 2 == 1;
    const WeightVector w = unit_or_poly(g, poly);
    const ComplexMatrix op = random_operator(8, 8, DenseKind{}, c.seed(t));
    const VerificationReport r = schur_characterization(op, g, g, w, w, p, variant, c.seed(t), opts.tol);
    c.trial();
    c.track_max("max_budget", r.budget);
    c.track_max("max_ratio", r.ratio);
    c.track_min("min_ratio", r.ratio);
    c.expect(r.pass, where(r.name + " p=" + exponent_to_string(p) + ": ratio outside budget", t));
  }
  return c.finish();
}

CheckResult projective_sandwich(const SuiteOptions& opts) {
  Check c("projective_sandwich", opts);
  for (std::size_t t = 0; t < c.trials(50); ++t) {
    Rng rng = c.rng(t);
    const FramePair p1 = onb_pair(dim_in(rng, 8));
    const FramePair p2 = onb_pair(dim_in(rng, 8));
    const WeightVector w1 = WeightVector::ones(p1.size());
    const WeightVector w2 = WeightVector::ones(p2.size());
    const ComplexMatrix k = random_operator(p2.space_dim(), p1.space_dim(), DenseKind{}, c.seed(t));
    const VerificationReport r = verify_projective(KernelRep(k), p1, p2, w1, w2, opts.tol);
    const double oracle = oracle::weighted_abs_sum(k.transpose(), w1.values(), w2.values());
    c.trial();
    c.track_max("max_onb_gap", std::max(rel_gap(r.lhs, oracle), rel_gap(r.rhs, oracle)));
    c.expect(rel_gap(r.lhs, oracle) <= 1e-10 && rel_gap(r.rhs, oracle) <= 1e-10,
             where("ONB lower/upper differ from sum |k|", t));
    c.expect(r.pass, where("ONB report failed", t));
  }
  const std::array<FramePair, 2> general = {mercedes_pair(),
                                            canonical_dual(decaying_perturbation(6, 3.0, 0.1, opts.seed))};
  for (std::size_t t = 0; t < c.trials(50); ++t) {
    const FramePair& p1 = general[t % 2];
    const FramePair& p2 = general[(t / 2) % 2];
    const bool poly = (t / 4) % 2 == 1;
    const ComplexMatrix k = random_operator(p2.space_dim(), p1.space_dim(), DenseKind{}, c.seed(1000 + t));
    const VerificationReport r =
        verify_projective(KernelRep(k), p1, p2, unit_or_poly(p1, poly), unit_or_poly(p2, poly), opts.tol);
    c.trial();
    c.track_max("max_general_ratio", r.ratio);
    c.track_max("max_general_budget", r.budget);
    c.expect(r.lhs >= r.rhs * (1.0 - 1e-12), where("upper below lower", t));
    c.expect(r.pass, where("general sandwich failed", t));
  }
  return c.finish();
}

CheckResult inner_theorem(const SuiteOptions& opts) {
  Check c("inner_theorem", opts);
  for (std::size_t t = 0; t < c.trials(50); ++t) {
    Rng rng = c.rng(t);
    const FramePair p1 = onb_pair(dim_in(rng, 8));
    const FramePair p2 = onb_pair(dim_in(rng, 8));
    const bool poly = t % 2 == 1;
    const WeightVector w1 = unit_or_poly(p1, poly);
    const WeightVector w2 = unit_or_poly(p2, poly);
    const ComplexMatrix k = random_operator(p2.space_dim(), p1.space_dim(), DenseKind{}, c.seed(t));
    const auto [dec, r] = verify_inner(KernelRep(k), p1, p2, w1, w2, opts.tol);
    const double residual = (dec.reconstruct(p1.space_dim(), p2.space_dim()).matrix() - k).norm() /
                            std::max(1.0, k.norm());
    const double oracle = oracle::weighted_abs_sum(k.transpose(), w1.values(), w2.values());
    c.trial();
    c.track_max("max_residual", residual);
    c.track_max("max_nuclear_gap", rel_gap(dec.nuclear_sum, oracle));
    c.expect(residual <= 1e-9, where("ONB reconstruction residual", t));
    c.expect(rel_gap(dec.nuclear_sum, oracle) <= 1e-10, where("ONB nuclear sum differs from H^{1,1} oracle", t));
    c.expect(rel_gap(r.rhs, oracle) <= 1e-10, where("ONB kernel norm differs from oracle", t));
    c.expect(r.pass, where("ONB report failed", t));
  }
  const FramePair m = mercedes_pair();
  const WeightVector ones = WeightVector::ones(3);
  for (std::size_t t = 0; t < c.trials(50); ++t) {
    const ComplexMatrix k = random_operator(2, 2, DenseKind{}, c.seed(1000 + t));
    const auto [dec, r] = verify_inner(KernelRep(k), m, m, ones, ones, opts.tol);
    const double residual = (dec.reconstruct(2, 2).matrix() - k).norm() / std::max(1.0, k.norm());
    // Mercedes atoms all have H^1 norm 4/3.
    const ComplexMatrix coeffs = oracle::galerkin(k, m.dual().vectors(), m.dual().vectors());
    const double oracle = (16.0 / 9.0) * oracle::weighted_abs_sum(coeffs, ones.values(), ones.values());
    c.trial();
    c.track_max("max_mercedes_ratio", r.ratio);
    c.expect(residual <= 1e-9, where("Mercedes reconstruction residual", t));
    c.expect(rel_gap(dec.nuclear_sum, oracle) <= 1e-10, where("Mercedes nuclear sum differs from 16/9 sum |k|", t));
    c.expect(r.pass, where("Mercedes report outside budget", t));
  }
  return c.finish();
}

CheckResult frame_independence(const SuiteOptions& opts) {
  Check c("frame_independence", opts);
  const FramePair g8 = gabor8();
  for (std::size_t t = 0; t < c.trials(100); ++t) {
    Rng rng = c.rng(t);
    const std::size_t scenario = t % 5;
    const double p = kExponents[rng.below(3)];
    const double q = kExponents[rng.below(3)];
    const SummationOrder order =
        rng.below(2) == 0 ? SummationOrder::kInnerOverFirst : SummationOrder::kInnerOverSecond;
    std::string label;
    VerificationReport r;
    ComplexMatrix op;
    std::optional<FramePair> a1, a2, b1, b2;
    std::optional<MixedSpaceSpec> spec;
    if (scenario == 0) {
      label = "onb_vs_rotated_hinf";
      const std::size_t d = 2 + static_cast<std::size_t>(rng.below(7));
      a1 = a2 = onb_pair(d);
      b1 = b2 = rotated(*a1, c.seed(t));
      spec = MixedSpaceSpec::tensor(kInf, kInf, SummationOrder::kInnerOverFirst, WeightVector::ones(d),
                                    WeightVector::ones(d));
    } else if (scenario == 1) {
      const bool sup_norm = (t / 5) % 2 == 1;
      label = sup_norm ? "onb_vs_repeated_hinf" : "onb_vs_repeated_h11";
      const std::size_t d = 2 + static_cast<std::size_t>(rng.below(5));
      a1 = a2 = onb_pair(d);
      b1 = b2 = canonical_dual(repeated_first_basis(d));
      const double e = sup_norm ? kInf : 1.0;
      spec = MixedSpaceSpec::tensor(e, e, SummationOrder::kInnerOverFirst, WeightVector::ones(d),
                                    WeightVector::ones(d));
    } else if (scenario == 2) {
      label = "mercedes_vs_rotated";
      a1 = a2 = mercedes_pair();
      b1 = b2 = rotated(*a1, c.seed(t));
      spec = MixedSpaceSpec::tensor(p, q, order, WeightVector::ones(3), WeightVector::ones(3));
    } else if (scenario == 3) {
      label = "perturbed_vs_onb_poly";
      a1 = a2 = onb_pair(8);
      b1 = b2 = canonical_dual(decaying_perturbation(8, 4.0, 0.1, c.seed(t)));
      const WeightVector w = poly_weight(a1->index_set(), 1.0);
      spec = MixedSpaceSpec::tensor(p, q, order, w, w);
    } else {
      label = "identical";
      a1 = a2 = b1 = b2 = g8;
      spec = MixedSpaceSpec::tensor(p, q, order, WeightVector::ones(16), WeightVector::ones(16));
    }
    op = random_operator(a2->space_dim(), a1->space_dim(), DenseKind{}, c.seed(t));
    r = verify_frame_independence(op, {*a1, *a2}, {*b1, *b2}, *spec, opts.tol);

    const ComplexMatrix ka = oracle::galerkin(op, a1->dual().vectors(), a2->dual().vectors());
    const double oracle_a = oracle_mixed(ka, spec->first_factor()->values(), spec->second_factor()->values(),
                                         spec->p(), spec->q(), spec->order());
    c.trial();
    c.track_max("max_budget_" + label, r.budget);
    c.expect(rel_gap(r.rhs, oracle_a) <= 1e-10, where(label + ": norm differs from oracle", t));
    c.expect(r.pass, where(label + ": ratio outside cross-Gram budget", t));
    if (scenario == 4) {
      c.expect(std::abs(r.ratio - 1.0) <= 1e-12, where("identical frames: ratio is not 1", t));
    }
    if (label == "onb_vs_repeated_hinf") {
      c.expect(r.budget > 1.0, where("redundant frame change has unit sup-norm budget", t));
    }
    if (label == "onb_vs_repeated_h11") {
      // Splitting e1 into two halves preserves every l^1 sum exactly.
      c.expect(std::abs(r.ratio - 1.0) <= 1e-12, where("H^{1,1} norm changed under duplication", t));
    }
  }
  return c.finish();
}

CheckResult schatten_sufficiency(const SuiteOptions& opts) {
  Check c("schatten_sufficiency", opts);
  constexpr std::array<double, 3> ps = {1.0, 1.5, 2.0};
  for (std::size_t t = 0; t < c.trials(50); ++t) {
    for (const double p : ps) {
      Rng rng = c.rng(t);
      const std::size_t d1 = dim_in(rng, 16);
      const std::size_t d2 = dim_in(rng, 16);
      const FramePair p1 = onb_pair(d1);
      const FramePair p2 = onb_pair(d2);
      const ComplexMatrix op = random_operator(d2, d1, DenseKind{}, c.seed(t));
      const VerificationReport r = schatten_check(op, p1, p2, p, opts.tol);
      const double oracle_rhs = oracle::column_norm_sum(op, p);
      const std::string tag = "p=" + format_double(p);
      c.trial();
      c.track_max("max_ratio", r.ratio);
      c.expect(r.lhs <= r.rhs * (1.0 + 1e-12), where(tag + ": Schatten norm exceeds column sum", t));
      c.expect(rel_gap(r.rhs, oracle_rhs) <= 1e-10, where(tag + ": column sum differs from oracle", t));
      c.expect(r.pass, where(tag + ": report failed", t));
      if (p == 2.0) {
        const double frob = oracle::frobenius(op);
        const double h22 = r.details.at("kernel_norm_h2p").get<double>();
        c.track_max("max_three_way_gap", std::max({rel_gap(r.lhs, frob), rel_gap(r.rhs, frob), rel_gap(h22, frob)}));
        c.expect(rel_gap(r.lhs, frob) <= 1e-10 && rel_gap(r.rhs, frob) <= 1e-10 && rel_gap(h22, frob) <= 1e-10,
                 where("p=2: Schatten, Frobenius and kernel norm disagree", t));
      }
    }
  }
  const FramePair m = mercedes_pair();
  for (std::size_t t = 0; t < c.trials(10); ++t) {
    const ComplexMatrix op = random_operator(2, 2, DenseKind{}, c.seed(1000 + t));
    const VerificationReport r = schatten_check(op, m, m, 1.0 + 0.1 * static_cast<double>(t % 11), opts.tol);
    c.trial();
    c.expect(r.pass, where("Mercedes Schatten bound failed", t));
  }
  return c.finish();
}

CheckResult gabor_tightness(const SuiteOptions& opts) {
  Check c("gabor_tightness", opts);
  std::uint64_t trial = 0;
  for (const std::size_t n : {4u, 6u, 8u, 12u, 16u}) {
    std::vector<std::pair<std::string, ComplexVector>> windows = {
        {"gaussian", gaussian_window(n)}, {"delta", ComplexVector::Unit(static_cast<Eigen::Index>(n), 0)}};
    windows.emplace_back("ones", ComplexVector::Constant(static_cast<Eigen::Index>(n),
                                                         Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0)));
    for (std::size_t r = 0; r < c.trials(2); ++r) {
      windows.emplace_back("random", Rng(c.seed(trial++)).disk_vector(static_cast<Eigen::Index>(n)));
    }
    for (const auto& [label, window] : windows) {
      const Frame f = finite_gabor(n, 1, 1, window);
      const double expected = static_cast<double>(n) * window.squaredNorm();
      const std::vector<double> spectrum = oracle::frame_operator_spectrum(f.vectors());
      const double tight = f.bounds().upper / f.bounds().lower - 1.0;
      c.trial();
      c.track_max("max_tightness_defect", tight);
      c.expect(tight <= 1e-9, label + " window, N=" + std::to_string(n) + ": not tight");
      c.expect(rel_gap(f.bounds().lower, expected) <= 1e-9, label + ": lower bound is not N ||g||^2");
      c.expect(rel_gap(spectrum.front(), expected) <= 1e-9 && rel_gap(spectrum.back(), expected) <= 1e-9,
               label + ": spectrum oracle disagrees");
    }
  }
  return c.finish();
}

CheckResult perturbation_jaffard(const SuiteOptions& opts) {
  Check c("perturbation_jaffard", opts);
  constexpr std::size_t kDim = 16;
  constexpr double kDecay = 4.0;
  constexpr double kEps = 0.05;
  const double bound = 1.0 + 10.0 * kEps;
  for (std::size_t t = 0; t < c.trials(20); ++t) {
    const Frame f = decaying_perturbation(kDim, kDecay, kEps, c.seed(t));
    const double j = jaffard_norm(gram(f), f.index_set(), {kDecay - 1.0});
    const auto n = static_cast<Eigen::Index>(kDim);
    const double pert = svd_values(ComplexMatrix(f.vectors() - ComplexMatrix::Identity(n, n))).front();
    c.trial();
    c.track_max("max_jaffard", j);
    c.expect(j <= bound, where("Jaffard norm at exponent s-1 above 1 + 10 eps", t));
    c.expect(f.bounds().lower >= (1.0 - pert) * (1.0 - pert) * (1.0 - 1e-12) &&
                 f.bounds().upper <= (1.0 + pert) * (1.0 + pert) * (1.0 + 1e-12),
             where("frame bounds outside the perturbation band", t));
  }
  c.details()["bound"] = bound;
  return c.finish();
}

CheckResult element_norm_bound(const SuiteOptions& opts) {
  Check c("element_norm_bound", opts);
  std::vector<std::pair<std::string, FramePair>> families = {
      {"onb6", onb_pair(6)}, {"mercedes", mercedes_pair()}, {"gabor8", gabor8()}, {"gabor16", gabor16()}};
  for (std::size_t t = 0; t < c.trials(3); ++t) {
    families.emplace_back("perturbed16", canonical_dual(decaying_perturbation(16, 3.0, 0.1, c.seed(t))));
  }
  for (const auto& [label, pair] : families) {
    for (const double t_exp : {0.0, 1.0, 2.0}) {
      const WeightVector w = poly_weight(pair.index_set(), t_exp);
      for (const double p : kExponents) {
        const double frame_bound = schur_weighted_bound(cross_gram(pair.frame(), pair.dual()), w, p);
        const double dual_bound = schur_weighted_bound(gram(pair.dual()), w, p);
        c.trial();
        for (std::size_t i = 0; i < pair.size(); ++i) {
          const double nf = oracle::coorbit_norm(pair.frame().vector(i), pair.dual().vectors(), w.values(), p);
          const double nd = oracle::coorbit_norm(pair.dual().vector(i), pair.dual().vectors(), w.values(), p);
          c.track_max("max_frame_slack", nf / (frame_bound * w[i]));
          c.track_max("max_dual_slack", nd / (dual_bound * w[i]));
          c.expect(nf <= frame_bound * w[i] * (1.0 + 1e-12), label + ": frame element above bound");
          c.expect(nd <= dual_bound * w[i] * (1.0 + 1e-12), label + ": dual element above bound");
        }
      }
    }
  }
  return c.finish();
}

CheckResult compression_sweep(const SuiteOptions& opts) {
  Check c("compression_sweep", opts);
  const FramePair g = gabor16();
  const WeightVector ones = WeightVector::ones(g.size());
  ComplexMatrix conv(16, 16);
  for (Eigen::Index r = 0; r < 16; ++r) {
    for (Eigen::Index col = 0; col < 16; ++col) {
      const double dc = static_cast<double>(std::min((r - col + 16) % 16, (col - r + 16) % 16));
      conv(r, col) = std::exp(-std::numbers::pi * dc * dc / 4.0);
    }
  }
  const GalerkinMatrix k = galerkin(conv, g, g);
  const std::vector<double> taus = compression_thresholds(k, ones, ones, c.trials(8));
  std::size_t prev_kept = k.entries.size() + 1;
  double prev_err = -1.0;
  for (const double tau : taus) {
    const auto [kt, rep] = compress_operator(conv, g, g, ones, ones, tau);
    c.trial();
    c.expect(rep.kept < prev_kept, "sparsity not strictly decreasing at tau=" + format_double(tau));
    c.expect(rep.error_surrogate <= tau, "error surrogate above tau=" + format_double(tau));
    c.expect(rep.error_surrogate >= prev_err, "error surrogate decreased at tau=" + format_double(tau));
    prev_kept = rep.kept;
    prev_err = rep.error_surrogate;
  }
  c.details()["thresholds"] = taus.size();
  c.details()["final_kept"] = prev_kept;
  const auto [k0, rep0] = compress_operator(conv, g, g, ones, ones, 0.0);
  c.trial();
  c.expect(rep0.kept == rep0.total && rep0.error_surrogate == 0.0, "tau=0 dropped entries");
  c.expect(rep0.spectral_error.value_or(1.0) <= 1e-9, "tau=0 does not reproduce the operator");
  const FramePair e = onb_pair(6);
  const auto [ki, repi] = compress_operator(ComplexMatrix::Identity(6, 6), e, e, WeightVector::ones(6),
                                            WeightVector::ones(6), 0.5);
  c.trial();
  c.expect(repi.kept == 6 && repi.error_surrogate == 0.0, "identity compression kept the wrong count");
  return c.finish();
}

CheckResult frame_reconstruction(const SuiteOptions& opts) {
  Check c("frame_reconstruction", opts);
  const std::vector<std::pair<std::string, FramePair>> families = {
      {"onb5", onb_pair(5)},
      {"mercedes", mercedes_pair()},
      {"gabor16", gabor16()},
      {"perturbed32", canonical_dual(decaying_perturbation(32, 4.0, 0.05, opts.seed))},
      {"repeated4", canonical_dual(repeated_first_basis(4))}};
  std::uint64_t trial = 0;
  for (const auto& [label, pair] : families) {
    const ComplexMatrix s = pair.frame().vectors() * pair.frame().vectors().adjoint();
    const ComplexMatrix dual_oracle = s.fullPivLu().solve(pair.frame().vectors());
    const double dual_gap = (dual_oracle - pair.dual().vectors()).norm() / dual_oracle.norm();
    c.track_max("max_dual_gap", dual_gap);
    c.expect(dual_gap <= 1e-10, label + ": canonical dual differs from the LU oracle");
    for (std::size_t t = 0; t < c.trials(20); ++t, ++trial) {
      const ComplexVector f = c.rng(trial).disk_vector(static_cast<Eigen::Index>(pair.space_dim()));
      const double r = reconstruction_residual(pair, f);
      c.trial();
      c.track_max("max_residual", r);
      c.expect(r <= 1e-9, where(label + ": reconstruction residual", t));
    }
  }
  return c.finish();
}

}  // namespace

const std::vector<CheckEntry>& registered_checks() {
  static const std::vector<CheckEntry> checks = {
      {"kernel_roundtrip", "synthesize_kernel(galerkin(O)) reproduces O", kernel_roundtrip},
      {"correspondence_principle", "galerkin outputs lie in the range of an idempotent projection",
       correspondence_principle},
      {"outer_onb_equality", "outer kernel norm equals operator norm on orthonormal bases", outer_onb_equality},
      {"schur_onb", "Schur characterizations are equalities on orthonormal bases", schur_onb},
      {"schur_gabor_budget", "Schur characterizations within budget for Gabor frames", schur_gabor_budget},
      {"projective_sandwich", "H^{1,1} norm <= nuclear sum <= budget * H^{1,1} norm", projective_sandwich},
      {"inner_theorem", "rank-one decompositions reconstruct the kernel", inner_theorem},
      {"frame_independence", "kernel norms agree across frames up to cross-Gram budgets", frame_independence},
      {"schatten_sufficiency", "Schatten norms bounded by column sums", schatten_sufficiency},
      {"gabor_tightness", "full-lattice Gabor systems are tight", gabor_tightness},
      {"perturbation_jaffard", "perturbed bases keep polynomial off-diagonal decay", perturbation_jaffard},
      {"element_norm_bound", "weighted H^p norms of frame elements are bounded by Schur constants", element_norm_bound},
      {"compression_sweep", "threshold compression is monotone with controlled error", compression_sweep},
      {"frame_reconstruction", "canonical duals reconstruct every vector", frame_reconstruction},
  };
  return checks;
}

CheckResult run_check(const std::string& name, const SuiteOptions& options) {
  const auto& checks = registered_checks();
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckEntry& e) { return e.name == name; });
  if (it == checks.end()) throw std::out_of_range("unknown check \"" + name + "\"");
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  try {
    result = it->run(options);
  } catch (const std::exception& e) {
    result = CheckResult{};
    result.name = name;
    result.pass = false;
    result.failure = std::string("exception: ") + e.what();
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

bool is_known_suite(const std::string& name) { return name == "fast" || name == "full"; }

SuiteSummary run_suite(const std::string& name, std::uint64_t seed, double tol) {
  if (!is_known_suite(name)) throw std::invalid_argument("unknown suite \"" + name + "\"");
  SuiteOptions options{seed, name == "full" ? 3u : 1u, tol};
  SuiteSummary summary;
  summary.suite = name;
  summary.seed = seed;
  for (const auto& entry : registered_checks()) {
    summary.checks.push_back(run_check(entry.name, options));
    const CheckResult& r = summary.checks.back();
    if (!r.pass && summary.pass) {
      summary.pass = false;
      summary.first_failure = r.name + ": " + r.failure;
    }
  }
  return summary;
}

nlohmann::json to_json(const CheckResult& result) {
  nlohmann::json j = {{"name", result.name},
                      {"pass", result.pass},
                      {"trials", result.trials},
                      {"details", result.details},
                      {"elapsed_ms", result.elapsed_ms}};
  if (!result.pass) j["failure"] = result.failure;
  return j;
}

nlohmann::json to_json(const SuiteSummary& summary) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : summary.checks) checks.push_back(to_json(c));
  nlohmann::json j = {{"suite", summary.suite},
                      {"seed", summary.seed},
                      {"pass", summary.pass},
                      {"check_count", summary.checks.size()},
                      {"rng", std::string(kRngVersion)},
                      {"version", std::string(kVersion)},
                      {"checks", std::move(checks)}};
  if (!summary.pass) j["first_failure"] = summary.first_failure;
  return j;
}

nlohmann::json strip_timing(const nlohmann::json& j) {
  if (j.is_object()) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : j.items()) {
      if (key == "elapsed_ms") continue;
      out[key] = strip_timing(value);
    }
    return out;
  }
  if (j.is_array()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

}  // namespace framekernel::checks
