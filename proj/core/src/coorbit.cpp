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

#include "framekernel/coorbit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "framekernel/matrix_io.hpp"
#include "framekernel/rng.hpp"

namespace framekernel {

namespace {

RealVector weighted_abs(const ComplexVector& c, const RealVector& w) {
  return c.cwiseAbs().cwiseProduct(w);
}

void require_length(std::size_t expected, Eigen::Index got, const char* what) {
  if (static_cast<std::size_t>(got) != expected) {
    std::ostringstream os;
    os << what << ": length " << got << ", expected " << expected;
    throw DimensionError(os.str());
  }
}

double ratio_or_zero(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// sup-embedding constant ||x||_b <= n^{max(0, 1/b - 1/a)} ||x||_a.
double embedding(Eigen::Index n, double from, double to) {
  const double inv_from = is_infinite_exponent(from) ? 0.0 : 1.0 / from;
  const double inv_to = is_infinite_exponent(to) ? 0.0 : 1.0 / to;
  return std::pow(static_cast<double>(n), std::max(0.0, inv_to - inv_from));
}

}  // namespace

SeqSpaceSpec::SeqSpaceSpec(double p_in, WeightVector w) : p(p_in), weight(std::move(w)) {
  require_exponent(p, "SeqSpaceSpec");
}

MixedSpaceSpec::MixedSpaceSpec(double p, double q, SummationOrder order, RealMatrix weight_grid)
    : p_(p), q_(q), order_(order), grid_(std::move(weight_grid)) {
  require_exponent(p_, "MixedSpaceSpec");
  require_exponent(q_, "MixedSpaceSpec");
  for (Eigen::Index c = 0; c < grid_.cols(); ++c) {
    for (Eigen::Index r = 0; r < grid_.rows(); ++r) {
      if (!(grid_(r, c) > 0.0) || !std::isfinite(grid_(r, c))) {
        throw PreconditionError("MixedSpaceSpec: weight grid must be positive and finite");
      }
    }
  }
}

MixedSpaceSpec MixedSpaceSpec::tensor(double p, double q, SummationOrder order,
                                      const WeightVector& w1, const WeightVector& w2) {
  MixedSpaceSpec spec(p, q, order, w1.values() * w2.values().transpose());
  spec.w1_ = w1;
  spec.w2_ = w2;
  return spec;
}

MixedSpaceSpec MixedSpaceSpec::tensor_reciprocal(double p, double q, SummationOrder order,
                                                 const WeightVector& w1, const WeightVector& w2) {
  return tensor(p, q, order, w1.reciprocal(), w2.reciprocal());
}

CoorbitSpec::CoorbitSpec(FramePair pair_in, SeqSpaceSpec seq_in)
    : pair(std::move(pair_in)), seq(std::move(seq_in)) {
  require_length(pair.size(), static_cast<Eigen::Index>(seq.weight.size()), "CoorbitSpec weight");
}

double weighted_seq_norm(const ComplexVector& c, const SeqSpaceSpec& spec) {
  require_length(spec.weight.size(), c.size(), "weighted_seq_norm");
  return lp_norm(weighted_abs(c, spec.weight.values()), spec.p);
}

double mixed_norm(const ComplexMatrix& c, const MixedSpaceSpec& spec) {
  const RealMatrix& w = spec.weight_grid();
  if (c.rows() != w.rows() || c.cols() != w.cols()) {
    std::ostringstream os;
    os << "mixed_norm: array is " << c.rows() << "x" << c.cols() << ", weight grid is "
       << w.rows() << "x" << w.cols();
    throw DimensionError(os.str());
  }
  const RealMatrix a = c.cwiseAbs().cwiseProduct(w);
  if (spec.order() == SummationOrder::kInnerOverFirst) {
    RealVector outer(a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j) outer(j) = lp_norm(a.col(j), spec.p());
    return lp_norm(outer, spec.q());
  }
  RealVector outer(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) outer(i) = lp_norm(a.row(i).transpose(), spec.p());
  return lp_norm(outer, spec.q());
}

double coorbit_norm(const CoorbitSpec& spec, const ComplexVector& f) {
  return weighted_seq_norm(analysis(spec.pair.dual(), f), spec.seq);
}

Complex coorbit_pairing(const CoorbitSpec& spec, const ComplexVector& f, const ComplexVector& g) {
  const ComplexVector a = analysis(spec.pair.dual(), f);
  const ComplexVector b = analysis(spec.pair.frame(), g);
  return b.dot(a);
}

ComplexVector atomic_decomposition(const CoorbitSpec& spec, const ComplexVector& f) {
  if (spec.seq.p != 1.0) {
    throw PreconditionError("atomic_decomposition: requires p = 1, got p = " +
                            exponent_to_string(spec.seq.p));
  }
  return analysis(spec.pair.dual(), f);
}

FrameChangeBounds frame_change_bounds(const FramePair& psi, const FramePair& phi,
                                      const WeightVector& w, double p) {
  if (psi.size() != phi.size() || psi.size() != w.size()) {
    throw DimensionError("frame_change_bounds: frames and weight must share one index set size");
  }
  // C_{Phi~} f = C_{Phi~} D_Psi C_{Psi~} f.
  return {schur_weighted_bound(cross_gram(psi.frame(), phi.dual()), w, p),
          schur_weighted_bound(cross_gram(phi.frame(), psi.dual()), w, p)};
}

NormInterval sequence_opnorm(const ComplexMatrix& m, const WeightVector& w_in,
                             const WeightVector& w_out, double p, double q, std::uint64_t seed) {
  require_exponent(p, "sequence_opnorm");
  require_exponent(q, "sequence_opnorm");
  if (static_cast<std::size_t>(m.cols()) != w_in.size() ||
      static_cast<std::size_t>(m.rows()) != w_out.size()) {
    throw DimensionError("sequence_opnorm: weights do not match the matrix shape");
  }
  const RealVector& win = w_in.values();
  const RealVector& wout = w_out.values();
  const Eigen::Index n_out = m.rows();
  const Eigen::Index n_in = m.cols();
  if (m.size() == 0) return {0.0, 0.0, true};

  // Columns/rows in weighted form: A(j,i) = |M(j,i)| wout_j / win_i.
  RealMatrix a = m.cwiseAbs();
  for (Eigen::Index i = 0; i < n_in; ++i) {
    for (Eigen::Index j = 0; j < n_out; ++j) a(j, i) *= wout(j) / win(i);
  }

  auto one_to_q = [&](double qq) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < n_in; ++i) best = std::max(best, lp_norm(a.col(i), qq));
    return best;
  };
  auto p_to_inf = [&](double pp) {
    const double dual = conjugate_exponent(pp);
    double best = 0.0;
    for (Eigen::Index j = 0; j < n_out; ++j) best = std::max(best, lp_norm(a.row(j).transpose(), dual));
    return best;
  };
  auto two_to_two = [&]() {
    ComplexMatrix scaled = m;
    for (Eigen::Index i = 0; i < n_in; ++i) {
      for (Eigen::Index j = 0; j < n_out; ++j) scaled(j, i) *= wout(j) / win(i);
    }
    return svd_values(scaled).front();
  };

  if (p == 1.0) {
    const double v = one_to_q(q);
    return {v, v, true};
  }
  if (is_infinite_exponent(q)) {
    const double v = p_to_inf(p);
    return {v, v, true};
  }
  if (p == 2.0 && q == 2.0) {
    const double v = two_to_two();
    return {v, v, true};
  }

  double upper = one_to_q(q) * embedding(n_in, p, 1.0);
  upper = std::min(upper, p_to_inf(p) * embedding(n_out, kInf, q));
  upper = std::min(upper, schur_weighted_bound(m, w_out, w_in, p) * embedding(n_out, p, q));
  upper = std::min(upper, two_to_two() * embedding(n_in, p, 2.0) * embedding(n_out, 2.0, q));

  auto ratio = [&](const ComplexVector& c) {
    return ratio_or_zero(lp_norm(weighted_abs(m * c, wout), q), lp_norm(weighted_abs(c, win), p));
  };
  double lower = 0.0;
  ComplexVector best = ComplexVector::Zero(n_in);
  for (Eigen::Index i = 0; i < n_in; ++i) {
    ComplexVector e = ComplexVector::Zero(n_in);
    e(i) = 1.0 / win(i);
    const double r = ratio(e);
    if (r > lower) {
      lower = r;
      best = e;
    }
  }
  Rng rng(seed, "coorbit", "sequence_opnorm", 0);
  for (Eigen::Index k = 0; k < 10 * n_in; ++k) {
    ComplexVector c = rng.disk_vector(n_in).cwiseQuotient(win.cast<Complex>());
    const double r = ratio(c);
    if (r > lower) {
      lower = r;
      best = c;
    }
  }
  double step = 0.5;
  for (Eigen::Index k = 0; k < 20 * n_in && step > 1e-6; ++k) {
    const ComplexVector c = best + step * best.norm() * rng.disk_vector(n_in) /
                                       std::sqrt(static_cast<double>(n_in));
    const double r = ratio(c);
    if (r > lower) {
      lower = r;
      best = c;
    } else {
      step *= 0.95;
    }
  }
  return {std::min(lower, upper), upper, false};
}

OpNormResult coorbit_opnorm(const ComplexMatrix& op, const CoorbitSpec& src,
                            const CoorbitSpec& dst, OpNormMethod method, std::uint64_t seed) {
  if (static_cast<std::size_t>(op.cols()) != src.pair.space_dim() ||
      static_cast<std::size_t>(op.rows()) != dst.pair.space_dim()) {
    std::ostringstream os;
    os << "coorbit_opnorm: operator is " << op.rows() << "x" << op.cols() << ", expected "
       << dst.pair.space_dim() << "x" << src.pair.space_dim();
    throw DimensionError(os.str());
  }
  require_finite(op, "coorbit_opnorm");
  const double p = src.seq.p;
  const double q = dst.seq.p;

  // Coefficient-level matrix: C_{Psi2~} O D_{Psi1}.
  const ComplexMatrix m = dst.pair.dual().vectors().adjoint() * op * src.pair.frame().vectors();
  const NormInterval seq = sequence_opnorm(m, src.seq.weight, dst.seq.weight, p, q, seed);

  OpNormResult out;
  if (method == OpNormMethod::kExact && src.pair.frame().is_basis() && seq.exact) {
    out.lower = out.upper = seq.upper;
    out.exact = true;
    out.consistency_constant = 1.0;
    out.route = "basis-closed-form";
    return out;
  }

  // ||M c|| <= ||O|| ||P1 c|| <= ||O|| S(P1) ||c|| with P1 = C_{Psi1~} D_{Psi1}.
  const double projection_bound =
      schur_weighted_bound(cross_gram(src.pair.frame(), src.pair.dual()), src.seq.weight, p);

  auto ratio = [&](const ComplexVector& f) {
    return ratio_or_zero(coorbit_norm(dst, op * f), coorbit_norm(src, f));
  };
  const Eigen::Index d = static_cast<Eigen::Index>(src.pair.space_dim());
  double lower = seq.lower / projection_bound;
  ComplexVector best = src.pair.frame().vectors().col(0);
  double best_ratio = 0.0;
  auto consider = [&](const ComplexVector& f) {
    const double r = ratio(f);
    if (r > best_ratio) {
      best_ratio = r;
      best = f;
    }
  };
  for (std::size_t i = 0; i < src.pair.size(); ++i) {
    consider(src.pair.frame().vector(i));
    consider(src.pair.dual().vector(i));
  }
  Rng rng(seed, "coorbit", "coorbit_opnorm", 0);
  for (Eigen::Index k = 0; k < 10 * d; ++k) consider(rng.disk_vector(d));
  double step = 0.5;
  for (Eigen::Index k = 0; k < 30 * d && step > 1e-6; ++k) {
    const ComplexVector f =
        best + step * best.norm() * rng.disk_vector(d) / std::sqrt(static_cast<double>(d));
    const double before = best_ratio;
    consider(f);
    if (best_ratio <= before) step *= 0.95;
  }
  lower = std::max(lower, best_ratio);

  out.upper = seq.upper;
  out.lower = std::min(lower, out.upper);
  out.exact = false;
  out.consistency_constant = seq.exact ? projection_bound : kInf;
  out.route = seq.exact ? "probes+coefficient-norm" : "probes+coefficient-bound";
  return out;
}

std::string to_string(SummationOrder order) {
  return order == SummationOrder::kInnerOverFirst ? "inner_over_first" : "inner_over_second";
}

std::string exponent_to_string(double p) {
  if (is_infinite_exponent(p)) return "inf";
  return format_double(p);
}

double exponent_from_string(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf") return kInf;
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError("invalid exponent \"" + s + "\"");
  }
  if (used != s.size()) throw ValidationError("invalid exponent \"" + s + "\"");
  require_exponent(p, "exponent");
  return p;
}

}  // namespace framekernel
