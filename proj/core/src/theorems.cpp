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

#include "framekernel/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "framekernel/matrix_io.hpp"

namespace framekernel {

namespace {

constexpr std::size_t kSpectralErrorMaxDim = 64;

void require_operator_shape(const ComplexMatrix& op, const FramePair& pair1,
                            const FramePair& pair2, const char* what) {
  if (static_cast<std::size_t>(op.cols()) != pair1.space_dim() ||
      static_cast<std::size_t>(op.rows()) != pair2.space_dim()) {
    std::ostringstream os;
    os << what << ": operator is " << op.rows() << "x" << op.cols() << ", frames expect "
       << pair2.space_dim() << "x" << pair1.space_dim();
    throw DimensionError(os.str());
  }
  require_finite(op, what);
}

void require_weights(const FramePair& pair1, const FramePair& pair2, const WeightVector& w1,
                     const WeightVector& w2, const char* what) {
  if (w1.size() != pair1.size() || w2.size() != pair2.size()) {
    std::ostringstream os;
    os << what << ": weights have sizes " << w1.size() << " and " << w2.size()
       << ", frames have " << pair1.size() << " and " << pair2.size() << " elements";
    throw DimensionError(os.str());
  }
}

// sup_i ||psi_i||_{H^1_w} / w_i for the frame or the dual of `pair`.
double h1_atom_bound(const FramePair& pair, const Frame& atoms, const WeightVector& w) {
  return schur_weighted_bound(cross_gram(atoms, pair.dual()), w, 1.0);
}

RealVector h1_atom_norms(const FramePair& pair, const WeightVector& w) {
  const RealMatrix a = cross_gram(pair.frame(), pair.dual()).cwiseAbs();
  return a.transpose() * w.values();
}

// upper / midpoint of the operator-norm interval.
double interval_spread(const OpNormResult& r) {
  if (r.upper == 0.0) return 1.0;
  return 2.0 * r.upper / (r.lower + r.upper);
}

nlohmann::json interval_json(const OpNormResult& r) {
  return {{"lower", r.lower},
          {"upper", r.upper},
          {"exact", r.exact},
          {"route", r.route},
          {"consistency_constant", std::isfinite(r.consistency_constant)
                                       ? nlohmann::json(r.consistency_constant)
                                       : nlohmann::json("inf")}};
}

nlohmann::json finite_or_string(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

// ||k|| <= kernel_from_matrix ||M|| and ||M|| <= matrix_from_kernel ||k||, where
// M = C_{Psi2~} O D_{Psi1} is the coefficient matrix of the operator.
struct SchurConstants {
  double kernel_from_matrix = 1.0;
  double matrix_from_kernel = 1.0;
};

RankOneDecomposition canonical_decomposition(const GalerkinMatrix& k, const FramePair& pair1,
                                             const FramePair& pair2, const WeightVector& w1,
                                             const WeightVector& w2) {
  const RealVector n1 = h1_atom_norms(pair1, w1);
  const RealVector n2 = h1_atom_norms(pair2, w2);
  RankOneDecomposition dec;
  for (Eigen::Index i = 0; i < k.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.entries.cols(); ++j) {
      const Complex c = k.entries(i, j);
      if (c == Complex(0.0, 0.0)) continue;
      dec.terms.push_back({pair1.frame().vector(static_cast<std::size_t>(i)),
                           c * pair2.frame().vector(static_cast<std::size_t>(j))});
      dec.nuclear_sum += std::abs(c) * n1(i) * n2(j);
    }
  }
  return dec;
}

}  // namespace

std::string to_string(ReportMode mode) {
  switch (mode) {
    case ReportMode::kEquivalence:
      return "equivalence";
    case ReportMode::kUpper:
      return "upper";
    case ReportMode::kSandwich:
      return "sandwich";
  }
  return "equivalence";
}

void finalize(VerificationReport& report, double tol) {
  const double lhs = report.lhs;
  const double rhs = report.rhs;
  if (!std::isfinite(lhs) || !std::isfinite(rhs) || std::isnan(report.budget)) {
    report.ratio = std::nan("");
    report.pass = false;
    return;
  }
  if (lhs == 0.0 && rhs == 0.0) {
    report.ratio = 1.0;
  } else if (rhs == 0.0) {
    report.ratio = kInf;
  } else {
    report.ratio = lhs / rhs;
  }
  const double hi = report.budget * (1.0 + tol);
  switch (report.mode) {
    case ReportMode::kEquivalence:
      report.pass = report.ratio <= hi && report.ratio * hi >= 1.0;
      break;
    case ReportMode::kUpper:
      report.pass = report.ratio <= hi;
      break;
    case ReportMode::kSandwich:
      report.pass = report.ratio <= hi && report.ratio >= 1.0 - tol;
      break;
  }
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json details = report.details;
  details["mode"] = to_string(report.mode);
  return {{"name", report.name},
          {"lhs", report.lhs},
          {"rhs", report.rhs},
          {"ratio", finite_or_string(report.ratio)},
          {"budget", finite_or_string(report.budget)},
          {"pass", report.pass},
          {"seed", report.seed},
          {"details", std::move(details)}};
}

std::string report_csv_header() { return "name,lhs,rhs,ratio,budget,pass,seed"; }

std::string report_csv_row(const VerificationReport& report) {
  std::ostringstream os;
  os << report.name << ',' << format_double(report.lhs) << ',' << format_double(report.rhs) << ','
     << format_double(report.ratio) << ',' << format_double(report.budget) << ','
     << (report.pass ? "true" : "false") << ',' << report.seed;
  return os.str();
}

KernelRep RankOneDecomposition::reconstruct(std::size_t input_dim, std::size_t output_dim) const {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(output_dim),
                                        static_cast<Eigen::Index>(input_dim));
  for (const auto& t : terms) m += t.g * t.f.adjoint();
  return KernelRep(std::move(m));
}

nlohmann::json to_json(const CompressionReport& report) {
  nlohmann::json j = {{"threshold", report.threshold},
                      {"kept", report.kept},
                      {"total", report.total},
                      {"sparsity", report.sparsity},
                      {"error_surrogate", report.error_surrogate}};
  if (report.spectral_error) j["spectral_error"] = *report.spectral_error;
  return j;
}

namespace {

VerificationReport schur_route(const std::string& name, const ComplexMatrix& op,
                               const FramePair& pair1, const FramePair& pair2,
                               const WeightVector& w1, const WeightVector& w2, double src_p,
                               double dst_p, const MixedSpaceSpec& kernel_spec,
                               const SchurConstants& constants, std::uint64_t seed, double tol) {
  const GalerkinMatrix k = galerkin(op, pair1, pair2);
  const CoorbitSpec src(pair1, SeqSpaceSpec(src_p, w1));
  const CoorbitSpec dst(pair2, SeqSpaceSpec(dst_p, w2.reciprocal()));
  const OpNormResult norm = coorbit_opnorm(op, src, dst, OpNormMethod::kExact, seed);

  VerificationReport r;
  r.name = name;
  r.seed = seed;
  r.mode = ReportMode::kEquivalence;
  r.lhs = mixed_norm(k.entries, kernel_spec);
  r.rhs = 0.5 * (norm.lower + norm.upper);
  // kernel_norm <= kernel_from_matrix * upper and upper <= matrix_from_kernel * kernel_norm,
  // while the midpoint lies in [upper / spread, upper].
  r.budget = std::max(constants.kernel_from_matrix * interval_spread(norm),
                      constants.matrix_from_kernel);
  r.details = {{"opnorm", interval_json(norm)},
               {"kernel_norm", r.lhs},
               {"source_exponent", exponent_to_string(src_p)},
               {"target_exponent", exponent_to_string(dst_p)},
               {"kernel_space",
                {{"p", exponent_to_string(kernel_spec.p())},
                 {"q", exponent_to_string(kernel_spec.q())},
                 {"order", to_string(kernel_spec.order())}}},
               {"kernel_from_matrix", constants.kernel_from_matrix},
               {"matrix_from_kernel", constants.matrix_from_kernel}};
  finalize(r, tol);
  return r;
}

}  // namespace

VerificationReport verify_outer(const ComplexMatrix& op, const FramePair& pair1,
                                const FramePair& pair2, const WeightVector& w1,
                                const WeightVector& w2, std::uint64_t seed, double tol) {
  require_operator_shape(op, pair1, pair2, "verify_outer");
  require_weights(pair1, pair2, w1, w2, "verify_outer");
  const SchurConstants c{schur_weighted_bound(gram(pair1.dual()), w1, 1.0),
                         schur_weighted_bound(gram(pair1.frame()), w1, 1.0)};
  return schur_route("outer", op, pair1, pair2, w1, w2, 1.0, kInf,
                     MixedSpaceSpec::tensor_reciprocal(kInf, kInf, SummationOrder::kInnerOverFirst,
                                                       w1, w2),
                     c, seed, tol);
}

VerificationReport schur_characterization(const ComplexMatrix& op, const FramePair& pair1,
                                          const FramePair& pair2, const WeightVector& w1,
                                          const WeightVector& w2, double p, SchurVariant variant,
                                          std::uint64_t seed, double tol) {
  require_exponent(p, "schur_characterization");
  require_operator_shape(op, pair1, pair2, "schur_characterization");
  require_weights(pair1, pair2, w1, w2, "schur_characterization");
  if (variant == SchurVariant::kFirst) {
    const SchurConstants c{schur_weighted_bound(gram(pair1.dual()), w1, 1.0),
                           schur_weighted_bound(gram(pair1.frame()), w1, 1.0)};
    auto r = schur_route("schur_i", op, pair1, pair2, w1, w2, 1.0, p,
                         MixedSpaceSpec::tensor_reciprocal(p, kInf,
                                                           SummationOrder::kInnerOverSecond, w1,
                                                           w2),
                         c, seed, tol);
    return r;
  }
  const double q = conjugate_exponent(p);
  const WeightVector dual_w1 = w1.reciprocal();
  const SchurConstants c{schur_weighted_bound(gram(pair1.dual()), dual_w1, q),
                         schur_weighted_bound(gram(pair1.frame()), dual_w1, q)};
  auto r = schur_route("schur_ii", op, pair1, pair2, w1, w2, p, kInf,
                       MixedSpaceSpec::tensor_reciprocal(q, kInf, SummationOrder::kInnerOverFirst,
                                                         w1, w2),
                       c, seed, tol);
  r.details["conjugate_exponent"] = exponent_to_string(q);
  r.details["note"] =
      "kernel measured with the conjugate exponent q; the source statement mixes p and q";
  return r;
}

std::pair<RankOneDecomposition, VerificationReport> verify_inner(const KernelRep& kernel,
                                                                 const FramePair& pair1,
                                                                 const FramePair& pair2,
                                                                 const WeightVector& w1,
                                                                 const WeightVector& w2,
                                                                 double tol) {
  require_operator_shape(kernel.matrix(), pair1, pair2, "verify_inner");
  require_weights(pair1, pair2, w1, w2, "verify_inner");
  const GalerkinMatrix k = galerkin(kernel.matrix(), pair1, pair2);
  RankOneDecomposition dec = canonical_decomposition(k, pair1, pair2, w1, w2);

  const double bound1 = h1_atom_bound(pair1, pair1.frame(), w1);
  const double bound2 = h1_atom_bound(pair2, pair2.frame(), w2);
  const KernelRep rebuilt = dec.reconstruct(pair1.space_dim(), pair2.space_dim());
  const double scale = std::max(kernel.matrix().norm(), 1.0);
  const double residual = (rebuilt.matrix() - kernel.matrix()).norm() / scale;

  VerificationReport r;
  r.name = "inner";
  r.mode = ReportMode::kSandwich;
  r.lhs = dec.nuclear_sum;
  r.rhs = mixed_norm(k.entries,
                     MixedSpaceSpec::tensor(1.0, 1.0, SummationOrder::kInnerOverFirst, w1, w2));
  r.budget = std::max(1.0, bound1 * bound2);
  r.details = {{"terms", dec.terms.size()},
               {"nuclear_sum", dec.nuclear_sum},
               {"kernel_norm_h11", r.rhs},
               {"reconstruction_residual", residual},
               {"atom_bound_first", bound1},
               {"atom_bound_second", bound2}};
  finalize(r, tol);
  if (!(residual <= kDefaultTolerance)) r.pass = false;
  return {std::move(dec), std::move(r)};
}

VerificationReport verify_projective(const KernelRep& kernel, const FramePair& pair1,
                                     const FramePair& pair2, const WeightVector& w1,
                                     const WeightVector& w2, double tol) {
  auto [dec, inner] = verify_inner(kernel, pair1, pair2, w1, w2, tol);
  VerificationReport r = std::move(inner);
  r.name = "projective";
  r.details["lower"] = r.rhs;
  r.details["upper"] = r.lhs;
  r.details["note"] = "lower <= projective norm <= upper";
  return r;
}

VerificationReport verify_frame_independence(const ComplexMatrix& op, const PairOfFrames& a,
                                             const PairOfFrames& b, const MixedSpaceSpec& spec_a,
                                             const MixedSpaceSpec& spec_b, double tol) {
  if (a.first.space_dim() != b.first.space_dim() || a.second.space_dim() != b.second.space_dim()) {
    throw DimensionError("verify_frame_independence: frame pairs span different spaces");
  }
  require_operator_shape(op, a.first, a.second, "verify_frame_independence");
  if (!spec_a.first_factor() || !spec_b.first_factor()) {
    throw PreconditionError("verify_frame_independence: weights must be separable");
  }
  if (spec_a.p() != spec_b.p() || spec_a.q() != spec_b.q() || spec_a.order() != spec_b.order()) {
    throw PreconditionError("verify_frame_independence: specs must share p, q and order");
  }
  const WeightVector& wa1 = *spec_a.first_factor();
  const WeightVector& wa2 = *spec_a.second_factor();
  const WeightVector& wb1 = *spec_b.first_factor();
  const WeightVector& wb2 = *spec_b.second_factor();
  require_weights(a.first, a.second, wa1, wa2, "verify_frame_independence");
  require_weights(b.first, b.second, wb1, wb2, "verify_frame_independence");

  const ComplexMatrix ka = galerkin(op, a.first, a.second).entries;
  const ComplexMatrix kb = galerkin(op, b.first, b.second).entries;

  // k_to = X1 k_from X2^T,
  //   X1(i, i') = <psi~_to_1i, psi_from_1i'>, X2(j, j') = <psi_from_2j', psi~_to_2j>.
  auto change_bound = [&](const PairOfFrames& from, const PairOfFrames& to,
                          const WeightVector& wf1, const WeightVector& wf2,
                          const WeightVector& wt1, const WeightVector& wt2) {
    const ComplexMatrix x1 =
        (from.first.frame().vectors().adjoint() * to.first.dual().vectors()).transpose();
    const ComplexMatrix x2 = to.second.dual().vectors().adjoint() * from.second.frame().vectors();
    const bool first_inner = spec_a.order() == SummationOrder::kInnerOverFirst;
    const double p1 = first_inner ? spec_a.p() : spec_a.q();
    const double p2 = first_inner ? spec_a.q() : spec_a.p();
    return schur_weighted_bound(x1, wt1, wf1, p1) * schur_weighted_bound(x2, wt2, wf2, p2);
  };
  const double forward = change_bound(a, b, wa1, wa2, wb1, wb2);
  const double backward = change_bound(b, a, wb1, wb2, wa1, wa2);

  VerificationReport r;
  r.name = "independence";
  r.mode = ReportMode::kEquivalence;
  r.lhs = mixed_norm(kb, spec_b);
  r.rhs = mixed_norm(ka, spec_a);
  r.budget = std::max(forward, backward);
  r.details = {{"norm_a", r.rhs},
               {"norm_b", r.lhs},
               {"forward_bound", forward},
               {"backward_bound", backward},
               {"p", exponent_to_string(spec_a.p())},
               {"q", exponent_to_string(spec_a.q())},
               {"order", to_string(spec_a.order())}};
  finalize(r, tol);
  // The directional bounds are sharper than the symmetric band.
  if (r.pass && r.rhs > 0.0 && r.lhs > 0.0) {
    r.pass = r.ratio <= forward * (1.0 + tol) && r.ratio * backward * (1.0 + tol) >= 1.0;
  }
  return r;
}

VerificationReport verify_frame_independence(const ComplexMatrix& op, const PairOfFrames& a,
                                             const PairOfFrames& b, const MixedSpaceSpec& spec,
                                             double tol) {
  if (!spec.first_factor()) {
    throw PreconditionError("verify_frame_independence: weights must be separable");
  }
  if (spec.first_factor()->size() == b.first.size() &&
      spec.second_factor()->size() == b.second.size()) {
    return verify_frame_independence(op, a, b, spec, spec, tol);
  }
  const auto unit = [](const WeightVector& w) {
    return (w.values().array() == 1.0).all();
  };
  if (!unit(*spec.first_factor()) || !unit(*spec.second_factor())) {
    throw DimensionError(
        "verify_frame_independence: index sets differ in size; pass one spec per frame pair");
  }
  const MixedSpaceSpec spec_b =
      MixedSpaceSpec::tensor(spec.p(), spec.q(), spec.order(), WeightVector::ones(b.first.size()),
                             WeightVector::ones(b.second.size()));
  return verify_frame_independence(op, a, b, spec, spec_b, tol);
}

VerificationReport schatten_check(const ComplexMatrix& op, const FramePair& pair1,
                                  const FramePair& pair2, double p, double tol) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw PreconditionError("schatten_check: p must lie in [1, 2], got " + format_double(p));
  }
  require_operator_shape(op, pair1, pair2, "schatten_check");
  const std::vector<double> sv_list = svd_values(op);
  const RealVector sv = Eigen::Map<const RealVector>(sv_list.data(), static_cast<Eigen::Index>(sv_list.size()));
  const ComplexMatrix images = op * pair1.dual().vectors();
  RealVector col_norms(images.cols());
  for (Eigen::Index i = 0; i < images.cols(); ++i) col_norms(i) = images.col(i).norm();

  const WeightVector ones1 = WeightVector::ones(pair1.size());
  const WeightVector ones2 = WeightVector::ones(pair2.size());
  const double h2p = kernel_norm(
      KernelRep(op), pair1, pair2,
      MixedSpaceSpec::tensor(2.0, p, SummationOrder::kInnerOverSecond, ones1, ones2));

  VerificationReport r;
  r.name = "schatten";
  r.mode = ReportMode::kUpper;
  r.lhs = lp_norm(sv, p);
  r.rhs = lp_norm(col_norms, p);
  r.budget = std::sqrt(pair1.frame().bounds().upper);
  r.details = {{"p", p},
               {"schatten_norm", r.lhs},
               {"column_sum", r.rhs},
               {"kernel_norm_h2p", h2p},
               {"note", "kernel norm in the (2, p) mixed space; the source names it (2, 1)"}};
  finalize(r, tol);
  return r;
}

std::pair<GalerkinMatrix, CompressionReport> compress_operator(const ComplexMatrix& op,
                                                               const FramePair& pair1,
                                                               const FramePair& pair2,
                                                               const WeightVector& w1,
                                                               const WeightVector& w2,
                                                               double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw PreconditionError("compress_operator: threshold must be finite and >= 0");
  }
  require_operator_shape(op, pair1, pair2, "compress_operator");
  require_weights(pair1, pair2, w1, w2, "compress_operator");
  GalerkinMatrix k = galerkin(op, pair1, pair2);
  CompressionReport rep;
  rep.threshold = tau;
  rep.total = static_cast<std::size_t>(k.entries.size());
  for (Eigen::Index i = 0; i < k.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.entries.cols(); ++j) {
      const double scaled = std::abs(k.entries(i, j)) /
                            (w1[static_cast<std::size_t>(i)] * w2[static_cast<std::size_t>(j)]);
      if (scaled < tau) {
        rep.error_surrogate = std::max(rep.error_surrogate, scaled);
        k.entries(i, j) = 0.0;
      } else {
        ++rep.kept;
      }
    }
  }
  rep.sparsity = rep.total == 0 ? 0.0 : static_cast<double>(rep.kept) / static_cast<double>(rep.total);
  if (std::max(pair1.space_dim(), pair2.space_dim()) <= kSpectralErrorMaxDim) {
    const ComplexMatrix diff = op - synthesize_kernel(k, pair1, pair2).matrix();
    rep.spectral_error = diff.size() == 0 ? 0.0 : svd_values(diff).front();
  }
  return {std::move(k), rep};
}

std::vector<double> compression_thresholds(const GalerkinMatrix& k, const WeightVector& w1,
                                           const WeightVector& w2, std::size_t count) {
  if (w1.size() != static_cast<std::size_t>(k.entries.rows()) ||
      w2.size() != static_cast<std::size_t>(k.entries.cols())) {
    throw DimensionError("compression_thresholds: weights do not match the coefficient array");
  }
  std::set<double> values;
  for (Eigen::Index i = 0; i < k.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.entries.cols(); ++j) {
      values.insert(std::abs(k.entries(i, j)) /
                    (w1[static_cast<std::size_t>(i)] * w2[static_cast<std::size_t>(j)]));
    }
  }
  std::vector<double> mids;
  for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
    mids.push_back(0.5 * (*it + *std::next(it)));
  }
  if (count == 0 || mids.empty()) return {};
  if (mids.size() <= count) return mids;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    out.push_back(mids[s * (mids.size() - 1) / std::max<std::size_t>(count - 1, 1)]);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace framekernel
