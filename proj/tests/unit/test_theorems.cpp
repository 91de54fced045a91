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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "framekernel/error.hpp"
#include "framekernel/generators.hpp"
#include "framekernel/theorems.hpp"
#include "framekernel_checks/oracles.hpp"
#include "test_support.hpp"

namespace fk = framekernel;
namespace oracle = framekernel::oracle;
using fk::kInf;
using fk_test::mat;

namespace {

fk::FramePair onb_pair(std::size_t d) { return fk::canonical_dual(fk::onb(d)); }

fk::WeightVector ones(std::size_t n) { return fk::WeightVector::ones(n); }

}  // namespace

TEST(Finalize, Modes) {
  fk::VerificationReport r;
  r.lhs = 0.0;
  r.rhs = 0.0;
  fk::finalize(r);
  EXPECT_EQ(r.ratio, 1.0);
  EXPECT_TRUE(r.pass);

  r.lhs = 2.0;
  r.rhs = 1.0;
  r.budget = 1.5;
  fk::finalize(r);
  EXPECT_FALSE(r.pass);
  r.budget = 2.0;
  fk::finalize(r);
  EXPECT_TRUE(r.pass);

  r.lhs = 1.0;
  r.rhs = 2.0;
  r.mode = fk::ReportMode::kSandwich;
  fk::finalize(r);
  EXPECT_FALSE(r.pass);
  r.mode = fk::ReportMode::kUpper;
  r.budget = 0.1;
  fk::finalize(r);
  EXPECT_FALSE(r.pass);

  r.lhs = std::nan("");
  r.budget = 10.0;
  fk::finalize(r);
  EXPECT_FALSE(r.pass);
}

TEST(ReportJson, CarriesFields) {
  const auto r = fk::verify_outer(mat({{1, 2}, {3, 4}}), onb_pair(2), onb_pair(2), ones(2), ones(2), 5);
  const auto j = fk::to_json(r);
  for (const char* key : {"name", "lhs", "rhs", "ratio", "budget", "pass", "seed", "details"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(fk::report_csv_header().find("name"), 0u);
  const std::string row = fk::report_csv_row(r);
  const std::string header = fk::report_csv_header();
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), std::count(header.begin(), header.end(), ','));
}

TEST(VerifyOuter, OrthonormalExamples) {
  const auto r = fk::verify_outer(mat({{1, 2}, {3, 4}}), onb_pair(2), onb_pair(2), ones(2), ones(2));
  EXPECT_NEAR(r.lhs, 4.0, 1e-15);
  EXPECT_NEAR(r.rhs, 4.0, 1e-15);
  EXPECT_NEAR(r.ratio, 1.0, 1e-15);
  EXPECT_TRUE(r.pass);
  const auto id = fk::verify_outer(fk::ComplexMatrix::Identity(3, 3), onb_pair(3), onb_pair(3), ones(3), ones(3));
  EXPECT_NEAR(id.lhs, 1.0, 1e-15);
  EXPECT_NEAR(id.rhs, 1.0, 1e-15);
}

TEST(VerifyOuter, OrthonormalEqualityAgainstExtremePointOracle) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = fk_test::rng_for("outer", t);
    const std::size_t d1 = 1 + rng.below(16), d2 = 1 + rng.below(16);
    const fk::ComplexMatrix op = rng.disk_matrix(static_cast<Eigen::Index>(d2), static_cast<Eigen::Index>(d1));
    const bool weighted = t % 2 == 1;
    const fk::WeightVector w1 = weighted ? fk::poly_weight(fk::IndexSet::linear(d1), 1.0) : ones(d1);
    const fk::WeightVector w2 = weighted ? fk::poly_weight(fk::IndexSet::linear(d2), 1.0) : ones(d2);
    const auto r = fk::verify_outer(op, onb_pair(d1), onb_pair(d2), w1, w2, t);
    const double expected = oracle::onb_extreme_point_norm(op, w1.values(), w2.values(), kInf);
    EXPECT_NEAR(r.rhs, expected, 1e-9 * expected);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-9 * expected);
    EXPECT_TRUE(r.pass);
  }
}

TEST(VerifyOuter, GaborWithinBudget) {
  const auto g = fk::canonical_dual(fk::finite_gabor(8, 2, 2, fk::gaussian_window(8)));
  const auto w = fk::poly_weight(g.index_set(), 1.0);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto r = fk::verify_outer(fk::random_operator(8, 8, fk::DenseKind{}, t), g, g, w, w, t);
    EXPECT_TRUE(r.pass) << fk::to_json(r).dump();
    EXPECT_GT(r.budget, 1.0);
  }
}

TEST(VerifyInner, OrthonormalExample) {
  const auto o = onb_pair(2);
  const auto [dec, r] = fk::verify_inner(fk::KernelRep(mat({{1, 2}, {3, 4}})), o, o, ones(2), ones(2));
  EXPECT_EQ(dec.terms.size(), 4u);
  EXPECT_NEAR(dec.nuclear_sum, 10.0, 1e-14);
  EXPECT_NEAR(r.rhs, 10.0, 1e-14);
  EXPECT_NEAR(r.ratio, 1.0, 1e-14);
  EXPECT_TRUE(r.pass);
}

TEST(VerifyInner, ZeroKernel) {
  const auto o = onb_pair(3);
  const auto [dec, r] = fk::verify_inner(fk::KernelRep(fk::ComplexMatrix::Zero(3, 3)), o, o, ones(3), ones(3));
  EXPECT_TRUE(dec.terms.empty());
  EXPECT_EQ(dec.nuclear_sum, 0.0);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(VerifyInner, RankOneKernelReconstructs) {
  const auto o = onb_pair(4);
  auto rng = fk_test::rng_for("rank_one");
  const fk::ComplexVector f = rng.disk_vector(4);
  const fk::ComplexVector g = rng.disk_vector(4);
  const auto k = fk::simple_tensor(f, g);
  const auto [dec, r] = fk::verify_inner(k, o, o, ones(4), ones(4));
  EXPECT_LT(fk_test::max_gap(dec.reconstruct(4, 4).matrix(), k.matrix()), 1e-14);
  EXPECT_NEAR(dec.nuclear_sum, f.lpNorm<1>() * g.lpNorm<1>(), 1e-12);
}

TEST(VerifyInner, GeneralFramesReconstructAndStayInBudget) {
  const auto m = fk::canonical_dual(fk::mercedes());
  const auto g = fk::canonical_dual(fk::finite_gabor(4, 2, 1, fk::gaussian_window(4)));
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = fk_test::rng_for("inner_general", t);
    const fk::KernelRep mm(rng.disk_matrix(2, 2));
    const auto [dec, r] = fk::verify_inner(mm, m, m, ones(3), ones(3));
    EXPECT_LE((dec.reconstruct(2, 2).matrix() - mm.matrix()).norm(), 1e-9 * mm.matrix().norm());
    EXPECT_TRUE(r.pass) << fk::to_json(r).dump();
    const fk::KernelRep gm(rng.disk_matrix(4, 2));
    const auto wg = fk::poly_weight(g.index_set(), 1.0);
    const auto [dec2, r2] = fk::verify_inner(gm, m, g, ones(3), wg);
    EXPECT_LE((dec2.reconstruct(2, 4).matrix() - gm.matrix()).norm(), 1e-9 * gm.matrix().norm());
    EXPECT_TRUE(r2.pass) << fk::to_json(r2).dump();
  }
}

TEST(VerifyProjective, Examples) {
  const auto o = onb_pair(2);
  const auto r = fk::verify_projective(fk::KernelRep(mat({{1, 2}, {3, 4}})), o, o, ones(2), ones(2));
  EXPECT_NEAR(r.details.at("lower").get<double>(), 10.0, 1e-14);
  EXPECT_NEAR(r.details.at("upper").get<double>(), 10.0, 1e-14);
  EXPECT_TRUE(r.pass);
  const auto z = fk::verify_projective(fk::KernelRep(fk::ComplexMatrix::Zero(2, 2)), o, o, ones(2), ones(2));
  EXPECT_EQ(z.details.at("lower").get<double>(), 0.0);
  EXPECT_EQ(z.details.at("upper").get<double>(), 0.0);
  EXPECT_TRUE(z.pass);
}

TEST(VerifyProjective, OrthonormalEqualsAbsoluteSum) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    auto rng = fk_test::rng_for("projective", t);
    const std::size_t d = 1 + rng.below(8);
    const fk::ComplexMatrix k = rng.disk_matrix(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    const auto r = fk::verify_projective(fk::KernelRep(k), onb_pair(d), onb_pair(d), ones(d), ones(d));
    const double expected = oracle::weighted_abs_sum(k, fk::RealVector::Ones(static_cast<Eigen::Index>(d)),
                                                     fk::RealVector::Ones(static_cast<Eigen::Index>(d)));
    EXPECT_NEAR(r.details.at("lower").get<double>(), expected, 1e-10 * expected);
    EXPECT_NEAR(r.details.at("upper").get<double>(), expected, 1e-10 * expected);
  }
}

TEST(VerifyProjective, MercedesSandwich) {
  const auto m = fk::canonical_dual(fk::mercedes());
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto r = fk::verify_projective(fk::KernelRep(fk_test::rng_for("sandwich", t).disk_matrix(2, 2)), m, m,
                                         ones(3), ones(3));
    const double lower = r.details.at("lower").get<double>();
    const double upper = r.details.at("upper").get<double>();
    EXPECT_LE(lower, upper * (1.0 + 1e-12));
    EXPECT_LE(upper, r.budget * lower * (1.0 + 1e-12));
    EXPECT_TRUE(r.pass);
  }
}

TEST(Schur, Examples) {
  const auto o = onb_pair(2);
  const auto op = mat({{1, 2}, {3, 4}});
  const auto a = fk::schur_characterization(op, o, o, ones(2), ones(2), 2.0, fk::SchurVariant::kFirst);
  EXPECT_NEAR(a.lhs, std::sqrt(20.0), 1e-14);
  EXPECT_NEAR(a.rhs, std::sqrt(20.0), 1e-14);
  const auto b = fk::schur_characterization(op, o, o, ones(2), ones(2), kInf, fk::SchurVariant::kSecond);
  EXPECT_NEAR(b.lhs, 7.0, 1e-14);
  EXPECT_NEAR(b.rhs, 7.0, 1e-14);
  const auto c = fk::schur_characterization(op, o, o, ones(2), ones(2), 1.0, fk::SchurVariant::kSecond);
  EXPECT_NEAR(c.lhs, 4.0, 1e-14);
  EXPECT_NEAR(c.rhs, 4.0, 1e-14);
  EXPECT_NEAR(c.lhs, fk::verify_outer(op, o, o, ones(2), ones(2)).lhs, 1e-14);
  EXPECT_TRUE(b.details.contains("note"));
}

TEST(Schur, OrthonormalEqualsBruteForce) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = fk_test::rng_for("schur_onb", t);
    const std::size_t d1 = 1 + rng.below(10), d2 = 1 + rng.below(10);
    const fk::ComplexMatrix op = rng.disk_matrix(static_cast<Eigen::Index>(d2), static_cast<Eigen::Index>(d1));
    const fk::WeightVector w1 = fk::poly_weight(fk::IndexSet::linear(d1), rng.uniform(0.0, 1.5));
    const fk::WeightVector w2 = fk::poly_weight(fk::IndexSet::linear(d2), rng.uniform(0.0, 1.5));
    for (const double p : {1.0, 2.0, kInf}) {
      const auto first = fk::schur_characterization(op, onb_pair(d1), onb_pair(d2), w1, w2, p, fk::SchurVariant::kFirst);
      const double e1 = oracle::onb_extreme_point_norm(op, w1.values(), w2.values(), p);
      EXPECT_NEAR(first.lhs, e1, 1e-9 * e1);
      EXPECT_NEAR(first.rhs, e1, 1e-9 * e1);
      EXPECT_TRUE(first.pass);
      const auto second = fk::schur_characterization(op, onb_pair(d1), onb_pair(d2), w1, w2, p, fk::SchurVariant::kSecond);
      const double e2 = oracle::onb_row_dual_norm(op, w1.values(), w2.values(), p);
      EXPECT_NEAR(second.lhs, e2, 1e-9 * e2);
      EXPECT_NEAR(second.rhs, e2, 1e-9 * e2);
      EXPECT_TRUE(second.pass);
    }
  }
}

TEST(Schur, GaborWithinBudget) {
  const auto g = fk::canonical_dual(fk::finite_gabor(8, 2, 2, fk::gaussian_window(8)));
  const auto w = fk::poly_weight(g.index_set(), 0.5);
  for (std::uint64_t t = 0; t < 10; ++t) {
    const fk::ComplexMatrix op = fk::random_operator(8, 8, fk::DenseKind{}, t);
    for (const double p : {1.0, 2.0, kInf}) {
      for (const auto v : {fk::SchurVariant::kFirst, fk::SchurVariant::kSecond}) {
        const auto r = fk::schur_characterization(op, g, g, w, w, p, v, t);
        EXPECT_TRUE(r.pass) << fk::to_json(r).dump();
      }
    }
  }
}

TEST(FrameIndependence, SameFramesGiveRatioOne) {
  const auto g = fk::canonical_dual(fk::finite_gabor(8, 2, 2, fk::gaussian_window(8)));
  const fk::PairOfFrames pf{g, g};
  const auto spec = fk::MixedSpaceSpec::tensor(1.0, 2.0, fk::SummationOrder::kInnerOverFirst, ones(16), ones(16));
  const auto r = fk::verify_frame_independence(fk::random_operator(8, 8, fk::DenseKind{}, 1), pf, pf, spec);
  EXPECT_NEAR(r.ratio, 1.0, 1e-14);
  EXPECT_TRUE(r.pass);
}

TEST(FrameIndependence, RotatedBasesWithinBudget) {
  const auto o = onb_pair(4);
  const auto rotated = fk::canonical_dual(fk::Frame(fk::IndexSet::linear(4), fk::random_unitary(4, 9)));
  const fk::PairOfFrames a{o, o};
  const fk::PairOfFrames b{rotated, rotated};
  for (const double p : {1.0, 2.0, kInf}) {
    const auto spec = fk::MixedSpaceSpec::tensor(p, p, fk::SummationOrder::kInnerOverFirst, ones(4), ones(4));
    for (std::uint64_t t = 0; t < 20; ++t) {
      const fk::ComplexMatrix op = fk::random_operator(4, 4, fk::DenseKind{}, t);
      const auto r = fk::verify_frame_independence(op, a, b, spec);
      EXPECT_TRUE(r.pass) << fk::to_json(r).dump();
      if (p == 2.0) {
        EXPECT_NEAR(r.ratio, 1.0, 1e-12);
      }
    }
  }
}

TEST(FrameIndependence, RepeatedVectorFrame) {
  const auto o = onb_pair(2);
  const auto r2 = fk::canonical_dual(fk_test::repeated2());
  const auto spec = fk::MixedSpaceSpec::tensor(1.0, 1.0, fk::SummationOrder::kInnerOverFirst, ones(2), ones(2));
  const auto sup = fk::MixedSpaceSpec::tensor(kInf, kInf, fk::SummationOrder::kInnerOverFirst, ones(2), ones(2));
  for (std::uint64_t t = 0; t < 20; ++t) {
    const fk::ComplexMatrix op = fk::random_operator(2, 2, fk::DenseKind{}, t);
    const auto one = fk::verify_frame_independence(op, {o, o}, {r2, r2}, spec);
    EXPECT_TRUE(one.pass);
    EXPECT_NEAR(one.ratio, 1.0, 1e-12);
    const auto inf = fk::verify_frame_independence(op, {o, o}, {r2, r2}, sup);
    EXPECT_TRUE(inf.pass);
    EXPECT_GT(inf.budget, 1.0);
  }
}

TEST(FrameIndependence, MismatchedSpacesRejected) {
  const auto o2 = onb_pair(2);
  const auto o3 = onb_pair(3);
  const auto spec = fk::MixedSpaceSpec::tensor(1.0, 1.0, fk::SummationOrder::kInnerOverFirst, ones(2), ones(2));
  EXPECT_THROW(fk::verify_frame_independence(fk::ComplexMatrix::Identity(2, 2), {o2, o2}, {o3, o3}, spec),
               fk::DimensionError);
}

TEST(Schatten, Examples) {
  const auto o = onb_pair(2);
  const auto d = mat({{3, 0}, {0, 4}});
  const auto one = fk::schatten_check(d, o, o, 1.0);
  EXPECT_NEAR(one.lhs, 7.0, 1e-14);
  EXPECT_NEAR(one.rhs, 7.0, 1e-14);
  const auto two = fk::schatten_check(d, o, o, 2.0);
  EXPECT_NEAR(two.lhs, 5.0, 1e-14);
  EXPECT_NEAR(two.rhs, 5.0, 1e-14);
  EXPECT_THROW(fk::schatten_check(d, o, o, 2.5), fk::PreconditionError);
  EXPECT_THROW(fk::schatten_check(d, o, o, 0.5), fk::PreconditionError);
}

TEST(Schatten, OrthonormalSufficiencyAndFrobeniusIdentity) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = fk_test::rng_for("schatten", t);
    const std::size_t d = 1 + rng.below(16);
    const fk::ComplexMatrix op = rng.disk_matrix(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    const auto o = onb_pair(d);
    for (const double p : {1.0, 1.5, 2.0}) {
      const auto r = fk::schatten_check(op, o, o, p);
      EXPECT_NEAR(r.rhs, oracle::column_norm_sum(op, p), 1e-12 * r.rhs);
      EXPECT_LE(r.lhs, r.rhs * (1.0 + 1e-12));
      EXPECT_TRUE(r.pass);
    }
    const auto r2 = fk::schatten_check(op, o, o, 2.0);
    const double frob = oracle::frobenius(op);
    EXPECT_NEAR(r2.lhs, frob, 1e-10 * frob);
    EXPECT_NEAR(r2.rhs, frob, 1e-10 * frob);
    EXPECT_NEAR(r2.details.at("kernel_norm_h2p").get<double>(), frob, 1e-10 * frob);
  }
}

TEST(Schatten, GeneralFrames) {
  const auto g = fk::canonical_dual(fk::finite_gabor(8, 2, 2, fk::gaussian_window(8)));
  for (std::uint64_t t = 0; t < 10; ++t) {
    for (const double p : {1.0, 1.5, 2.0}) {
      const auto r = fk::schatten_check(fk::random_operator(8, 8, fk::DenseKind{}, t), g, g, p);
      EXPECT_TRUE(r.pass) << fk::to_json(r).dump();
    }
  }
}

TEST(Compress, Examples) {
  const auto o = onb_pair(4);
  const auto [k, r] = fk::compress_operator(fk::ComplexMatrix::Identity(4, 4), o, o, ones(4), ones(4), 0.5);
  EXPECT_EQ(r.kept, 4u);
  EXPECT_EQ(r.total, 16u);
  EXPECT_EQ(r.error_surrogate, 0.0);
  const fk::ComplexMatrix op = fk::random_operator(4, 4, fk::DenseKind{}, 2);
  const auto [k0, r0] = fk::compress_operator(op, o, o, ones(4), ones(4), 0.0);
  EXPECT_EQ(r0.kept, r0.total);
  EXPECT_EQ(r0.error_surrogate, 0.0);
  ASSERT_TRUE(r0.spectral_error.has_value());
  EXPECT_LT(*r0.spectral_error, 1e-12);
  EXPECT_THROW(fk::compress_operator(op, o, o, ones(4), ones(4), -1.0), fk::PreconditionError);
}

TEST(Compress, ConvolutionSweepIsMonotone) {
  constexpr std::size_t n = 16;
  const auto g = fk::canonical_dual(fk::finite_gabor(n, 2, 2, fk::gaussian_window(n)));
  const fk::ComplexVector h = fk::gaussian_window(n);
  fk::ComplexMatrix conv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) conv(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = h((r + n - c) % n);
  }
  const auto w = ones(g.size());
  const auto k = fk::galerkin(conv, g, g);
  const auto taus = fk::compression_thresholds(k, w, w, 12);
  ASSERT_GE(taus.size(), 2u);
  double last_sparsity = 2.0;
  double last_error = -1.0;
  for (const double tau : taus) {
    const auto [kt, r] = fk::compress_operator(conv, g, g, w, w, tau);
    EXPECT_LT(r.sparsity, last_sparsity);
    EXPECT_GE(r.error_surrogate, last_error);
    EXPECT_LE(r.error_surrogate, tau);
    last_sparsity = r.sparsity;
    last_error = r.error_surrogate;
  }
}
