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

#include <cmath>

#include <gtest/gtest.h>

#include "framekernel/error.hpp"
#include "framekernel/generators.hpp"
#include "framekernel/tensor_kernels.hpp"
#include "test_support.hpp"

namespace fk = framekernel;
using fk::kInf;
using fk_test::mat;
using fk_test::vec;

namespace {

fk::ComplexVector e(Eigen::Index d, Eigen::Index i) { return fk::ComplexVector::Unit(d, i); }

fk::MixedSpaceSpec unit_tensor(double p, double q, std::size_t n1, std::size_t n2) {
  return fk::MixedSpaceSpec::tensor(p, q, fk::SummationOrder::kInnerOverFirst, fk::WeightVector::ones(n1),
                                    fk::WeightVector::ones(n2));
}

}  // namespace

TEST(SimpleTensor, MatrixUnit) {
  const auto t = fk::simple_tensor(e(2, 0), e(2, 1));
  EXPECT_EQ(t.matrix(), mat({{0, 0}, {1, 0}}));
}

TEST(SimpleTensor, ConjugateHomogeneousInFirstFactor) {
  auto rng = fk_test::rng_for("homog");
  const fk::ComplexVector f1 = rng.disk_vector(3);
  const fk::ComplexVector f2 = rng.disk_vector(4);
  const fk::Complex alpha(0.3, -1.2);
  const auto lhs = alpha * fk::simple_tensor(f1, f2);
  EXPECT_LT(fk_test::max_gap(lhs.matrix(), fk::simple_tensor(std::conj(alpha) * f1, f2).matrix()), 1e-15);
  EXPECT_LT(fk_test::max_gap(lhs.matrix(), fk::simple_tensor(f1, alpha * f2).matrix()), 1e-15);
}

TEST(HsInner, SimpleTensorsFactor) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto rng = fk_test::rng_for("hs_simple", t);
    const fk::ComplexVector f1 = rng.disk_vector(3), g1 = rng.disk_vector(3);
    const fk::ComplexVector f2 = rng.disk_vector(5), g2 = rng.disk_vector(5);
    const fk::Complex expected = std::conj(fk::inner(f1, g1)) * fk::inner(f2, g2);
    EXPECT_LT(std::abs(fk::hs_inner(fk::simple_tensor(f1, f2), fk::simple_tensor(g1, g2)) - expected), 1e-13);
  }
}

TEST(HsInner, Examples) {
  const fk::KernelRep id(fk::ComplexMatrix::Identity(4, 4));
  EXPECT_EQ(fk::hs_inner(id, id), fk::Complex(4.0));
  EXPECT_EQ(fk::hs_inner(fk::simple_tensor(e(2, 0), e(2, 1)), fk::simple_tensor(e(2, 1), e(2, 1))), fk::Complex(0.0));
  EXPECT_THROW(fk::hs_inner(id, fk::KernelRep(fk::ComplexMatrix::Identity(3, 3))), fk::DimensionError);
}

TEST(HsInner, AgainstSimpleTensorIsMatrixElement) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto rng = fk_test::rng_for("hs_probe", t);
    const fk::KernelRep k(rng.disk_matrix(4, 3));
    const fk::ComplexVector f1 = rng.disk_vector(3);
    const fk::ComplexVector f2 = rng.disk_vector(4);
    EXPECT_LT(std::abs(fk::hs_inner(k, fk::simple_tensor(f1, f2)) - fk::inner(k.apply(f1), f2)), 1e-13);
  }
}

TEST(TensorFrame, OrthonormalBases) {
  const auto tf = fk::tensor_frame(fk::canonical_dual(fk::onb(2)), fk::canonical_dual(fk::onb(2)));
  EXPECT_EQ(tf.size(), 4u);
  EXPECT_NEAR(tf.bounds().lower, 1.0, 1e-15);
  EXPECT_NEAR(tf.bounds().upper, 1.0, 1e-15);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      fk::ComplexMatrix unit = fk::ComplexMatrix::Zero(2, 2);
      unit(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
      EXPECT_EQ(tf.element(i, j).matrix(), unit);
    }
  }
}

TEST(TensorFrame, BoundsMultiply) {
  const auto m = fk::canonical_dual(fk::mercedes());
  const auto tf = fk::tensor_frame(m, m);
  EXPECT_EQ(tf.size(), 9u);
  const auto spectrum = fk::hermitian_eig(fk::frame_operator(tf.as_frame()), false).values;
  EXPECT_NEAR(spectrum.minCoeff(), 2.25, 1e-12);
  EXPECT_NEAR(spectrum.maxCoeff(), 2.25, 1e-12);
  EXPECT_NEAR(tf.bounds().lower, 2.25, 1e-12);

  const auto a = fk::canonical_dual(fk::decaying_perturbation(4, 2.0, 0.3, 3));
  const auto b = fk::canonical_dual(fk::finite_gabor(4, 2, 1, fk::gaussian_window(4)));
  const auto ab = fk::tensor_frame(a, b);
  const auto direct = fk::frame_bounds(ab.as_frame());
  EXPECT_NEAR(ab.bounds().lower, a.bounds().lower * b.bounds().lower, 1e-9 * ab.bounds().lower);
  EXPECT_NEAR(ab.bounds().upper, a.bounds().upper * b.bounds().upper, 1e-9 * ab.bounds().upper);
  EXPECT_NEAR(direct.lower, ab.bounds().lower, 1e-9 * ab.bounds().lower);
  EXPECT_NEAR(direct.upper, ab.bounds().upper, 1e-9 * ab.bounds().upper);
}

TEST(TensorFrame, DualElementsAreTensorsOfDuals) {
  const auto a = fk::canonical_dual(fk::mercedes());
  const auto b = fk::canonical_dual(fk_test::repeated2());
  const auto tf = fk::tensor_frame(a, b);
  EXPECT_LT(fk_test::max_gap(tf.dual_element(2, 1).matrix(),
                             fk::simple_tensor(a.dual().vector(2), b.dual().vector(1)).matrix()),
            1e-15);
}

TEST(TensorGram, MatchesDirectEvaluation) {
  const auto a = fk::canonical_dual(fk::decaying_perturbation(3, 1.0, 0.4, 11));
  const auto b = fk::canonical_dual(fk::finite_gabor(4, 2, 1, fk::gaussian_window(4)));
  const auto tf = fk::tensor_frame(a, b);
  const fk::ComplexMatrix g = fk::tensor_gram(a, b);
  ASSERT_EQ(g.rows(), static_cast<Eigen::Index>(tf.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t ip = 0; ip < a.size(); ++ip) {
        for (std::size_t jp = 0; jp < b.size(); ++jp) {
          const fk::Complex direct = fk::hs_inner(tf.element(ip, jp), tf.element(i, j));
          const auto r = static_cast<Eigen::Index>(tf.flat_index(i, j));
          const auto c = static_cast<Eigen::Index>(tf.flat_index(ip, jp));
          EXPECT_LT(std::abs(g(r, c) - direct), 1e-10);
        }
      }
    }
  }
  const fk::ComplexMatrix kron = fk::kron(fk::gram(a.frame()).conjugate(), fk::gram(b.frame()));
  EXPECT_LT(fk_test::max_gap(g, kron), 1e-12);
}

TEST(TensorGram, OrthonormalAndRealCases) {
  const auto o = fk::canonical_dual(fk::onb(3));
  EXPECT_EQ(fk::tensor_gram(o, o), fk::ComplexMatrix::Identity(9, 9));
  const auto m = fk::canonical_dual(fk::mercedes());
  const auto r = fk::canonical_dual(fk_test::repeated2());
  EXPECT_LT(fk_test::max_gap(fk::tensor_gram(m, r), fk::kron(fk::gram(m.frame()), fk::gram(r.frame()))), 1e-15);
}

TEST(Galerkin, Examples) {
  const auto o = fk::canonical_dual(fk::onb(2));
  EXPECT_EQ(fk::galerkin(fk::ComplexMatrix::Identity(2, 2), o, o).entries, fk::ComplexMatrix::Identity(2, 2));
  const auto k = fk::galerkin(fk::simple_tensor(e(2, 0), e(2, 1)).matrix(), o, o).entries;
  EXPECT_EQ(k, mat({{0, 1}, {0, 0}}));
  const auto r = fk::canonical_dual(fk_test::repeated2());
  EXPECT_LT(fk_test::max_gap(fk::galerkin(fk::ComplexMatrix::Identity(2, 2), r, r).entries,
                             mat({{0.25, 0.25, 0}, {0.25, 0.25, 0}, {0, 0, 1}})),
            1e-15);
  EXPECT_THROW(fk::galerkin(fk::ComplexMatrix::Identity(3, 2), o, o), fk::DimensionError);
}

TEST(Galerkin, IndexSetsAttached) {
  const auto g = fk::canonical_dual(fk::finite_gabor(4, 2, 1, fk::gaussian_window(4)));
  const auto o = fk::canonical_dual(fk::onb(4));
  const auto k = fk::galerkin(fk::ComplexMatrix::Identity(4, 4), g, o);
  EXPECT_EQ(k.rows_index, g.index_set());
  EXPECT_EQ(k.cols_index, o.index_set());
  EXPECT_EQ(k.entries.rows(), 8);
  EXPECT_EQ(k.entries.cols(), 4);
}

TEST(Galerkin, MatchesOracle) {
  const auto a = fk::canonical_dual(fk::mercedes());
  const auto b = fk::canonical_dual(fk::decaying_perturbation(5, 2.0, 0.2, 1));
  const fk::ComplexMatrix op = fk::random_operator(5, 2, fk::DenseKind{}, 3);
  fk::ComplexMatrix expected(3, 5);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      expected(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          fk::inner(op * a.dual().vector(i), b.dual().vector(j));
    }
  }
  EXPECT_LT(fk_test::max_gap(fk::galerkin(op, a, b).entries, expected), 1e-14);
}

TEST(SynthesizeKernel, RoundTrip) {
  const std::vector<fk::FramePair> pairs = {
      fk::canonical_dual(fk::onb(16)),
      fk::canonical_dual(fk::finite_gabor(16, 2, 2, fk::gaussian_window(16))),
      fk::canonical_dual(fk::decaying_perturbation(16, 4.0, 0.05, 2)),
  };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      const fk::ComplexMatrix op = fk::random_operator(16, 16, fk::DenseKind{}, a * 3 + b);
      const auto k = fk::galerkin(op, pairs[a], pairs[b]);
      const auto back = fk::synthesize_kernel(k, pairs[a], pairs[b]);
      EXPECT_LE((back.matrix() - op).norm(), 1e-9 * op.norm());
    }
  }
}

TEST(SynthesizeKernel, IdentityAndLinearity) {
  const auto o = fk::canonical_dual(fk::onb(3));
  EXPECT_EQ(fk::synthesize_kernel(fk::ComplexMatrix::Identity(3, 3), o, o).matrix(),
            fk::ComplexMatrix::Identity(3, 3));
  const auto m = fk::canonical_dual(fk::mercedes());
  auto rng = fk_test::rng_for("lin");
  const fk::ComplexMatrix k1 = rng.disk_matrix(3, 3);
  const fk::ComplexMatrix k2 = rng.disk_matrix(3, 3);
  const fk::ComplexMatrix sum = fk::synthesize_kernel(k1 + k2, m, m).matrix();
  const fk::ComplexMatrix parts = fk::synthesize_kernel(k1, m, m).matrix() + fk::synthesize_kernel(k2, m, m).matrix();
  EXPECT_LT(fk_test::max_gap(sum, parts), 1e-14);
  EXPECT_THROW(fk::synthesize_kernel(fk::ComplexMatrix::Identity(2, 3), m, m), fk::DimensionError);
}

TEST(SynthesizeKernel, OuterKernelIdentity) {
  const auto a = fk::canonical_dual(fk::finite_gabor(8, 2, 2, fk::gaussian_window(8)));
  const auto b = fk::canonical_dual(fk::decaying_perturbation(6, 3.0, 0.1, 4));
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto rng = fk_test::rng_for("outer_identity", t);
    const fk::ComplexMatrix op = rng.disk_matrix(6, 8);
    const fk::ComplexVector f1 = rng.disk_vector(8);
    const fk::ComplexVector f2 = rng.disk_vector(6);
    const auto kernel = fk::synthesize_kernel(fk::galerkin(op, a, b), a, b);
    const fk::Complex lhs = fk::hs_inner(kernel, fk::simple_tensor(f1, f2));
    const fk::Complex rhs = fk::inner(op * f1, f2);
    EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Correspondence, OrthonormalResidualIsZero) {
  const auto o = fk::canonical_dual(fk::onb(3));
  EXPECT_EQ(fk::correspondence_residual(fk_test::rng_for("corr_onb").disk_matrix(3, 3), o, o), 0.0);
}

TEST(Correspondence, RangeMembershipAndIdempotence) {
  const auto r = fk::canonical_dual(fk_test::repeated2());
  for (std::uint64_t t = 0; t < 10; ++t) {
    auto rng = fk_test::rng_for("corr", t);
    EXPECT_LE(fk::correspondence_residual(fk::galerkin(rng.disk_matrix(2, 2), r, r), r, r), 1e-10);
    fk::ComplexMatrix k = rng.disk_matrix(3, 3);
    k(0, 0) += 1.0;
    k(1, 0) -= 1.0;
    EXPECT_GT(fk::correspondence_residual(k, r, r), 0.1);
    const fk::ComplexMatrix once = fk::correspondence_projection(k, r, r);
    EXPECT_LE(fk::correspondence_residual(once, r, r), 1e-10);
    EXPECT_LT(fk_test::max_gap(fk::correspondence_projection(once, r, r), once), 1e-12);
  }
}

TEST(KernelNorm, Examples) {
  const auto o = fk::canonical_dual(fk::onb(2));
  const fk::KernelRep k(mat({{1, 2}, {3, 4}}));
  EXPECT_NEAR(fk::kernel_norm(k, o, o, unit_tensor(1, 1, 2, 2)), 10.0, 1e-14);
  EXPECT_NEAR(fk::kernel_norm(k, o, o, unit_tensor(2, 2, 2, 2)), std::sqrt(30.0), 1e-14);
  const auto weighted = fk::MixedSpaceSpec::tensor(1, 1, fk::SummationOrder::kInnerOverFirst,
                                                   fk::WeightVector(fk_test::rvec({1, 2})), fk::WeightVector::ones(2));
  EXPECT_NEAR(fk::kernel_norm(k, o, o, weighted), 16.0, 1e-14);
}

TEST(KernelNorm, FrobeniusForOrthonormalBases) {
  const auto o = fk::canonical_dual(fk::onb(6));
  for (std::uint64_t t = 0; t < 10; ++t) {
    const fk::KernelRep k(fk_test::rng_for("frob", t).disk_matrix(6, 6));
    EXPECT_NEAR(fk::kernel_norm(k, o, o, unit_tensor(2, 2, 6, 6)), k.matrix().norm(), 1e-12);
  }
}

TEST(GalerkinJson, RoundTrip) {
  const auto g = fk::canonical_dual(fk::finite_gabor(4, 2, 1, fk::gaussian_window(4)));
  const auto k = fk::galerkin(fk_test::rng_for("json").disk_matrix(4, 4), g, g);
  const auto back = fk::galerkin_from_json(fk::galerkin_to_json(k));
  EXPECT_EQ(back.rows_index, k.rows_index);
  EXPECT_EQ(back.cols_index, k.cols_index);
  EXPECT_EQ(back.entries, k.entries);
  auto bad = fk::galerkin_to_json(k);
  bad["rows"] = 7;
  EXPECT_THROW(fk::galerkin_from_json(bad), fk::ValidationError);
}
