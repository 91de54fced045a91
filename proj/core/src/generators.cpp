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

#include "framekernel/generators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "framekernel/frame_io.hpp"
#include "framekernel/matrix_io.hpp"
#include "framekernel/rng.hpp"

namespace framekernel {

Frame onb(std::size_t d) {
  if (d == 0) throw PreconditionError("onb: dimension must be at least 1");
  const auto n = static_cast<Eigen::Index>(d);
  return Frame(IndexSet::linear(d), ComplexMatrix::Identity(n, n));
}

Frame mercedes() {
  const double h = std::sqrt(3.0) / 2.0;
  ComplexMatrix v(2, 3);
  v << 0.0, -h, h,  //
      1.0, -0.5, -0.5;
  return Frame(IndexSet::linear(3), std::move(v));
}

Frame repeated_first_basis(std::size_t d) {
  if (d == 0) throw PreconditionError("repeated_first_basis: dimension must be at least 1");
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix v = ComplexMatrix::Zero(n, n + 1);
  v(0, 0) = 1.0;
  v.rightCols(n) = ComplexMatrix::Identity(n, n);
  return Frame(IndexSet::linear(d + 1), std::move(v));
}

Frame finite_gabor(std::size_t length, std::size_t time_step, std::size_t freq_step,
                   const ComplexVector& window) {
  if (length == 0 || time_step == 0 || freq_step == 0 || length % time_step != 0 ||
      length % freq_step != 0) {
    std::ostringstream os;
    os << "finite_gabor: steps a=" << time_step << ", b=" << freq_step
       << " must divide N=" << length;
    throw PreconditionError(os.str());
  }
  if (static_cast<std::size_t>(window.size()) != length) {
    throw DimensionError("finite_gabor: window length differs from N");
  }
  if (window.cwiseAbs().maxCoeff() == 0.0) throw PreconditionError("finite_gabor: zero window");

  const std::size_t shifts = length / time_step;
  const std::size_t mods = length / freq_step;
  const auto n = static_cast<Eigen::Index>(length);
  ComplexMatrix v(n, static_cast<Eigen::Index>(shifts * mods));
  for (std::size_t m = 0; m < mods; ++m) {
    for (std::size_t s = 0; s < shifts; ++s) {
      const auto col = static_cast<Eigen::Index>(m * shifts + s);
      for (std::size_t t = 0; t < length; ++t) {
        // Reduce the phase index mod N before scaling to keep the angle exact.
        const std::size_t phase = (m * freq_step * t) % length;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                             static_cast<double>(length);
        const std::size_t shifted = (t + length - (s * time_step) % length) % length;
        v(static_cast<Eigen::Index>(t), col) =
            std::polar(1.0, angle) * window(static_cast<Eigen::Index>(shifted));
      }
    }
  }
  return Frame(IndexSet::cyclic2d(mods, shifts), std::move(v));
}

ComplexVector gaussian_window(std::size_t length) {
  ComplexVector g(static_cast<Eigen::Index>(length));
  for (std::size_t t = 0; t < length; ++t) {
    const double dc = static_cast<double>(std::min(t, length - t));
    g(static_cast<Eigen::Index>(t)) =
        std::exp(-std::numbers::pi * dc * dc / static_cast<double>(length));
  }
  return g;
}

Frame decaying_perturbation(std::size_t d, double decay, double amplitude, std::uint64_t seed) {
  if (d == 0) throw PreconditionError("decaying_perturbation: dimension must be at least 1");
  if (!std::isfinite(decay) || decay < 0.0 || !std::isfinite(amplitude) || amplitude < 0.0) {
    throw PreconditionError("decaying_perturbation: decay and amplitude must be finite, >= 0");
  }
  const auto n = static_cast<Eigen::Index>(d);
  Rng rng(seed, "generators", "decaying_perturbation", 0);
  ComplexMatrix xi = rng.disk_matrix(n, n);
  ComplexMatrix shape(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      shape(j, i) = xi(i, j) * std::pow(1.0 + static_cast<double>(std::abs(i - j)), -decay);
    }
  }
  double eps = amplitude;
  for (int attempt = 0; attempt <= 3; ++attempt, eps *= 0.5) {
    try {
      return Frame(IndexSet::linear(d), ComplexMatrix(ComplexMatrix::Identity(n, n) + eps * shape));
    } catch (const NotAFrameError&) {
    }
  }
  throw PreconditionError("decaying_perturbation: no frame after halving the amplitude 3 times");
}

ComplexMatrix random_operator(std::size_t rows, std::size_t cols, const OperatorKind& kind,
                              std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw PreconditionError("random_operator: empty shape");
  const auto r = static_cast<Eigen::Index>(rows);
  const auto c = static_cast<Eigen::Index>(cols);
  Rng rng(seed, "generators", "random_operator", 0);
  if (const auto* lowrank = std::get_if<LowRankKind>(&kind)) {
    if (lowrank->rank == 0) throw PreconditionError("random_operator: rank must be >= 1");
    const auto k = static_cast<Eigen::Index>(lowrank->rank);
    const ComplexMatrix left = rng.disk_matrix(r, k);
    const ComplexMatrix right = rng.disk_matrix(k, c);
    return left * right;
  }
  ComplexMatrix m = rng.disk_matrix(r, c);
  if (const auto* banded = std::get_if<BandedKind>(&kind)) {
    const auto w = static_cast<Eigen::Index>(banded->width);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < c; ++j) {
        if (std::abs(i - j) > w) m(i, j) = 0.0;
      }
    }
  }
  return m;
}

ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  const auto n = static_cast<Eigen::Index>(d);
  Rng rng(seed, "generators", "random_unitary", 0);
  const ComplexMatrix a = rng.disk_matrix(n, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex diag = rmat(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

namespace {

std::size_t positive_size(const nlohmann::json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_number_integer() ||
      spec.at(key).get<long long>() <= 0) {
    throw ValidationError(std::string("generator spec: \"") + key +
                          "\" must be a positive integer");
  }
  return static_cast<std::size_t>(spec.at(key).get<long long>());
}

std::uint64_t seed_of(const nlohmann::json& spec) {
  if (!spec.contains("seed")) return 0;
  if (!spec.at("seed").is_number_unsigned() && !spec.at("seed").is_number_integer()) {
    throw ValidationError("generator spec: \"seed\" must be a non-negative integer");
  }
  const auto s = spec.at("seed").get<long long>();
  if (s < 0) throw ValidationError("generator spec: \"seed\" must be non-negative");
  return static_cast<std::uint64_t>(s);
}

double number_of(const nlohmann::json& spec, const char* key) {
  if (!spec.contains(key) || !spec.at(key).is_number()) {
    throw ValidationError(std::string("generator spec: \"") + key + "\" must be a number");
  }
  return spec.at(key).get<double>();
}

ComplexVector window_of(const nlohmann::json& spec, std::size_t n) {
  const auto len = static_cast<Eigen::Index>(n);
  if (!spec.contains("window")) return gaussian_window(n);
  const auto& w = spec.at("window");
  if (w.is_array()) return vector_from_json(w);
  const auto name = w.get<std::string>();
  if (name == "gaussian") return gaussian_window(n);
  if (name == "delta") {
    ComplexVector g = ComplexVector::Zero(len);
    g(0) = 1.0;
    return g;
  }
  if (name == "ones") {
    return ComplexVector::Constant(len, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  }
  throw ValidationError("generator spec: unknown window \"" + name + "\"");
}

}  // namespace

nlohmann::json generate(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw ValidationError("generator spec needs a \"kind\"");
  }
  const auto kind = spec.at("kind").get<std::string>();
  if (kind == "onb") return frame_to_json(onb(positive_size(spec, "dim")));
  if (kind == "mercedes") return frame_to_json(mercedes());
  if (kind == "repeated_first") return frame_to_json(repeated_first_basis(positive_size(spec, "dim")));
  if (kind == "gabor") {
    const std::size_t n = positive_size(spec, "N");
    return frame_to_json(
        finite_gabor(n, positive_size(spec, "a"), positive_size(spec, "b"), window_of(spec, n)));
  }
  if (kind == "decaying_perturbation") {
    return frame_to_json(decaying_perturbation(positive_size(spec, "dim"), number_of(spec, "s"),
                                               number_of(spec, "eps"), seed_of(spec)));
  }
  if (kind == "random_operator") {
    const std::string op = spec.value("op", std::string("dense"));
    OperatorKind k = DenseKind{};
    if (op == "banded") {
      if (!spec.contains("width") || !spec.at("width").is_number_integer() ||
          spec.at("width").get<long long>() < 0) {
        throw ValidationError("generator spec: banded operators need a \"width\" >= 0");
      }
      k = BandedKind{static_cast<std::size_t>(spec.at("width").get<long long>())};
    } else if (op == "lowrank") {
      k = LowRankKind{positive_size(spec, "rank")};
    } else if (op != "dense") {
      throw ValidationError("generator spec: unknown operator kind \"" + op + "\"");
    }
    return matrix_to_json(
        random_operator(positive_size(spec, "rows"), positive_size(spec, "cols"), k, seed_of(spec)));
  }
  throw ValidationError("generator spec: unknown kind \"" + kind + "\"");
}

}  // namespace framekernel
