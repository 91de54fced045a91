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

// Reproducible random numbers.
//
// Generator: xoshiro256** seeded through splitmix64 (stream format "fk-rng/1").
// Only integer arithmetic and exact power-of-two scalings are used, so a
// given seed produces bit-identical output on every platform; no standard
// library distributions are involved.
//
// Stream splitting: every consumer derives its own substream from
// (root seed, module, operation, trial) via substream_seed(), so trials can
// be generated in any order or in parallel without changing the results.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "framekernel/numeric.hpp"

namespace framekernel {

inline constexpr std::string_view kRngVersion = "fk-rng/1 xoshiro256** splitmix64";

std::uint64_t splitmix64(std::uint64_t& state);

/// 64-bit FNV-1a of a string, used to fold names into seeds.
std::uint64_t fnv1a64(std::string_view text);

std::uint64_t substream_seed(std::uint64_t root, std::string_view module,
                             std::string_view operation, std::uint64_t trial);

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t root, std::string_view module, std::string_view operation,
      std::uint64_t trial)
      : Rng(substream_seed(root, module, operation, trial)) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Uniform on the closed complex unit disk (rejection sampling).
  Complex unit_disk();

  ComplexVector disk_vector(Eigen::Index n);
  ComplexMatrix disk_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace framekernel
