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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace framekernel {

/// Finite index set with a metric. Indices are flat positions 0..size()-1;
/// two-dimensional grids are flattened row-major (first coordinate slowest).
class IndexSet {
 public:
  enum class Kind { kLinear, kCyclic, kCyclic2D };
  enum class Metric { kAbsolute, kCyclic, kCyclicMax, kCyclicSum };

  static IndexSet linear(std::size_t n);
  static IndexSet cyclic(std::size_t n);
  /// Grid Z_{n1} x Z_{n2}; the default metric takes the larger of the two
  /// coordinate cyclic distances.
  static IndexSet cyclic2d(std::size_t n1, std::size_t n2, Metric metric = Metric::kCyclicMax);

  Kind kind() const noexcept { return kind_; }
  Metric metric() const noexcept { return metric_; }
  std::size_t size() const noexcept { return size_; }
  const std::array<std::size_t, 2>& extents() const noexcept { return extents_; }

  /// Coordinates of a flat index: (i, 0) for 1-D sets, (i1, i2) for grids.
  std::array<std::size_t, 2> coordinates(std::size_t flat) const;

  double distance(std::size_t a, std::size_t b) const;

  /// Human-readable label, "3" or "(1,2)".
  std::string label(std::size_t flat) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  IndexSet(Kind kind, Metric metric, std::array<std::size_t, 2> extents);

  Kind kind_;
  Metric metric_;
  std::array<std::size_t, 2> extents_;
  std::size_t size_;
};

std::string to_string(IndexSet::Kind kind);
std::string to_string(IndexSet::Metric metric);

/// {"kind": "linear"|"cyclic"|"cyclic2d", "size": N or [N1, N2], "metric": optional}
nlohmann::json index_set_to_json(const IndexSet& set);
IndexSet index_set_from_json(const nlohmann::json& j);

}  // namespace framekernel
