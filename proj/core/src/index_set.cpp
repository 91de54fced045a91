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

#include "framekernel/index_set.hpp"

#include <algorithm>
#include <sstream>

#include "framekernel/error.hpp"

namespace framekernel {

namespace {

std::size_t cyclic_gap(std::size_t a, std::size_t b, std::size_t n) {
  const std::size_t d = a > b ? a - b : b - a;
  return std::min(d, n - d);
}

}  // namespace

IndexSet::IndexSet(Kind kind, Metric metric, std::array<std::size_t, 2> extents)
    : kind_(kind), metric_(metric), extents_(extents), size_(extents[0] * extents[1]) {}

IndexSet IndexSet::linear(std::size_t n) {
  return IndexSet(Kind::kLinear, Metric::kAbsolute, {n, 1});
}

IndexSet IndexSet::cyclic(std::size_t n) {
  return IndexSet(Kind::kCyclic, Metric::kCyclic, {n, 1});
}

IndexSet IndexSet::cyclic2d(std::size_t n1, std::size_t n2, Metric metric) {
  if (metric != Metric::kCyclicMax && metric != Metric::kCyclicSum) {
    throw PreconditionError("cyclic2d index set needs the cyclic max or sum metric");
  }
  return IndexSet(Kind::kCyclic2D, metric, {n1, n2});
}

std::array<std::size_t, 2> IndexSet::coordinates(std::size_t flat) const {
  if (flat >= size_) throw PreconditionError("index out of range");
  if (kind_ != Kind::kCyclic2D) return {flat, 0};
  return {flat / extents_[1], flat % extents_[1]};
}

double IndexSet::distance(std::size_t a, std::size_t b) const {
  switch (metric_) {
    case Metric::kAbsolute:
      return static_cast<double>(a > b ? a - b : b - a);
    case Metric::kCyclic:
      return static_cast<double>(cyclic_gap(a, b, size_));
    case Metric::kCyclicMax:
    case Metric::kCyclicSum: {
      const auto ca = coordinates(a);
      const auto cb = coordinates(b);
      const std::size_t d1 = cyclic_gap(ca[0], cb[0], extents_[0]);
      const std::size_t d2 = cyclic_gap(ca[1], cb[1], extents_[1]);
      return static_cast<double>(metric_ == Metric::kCyclicMax ? std::max(d1, d2) : d1 + d2);
    }
  }
  return 0.0;
}

std::string IndexSet::label(std::size_t flat) const {
  const auto c = coordinates(flat);
  if (kind_ != Kind::kCyclic2D) return std::to_string(c[0]);
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + ")";
}

std::string to_string(IndexSet::Kind kind) {
  switch (kind) {
    case IndexSet::Kind::kLinear: return "linear";
    case IndexSet::Kind::kCyclic: return "cyclic";
    case IndexSet::Kind::kCyclic2D: return "cyclic2d";
  }
  return "?";
}

std::string to_string(IndexSet::Metric metric) {
  switch (metric) {
    case IndexSet::Metric::kAbsolute: return "absolute";
    case IndexSet::Metric::kCyclic: return "cyclic";
    case IndexSet::Metric::kCyclicMax: return "cyclic_max";
    case IndexSet::Metric::kCyclicSum: return "cyclic_sum";
  }
  return "?";
}

nlohmann::json index_set_to_json(const IndexSet& set) {
  nlohmann::json j;
  j["kind"] = to_string(set.kind());
  if (set.kind() == IndexSet::Kind::kCyclic2D) {
    j["size"] = {set.extents()[0], set.extents()[1]};
    j["metric"] = to_string(set.metric());
  } else {
    j["size"] = set.size();
  }
  return j;
}

IndexSet index_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("size")) {
    throw ValidationError("index_set needs \"kind\" and \"size\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  const auto& size = j.at("size");
  auto positive = [](const nlohmann::json& v) {
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
      throw ValidationError("index_set size entries must be positive integers");
    }
    return static_cast<std::size_t>(v.get<long long>());
  };
  if (kind == "linear") return IndexSet::linear(positive(size));
  if (kind == "cyclic") return IndexSet::cyclic(positive(size));
  if (kind == "cyclic2d") {
    if (!size.is_array() || size.size() != 2) {
      throw ValidationError("cyclic2d index_set size must be [N1, N2]");
    }
    auto metric = IndexSet::Metric::kCyclicMax;
    if (j.contains("metric")) {
      const auto m = j.at("metric").get<std::string>();
      if (m == "cyclic_sum") {
        metric = IndexSet::Metric::kCyclicSum;
      } else if (m != "cyclic_max") {
        throw ValidationError("unknown cyclic2d metric \"" + m + "\"");
      }
    }
    return IndexSet::cyclic2d(positive(size[0]), positive(size[1]), metric);
  }
  throw ValidationError("unknown index_set kind \"" + kind + "\"");
}

}  // namespace framekernel
