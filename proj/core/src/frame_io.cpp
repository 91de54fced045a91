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

#include "framekernel/frame_io.hpp"

#include "framekernel/matrix_io.hpp"

namespace framekernel {

using nlohmann::json;

json frame_to_json(const Frame& frame) {
  json vectors = json::array();
  for (std::size_t i = 0; i < frame.size(); ++i) vectors.push_back(vector_to_json(frame.vector(i)));
  return json{{"space_dim", frame.space_dim()},
              {"index_set", index_set_to_json(frame.index_set())},
              {"vectors", std::move(vectors)}};
}

Frame frame_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space_dim") || !j.contains("index_set") ||
      !j.contains("vectors")) {
    throw ValidationError("frame JSON needs \"space_dim\", \"index_set\" and \"vectors\"");
  }
  const auto d = j.at("space_dim").get<long long>();
  if (d <= 0) throw ValidationError("frame JSON: space_dim must be positive");
  IndexSet index_set = index_set_from_json(j.at("index_set"));
  const json& vectors = j.at("vectors");
  if (!vectors.is_array() || vectors.size() != index_set.size()) {
    throw ValidationError("frame JSON: number of vectors does not match the index set");
  }
  ComplexMatrix m(d, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    const ComplexVector v = vector_from_json(vectors[k]);
    if (v.size() != d) {
      throw ValidationError("frame JSON: vector " + std::to_string(k) +
                            " has the wrong dimension");
    }
    m.col(static_cast<Eigen::Index>(k)) = v;
  }
  return Frame(std::move(index_set), std::move(m));
}

Frame load_frame(const std::string& path) { return frame_from_json(read_json_file(path)); }

json frame_bounds_summary(const Frame& frame) {
  const FrameBounds& b = frame.bounds();
  return json{{"space_dim", frame.space_dim()},
              {"size", frame.size()},
              {"lower_bound", b.lower},
              {"upper_bound", b.upper},
              {"condition", b.upper / b.lower},
              {"tight", b.upper / b.lower - 1.0 <= kDefaultTolerance}};
}

}  // namespace framekernel
