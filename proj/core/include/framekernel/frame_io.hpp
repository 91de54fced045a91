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

#include <string>

#include <nlohmann/json.hpp>

#include "framekernel/frames.hpp"

namespace framekernel {

/// {"space_dim": d, "index_set": {...}, "vectors": [[[re, im], ...], ...]}
nlohmann::json frame_to_json(const Frame& frame);

/// Validates shape, finiteness and the spanning property; throws
/// ValidationError on malformed input and NotAFrameError if the vectors do
/// not span the space.
Frame frame_from_json(const nlohmann::json& j);

Frame load_frame(const std::string& path);

/// {"space_dim", "size", "lower_bound", "upper_bound", "condition", "tight"}
nlohmann::json frame_bounds_summary(const Frame& frame);

}  // namespace framekernel
