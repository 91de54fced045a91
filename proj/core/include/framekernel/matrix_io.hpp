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

// JSON and CSV encodings of complex matrices and vectors.
//
//   {"rows": n, "cols": m, "entries": [[re, im], ...]}   row-major
//
// Vectors are accepted either in that form (one column) or as a bare
// array of [re, im] pairs.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "framekernel/numeric.hpp"

namespace framekernel {

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

/// Positive real weights: a bare array or an object with a "weight" array.
RealVector weights_from_json(const nlohmann::json& j);
nlohmann::json weights_to_json(const RealVector& w);

/// CSV export with one "re+imi" cell per entry; export only.
std::string matrix_to_csv(const ComplexMatrix& m);

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double x);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace framekernel
