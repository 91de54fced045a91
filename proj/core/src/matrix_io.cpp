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

#include "framekernel/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace framekernel {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("complex entry must be [re, im], got " + j.dump());
  }
  const Complex z{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ValidationError("complex entry is not finite");
  }
  return z;
}

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ValidationError("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
  }
  const auto rows = j.at("rows").get<long long>();
  const auto cols = j.at("cols").get<long long>();
  const json& entries = j.at("entries");
  if (rows < 0 || cols < 0 || !entries.is_array() ||
      static_cast<long long>(entries.size()) != rows * cols) {
    std::ostringstream os;
    os << "matrix JSON: rows*cols = " << rows * cols << " but " << entries.size()
       << " entries";
    throw ValidationError(os.str());
  }
  ComplexMatrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(entries[k++]);
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json entries = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) entries.push_back(complex_to_json(v(k)));
  return entries;
}

ComplexVector vector_from_json(const json& j) {
  if (j.is_array()) {
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
      v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
    }
    return v;
  }
  const ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1 && m.rows() != 1) {
    throw ValidationError("vector JSON must have a single row or column");
  }
  return m.cols() == 1 ? ComplexVector(m.col(0)) : ComplexVector(m.row(0).transpose());
}

RealVector weights_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("weight") : j;
  if (!arr.is_array()) throw ValidationError("weight must be an array of positive reals");
  RealVector w(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_number()) throw ValidationError("weight entries must be numbers");
    const double x = arr[k].get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw ValidationError("weight entries must be positive and finite");
    }
    w(static_cast<Eigen::Index>(k)) = x;
  }
  return w;
}

json weights_to_json(const RealVector& w) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < w.size(); ++k) arr.push_back(w(k));
  return arr;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string matrix_to_csv(const ComplexMatrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      const Complex z = m(r, c);
      out += format_double(z.real());
      if (!std::signbit(z.imag())) out += '+';
      out += format_double(z.imag());
      out += 'i';
    }
    out += '\n';
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

}  // namespace framekernel
