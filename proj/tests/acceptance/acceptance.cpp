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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass. Usage: framekernel_acceptance <path to framekernel tool>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "framekernel_checks/suite.hpp"

namespace fk = framekernel;
namespace checks = framekernel::checks;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;
};

Outcome run_checks(const std::vector<std::string>& names, double time_limit_s = 0.0) {
  Outcome o;
  const checks::SuiteOptions options{};
  double total_ms = 0.0;
  std::ostringstream note;
  for (const auto& name : names) {
    const auto r = checks::run_check(name, options);
    total_ms += r.elapsed_ms;
    note << name << " trials=" << r.trials;
    if (!r.pass) {
      o.pass = false;
      note << " FAILED: " << r.failure;
    }
    note << "; ";
  }
  if (time_limit_s > 0.0) {
    note << "time=" << total_ms / 1000.0 << "s (limit " << time_limit_s << "s)";
    if (total_ms / 1000.0 >= time_limit_s) o.pass = false;
  }
  o.note = note.str();
  return o;
}

Outcome run_tool_suite(const std::string& tool, const std::filesystem::path& out, double& seconds) {
  const std::string cmd = "\"" + tool + "\" suite fast --seed 0 -o \"" + out.string() + "\"";
  const auto start = Clock::now();
  const int status = std::system(cmd.c_str());
  seconds = std::chrono::duration<double>(Clock::now() - start).count();
  Outcome o;
  o.pass = status == 0;
  if (!o.pass) o.note = "exit status " + std::to_string(status);
  return o;
}

Outcome suite_determinism(const std::string& tool) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "framekernel_acceptance";
  fs::create_directories(dir);
  std::array<double, 2> seconds{};
  std::array<std::string, 2> reports;
  Outcome o;
  for (std::size_t k = 0; k < 2; ++k) {
    const fs::path out = dir / "summary.json";
    const auto r = run_tool_suite(tool, out, seconds[k]);
    if (!r.pass) return {false, "run " + std::to_string(k) + ": " + r.note};
    std::ifstream in(out);
    reports[k] = checks::strip_timing(nlohmann::json::parse(in)).dump();
  }
  fs::remove_all(dir);
  const auto summary = nlohmann::json::parse(reports[0]);
  std::ostringstream note;
  note << "checks=" << summary.at("check_count") << " times=" << seconds[0] << "s," << seconds[1]
       << "s (limit 60s) identical=" << (reports[0] == reports[1] ? "yes" : "no");
  o.pass = reports[0] == reports[1] && seconds[0] < 60.0 && seconds[1] < 60.0 &&
           summary.at("pass").get<bool>() && summary.at("check_count").get<int>() >= 12;
  o.note = note.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <framekernel tool>\n";
    return 2;
  }
  const std::string tool = argv[1];

  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "kernel round-trip", [] { return run_checks({"kernel_roundtrip"}, 30.0); }},
      {2, "correspondence principle", [] { return run_checks({"correspondence_principle"}); }},
      {3, "outer theorem equality on orthonormal bases", [] { return run_checks({"outer_onb_equality"}); }},
      {4, "Schur characterizations", [] { return run_checks({"schur_onb", "schur_gabor_budget"}); }},
      {5, "projective tensor sandwich", [] { return run_checks({"projective_sandwich"}); }},
      {6, "inner theorem", [] { return run_checks({"inner_theorem"}); }},
      {7, "frame independence", [] { return run_checks({"frame_independence"}); }},
      {8, "Schatten sufficiency", [] { return run_checks({"schatten_sufficiency"}); }},
      {9, "localisation diagnostics",
       [] { return run_checks({"gabor_tightness", "perturbation_jaffard", "element_norm_bound"}); }},
      {10, "suite fast determinism and runtime", [&tool] { return suite_determinism(tool); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.note
              << "]\n";
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
