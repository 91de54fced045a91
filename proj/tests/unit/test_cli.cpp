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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "framekernel/frame_io.hpp"
#include "framekernel/generators.hpp"
#include "framekernel/matrix_io.hpp"
#include "framekernel_cli/cli.hpp"
#include "test_support.hpp"

namespace fk = framekernel;
namespace fs = std::filesystem;
using fk_test::mat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fk::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("framekernel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const nlohmann::json& j) const {
    std::ofstream(path(name)) << j.dump();
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenWritesFrame) {
  const auto r = run({"gen", "onb", "--dim", "4", "-o", path("f.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(fk::load_frame(path("f.json")).size(), 4u);
}

TEST_F(CliTest, GenFromSpecFile) {
  const auto spec = write("spec.json", {{"kind", "gabor"}, {"N", 8}, {"a", 2}, {"b", 2}, {"window", "gaussian"}});
  const auto r = run({"gen", spec});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(fk::frame_from_json(nlohmann::json::parse(r.out)).size(), 16u);
}

TEST_F(CliTest, VerifyOuterReport) {
  ASSERT_EQ(run({"gen", "onb", "--dim", "2", "-o", path("f.json")}).code, 0);
  const auto op = write("O.json", fk::matrix_to_json(mat({{1, 2}, {3, 4}})));
  const auto r = run({"verify", "outer", "--frame1", path("f.json"), "--frame2", path("f.json"), "--op", op, "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j.at("ratio").get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j.at("lhs").get<double>(), 4.0);
  EXPECT_EQ(j.at("seed"), 1);
  EXPECT_TRUE(j.contains("run"));
  EXPECT_TRUE(j.contains("tool_version"));
}

TEST_F(CliTest, VerifyVariants) {
  ASSERT_EQ(run({"gen", "onb", "--dim", "2", "-o", path("f.json")}).code, 0);
  const auto op = write("O.json", fk::matrix_to_json(mat({{1, 2}, {3, 4}})));
  const auto f = path("f.json");
  const auto schur = run({"verify", "schur", "--frame1", f, "--frame2", f, "--op", op, "--p", "inf", "--variant", "ii"});
  ASSERT_EQ(schur.code, 0) << schur.err;
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(schur.out).at("lhs").get<double>(), 7.0);
  const auto inner = run({"--format", "csv", "verify", "inner", "--frame1", f, "--frame2", f, "--kernel", op});
  ASSERT_EQ(inner.code, 0) << inner.err;
  EXPECT_NE(inner.out.find("\n"), std::string::npos);
  for (const std::string kind : {"projective", "schatten"}) {
    const auto r = run({"verify", kind, "--frame1", f, "--frame2", f, "--op", op});
    EXPECT_EQ(r.code, 0) << kind << ": " << r.err;
  }
  const auto indep = run({"verify", "independence", "--frame1", f, "--frame2", f, "--op", op, "--frame1b", f,
                          "--frame2b", f});
  EXPECT_EQ(indep.code, 0) << indep.err;
}

TEST_F(CliTest, NegativeToleranceRejected) {
  ASSERT_EQ(run({"gen", "onb", "--dim", "2", "-o", path("f.json")}).code, 0);
  const auto op = write("O.json", fk::matrix_to_json(mat({{1, 2}, {3, 4}})));
  const auto f = path("f.json");
  EXPECT_EQ(run({"--tol", "-0.5", "verify", "outer", "--frame1", f, "--frame2", f, "--op", op}).code, 2);
}

TEST_F(CliTest, DiagnosticVerbs) {
  ASSERT_EQ(run({"gen", "mercedes", "-o", path("m.json")}).code, 0);
  const auto m = path("m.json");
  const auto b = run({"bounds", m});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NEAR(nlohmann::json::parse(b.out).at("upper_bound").get<double>(), 1.5, 1e-12);
  ASSERT_EQ(run({"dual", m, "-o", path("d.json")}).code, 0);
  EXPECT_EQ(fk::load_frame(path("d.json")).size(), 3u);
  EXPECT_EQ(run({"localize", m, "--s", "2"}).code, 0);
  const auto v = write("v.json", fk::vector_to_json(fk_test::vec({0.0, 1.0})));
  const auto n = run({"coorbit-norm", m, v, "--p", "2"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_NEAR(nlohmann::json::parse(n.out).at("norm").get<double>(), std::sqrt(2.0 / 3.0), 1e-12);
}

TEST_F(CliTest, GalerkinRoundTrip) {
  ASSERT_EQ(run({"gen", "gabor", "--N", "8", "--a", "2", "--b", "2", "--window", "gaussian", "-o", path("g.json")}).code, 0);
  const fk::ComplexMatrix op = fk::random_operator(8, 8, fk::DenseKind{}, 4);
  const auto o = write("O.json", fk::matrix_to_json(op));
  const auto g = path("g.json");
  ASSERT_EQ(run({"galerkin", o, g, g, "-o", path("k.json")}).code, 0);
  ASSERT_EQ(run({"kernel-synth", path("k.json"), g, g, "-o", path("back.json")}).code, 0);
  const auto back = fk::matrix_from_json(fk::read_json_file(path("back.json")));
  EXPECT_LE((back - op).norm(), 1e-9 * op.norm());
  const auto csv = run({"--format", "csv", "galerkin", o, g, g});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 16);
}

TEST_F(CliTest, Compress) {
  ASSERT_EQ(run({"gen", "onb", "--dim", "3", "-o", path("f.json")}).code, 0);
  const auto o = write("I.json", fk::matrix_to_json(fk::ComplexMatrix::Identity(3, 3)));
  const auto r = run({"compress", o, path("f.json"), path("f.json"), "--tau", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("kept"), 3);
  EXPECT_EQ(j.at("total"), 9);
}

TEST_F(CliTest, UsageErrors) {
  const auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"suite", "medium"}).code, 2);
  EXPECT_EQ(run({"bounds", path("missing.json")}).code, 2);
}

TEST_F(CliTest, ValidationErrors) {
  std::ofstream(path("bad.json")) << "{ not json";
  EXPECT_EQ(run({"bounds", path("bad.json")}).code, 3);
  const auto wrong = write("wrong.json", {{"vectors", 3}});
  EXPECT_EQ(run({"bounds", wrong}).code, 3);
}

TEST_F(CliTest, SeedFromEnvironment) {
  ASSERT_EQ(run({"gen", "onb", "--dim", "2", "-o", path("f.json")}).code, 0);
  const auto op = write("O.json", fk::matrix_to_json(mat({{1, 2}, {3, 4}})));
  ::setenv(fk::cli::kSeedEnvironmentVariable, "17", 1);
  const auto r = run({"verify", "outer", "--frame1", path("f.json"), "--frame2", path("f.json"), "--op", op});
  ::unsetenv(fk::cli::kSeedEnvironmentVariable);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("seed"), 17);
}

TEST_F(CliTest, SuiteFastIsDeterministic) {
  const auto a = run({"suite", "fast", "--seed", "0", "-o", path("s.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  auto ja = fk::read_json_file(path("s.json"));
  const auto b = run({"suite", "fast", "--seed", "0", "-o", path("s.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  auto jb = fk::read_json_file(path("s.json"));
  EXPECT_GE(ja.at("check_count").get<int>(), 12);
  for (auto* j : {&ja, &jb}) {
    for (auto& c : j->at("checks")) c.erase("elapsed_ms");
    j->erase("elapsed_ms");
  }
  EXPECT_EQ(ja.dump(), jb.dump());
}
