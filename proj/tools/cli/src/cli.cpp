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

#include "framekernel_cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "framekernel/coorbit.hpp"
#include "framekernel/error.hpp"
#include "framekernel/frame_io.hpp"
#include "framekernel/generators.hpp"
#include "framekernel/localisation.hpp"
#include "framekernel/matrix_io.hpp"
#include "framekernel/tensor_kernels.hpp"
#include "framekernel/theorems.hpp"
#include "framekernel/version.hpp"
#include "framekernel_checks/suite.hpp"

namespace framekernel::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  std::string format = "json";

  nlohmann::json to_json() const {
    return {{"command", command},
            {"inputs", inputs},
            {"output", output.empty() ? nlohmann::json(nullptr) : nlohmann::json(output)},
            {"seed", seed},
            {"tolerance", tol},
            {"format", format}};
  }
};

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvironmentVariable);
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string(kSeedEnvironmentVariable) + " is not a non-negative integer");
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void text(const std::string& body) const {
    if (config_.output.empty()) {
      out_ << body;
      if (body.empty() || body.back() != '\n') out_ << '\n';
    } else {
      write_text_file(config_.output, body.back() == '\n' ? body : body + '\n');
    }
  }
  void json(const nlohmann::json& j) const { text(j.dump(2)); }
  void report(nlohmann::json j) const {
    j["run"] = config_.to_json();
    j["tool_version"] = std::string(kVersion);
    json(j);
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

FramePair load_pair(const std::string& path) { return canonical_dual(load_frame(path)); }

WeightVector load_weight(const std::string& path, std::size_t expected, const char* what) {
  if (path.empty()) return WeightVector::ones(expected);
  RealVector w = weights_from_json(read_json_file(path));
  if (static_cast<std::size_t>(w.size()) != expected) {
    std::ostringstream os;
    os << what << ": " << w.size() << " weights for " << expected << " frame elements";
    throw ValidationError(os.str());
  }
  return WeightVector(std::move(w));
}

void require_json_format(const RunConfig& config) {
  if (config.format != "json") throw UsageError(config.command + " supports only --format json");
}

bool is_generator_kind(const std::string& s) {
  return s == "onb" || s == "mercedes" || s == "gabor" || s == "decaying_perturbation" ||
         s == "random_operator" || s == "repeated_first";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"framekernel: frames, kernels and operator correspondences in finite dimensions",
               "framekernel"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig config;
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "Root seed (default: $FRAMEKERNEL_SEED or 0)");
  app.add_option("--tol", config.tol, "Relative tolerance for verification reports")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", config.output, "Write the result to this file");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::function<void()> action;
  auto input_file = [](CLI::App* cmd, const char* name, std::string& target, const char* help) {
    cmd->add_option(name, target, help)->required()->check(CLI::ExistingFile);
  };

  // gen ----------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a frame or operator");
  std::string gen_spec;
  nlohmann::json gen_params = nlohmann::json::object();
  std::optional<long long> g_dim, g_n, g_a, g_b, g_rows, g_cols, g_width, g_rank;
  std::optional<double> g_s, g_eps;
  std::optional<std::string> g_window, g_op;
  gen->add_option("spec", gen_spec, "Generator kind or generator spec JSON file")->required();
  gen->add_option("--dim", g_dim);
  gen->add_option("--N", g_n);
  gen->add_option("--a", g_a);
  gen->add_option("--b", g_b);
  gen->add_option("--window", g_window, "gaussian, delta, ones or a vector JSON file");
  gen->add_option("--s", g_s);
  gen->add_option("--eps", g_eps);
  gen->add_option("--rows", g_rows);
  gen->add_option("--cols", g_cols);
  gen->add_option("--op", g_op, "dense, banded or lowrank");
  gen->add_option("--width", g_width);
  gen->add_option("--rank", g_rank);
  gen->callback([&] {
    action = [&] {
      config.command = "gen";
      require_json_format(config);
      nlohmann::json spec;
      if (is_generator_kind(gen_spec)) {
        spec["kind"] = gen_spec;
        auto put = [&](const char* key, const auto& v) {
          if (v) spec[key] = *v;
        };
        put("dim", g_dim);
        put("N", g_n);
        put("a", g_a);
        put("b", g_b);
        put("s", g_s);
        put("eps", g_eps);
        put("rows", g_rows);
        put("cols", g_cols);
        put("op", g_op);
        put("width", g_width);
        put("rank", g_rank);
        if (g_window) {
          if (std::filesystem::exists(*g_window)) {
            spec["window"] = read_json_file(*g_window);
            config.inputs.push_back(*g_window);
          } else {
            spec["window"] = *g_window;
          }
        }
        spec["seed"] = config.seed;
      } else if (std::filesystem::exists(gen_spec)) {
        spec = read_json_file(gen_spec);
        config.inputs.push_back(gen_spec);
        if (spec.is_object() && !spec.contains("seed")) spec["seed"] = config.seed;
      } else {
        throw UsageError("gen: \"" + gen_spec + "\" is neither a generator kind nor a file");
      }
      Emitter(config, out).json(generate(spec));
    };
  });

  // bounds / dual / localize ------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "Frame bounds of a frame");
  std::string frame_path;
  input_file(bounds, "frame", frame_path, "Frame JSON");
  bounds->callback([&] {
    action = [&] {
      config.command = "bounds";
      config.inputs = {frame_path};
      require_json_format(config);
      Emitter(config, out).report(frame_bounds_summary(load_frame(frame_path)));
    };
  });

  auto* dual = app.add_subcommand("dual", "Canonical dual frame");
  input_file(dual, "frame", frame_path, "Frame JSON");
  dual->callback([&] {
    action = [&] {
      config.command = "dual";
      config.inputs = {frame_path};
      require_json_format(config);
      Emitter(config, out).json(frame_to_json(load_pair(frame_path).dual()));
    };
  });

  auto* localize = app.add_subcommand("localize", "Jaffard localisation diagnostics");
  double loc_s = 0.0;
  double loc_threshold = kDefaultLocalisationThreshold;
  input_file(localize, "frame", frame_path, "Frame JSON");
  localize->add_option("--s", loc_s, "Decay exponent")->required()->check(CLI::NonNegativeNumber);
  localize->add_option("--threshold", loc_threshold, "Verdict threshold");
  localize->callback([&] {
    action = [&] {
      config.command = "localize";
      config.inputs = {frame_path};
      require_json_format(config);
      const auto report = localisation_report(load_pair(frame_path), {loc_s}, loc_threshold);
      Emitter(config, out).report(to_json(report));
    };
  });

  // coorbit-norm ---------------------------------------------------------------
  auto* cnorm = app.add_subcommand("coorbit-norm", "Weighted co-orbit norm of a vector");
  std::string vec_path, weight_path, p_text = "2";
  input_file(cnorm, "frame", frame_path, "Frame JSON");
  input_file(cnorm, "vector", vec_path, "Vector JSON");
  cnorm->add_option("--p", p_text, "Exponent in [1, inf]");
  cnorm->add_option("--weight", weight_path, "Weight JSON (default: all ones)")->check(CLI::ExistingFile);
  cnorm->callback([&] {
    action = [&] {
      config.command = "coorbit-norm";
      config.inputs = {frame_path, vec_path};
      if (!weight_path.empty()) config.inputs.push_back(weight_path);
      require_json_format(config);
      const double p = exponent_from_string(p_text);
      FramePair pair = load_pair(frame_path);
      const WeightVector w = load_weight(weight_path, pair.size(), "coorbit-norm");
      const ComplexVector f = vector_from_json(read_json_file(vec_path));
      if (static_cast<std::size_t>(f.size()) != pair.space_dim()) {
        throw ValidationError("coorbit-norm: vector length differs from the frame dimension");
      }
      const CoorbitSpec spec(std::move(pair), SeqSpaceSpec(p, w));
      Emitter(config, out).report({{"norm", coorbit_norm(spec, f)}, {"p", exponent_to_string(p)}});
    };
  });

  // galerkin / kernel-synth ------------------------------------------------
  std::string op_path, f1_path, f2_path;
  auto* gal = app.add_subcommand("galerkin", "Kernel coefficients of an operator");
  input_file(gal, "operator", op_path, "Operator matrix JSON");
  input_file(gal, "frame1", f1_path, "Frame of the input space");
  input_file(gal, "frame2", f2_path, "Frame of the output space");
  gal->callback([&] {
    action = [&] {
      config.command = "galerkin";
      config.inputs = {op_path, f1_path, f2_path};
      const GalerkinMatrix k =
          galerkin(matrix_from_json(read_json_file(op_path)), load_pair(f1_path), load_pair(f2_path));
      if (config.format == "csv") {
        Emitter(config, out).text(matrix_to_csv(k.entries));
      } else {
        Emitter(config, out).json(galerkin_to_json(k));
      }
    };
  });

  auto* synth = app.add_subcommand("kernel-synth", "Operator from kernel coefficients");
  std::string k_path;
  input_file(synth, "coefficients", k_path, "Galerkin coefficient JSON");
  input_file(synth, "frame1", f1_path, "Frame of the input space");
  input_file(synth, "frame2", f2_path, "Frame of the output space");
  synth->callback([&] {
    action = [&] {
      config.command = "kernel-synth";
      config.inputs = {k_path, f1_path, f2_path};
      const GalerkinMatrix k = galerkin_from_json(read_json_file(k_path));
      const ComplexMatrix op = synthesize_kernel(k, load_pair(f1_path), load_pair(f2_path)).matrix();
      if (config.format == "csv") {
        Emitter(config, out).text(matrix_to_csv(op));
      } else {
        Emitter(config, out).json(matrix_to_json(op));
      }
    };
  });

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Check an operator/kernel correspondence");
  verify->require_subcommand(1);
  std::string v_frame1, v_frame2, v_frame1b, v_frame2b, v_w1, v_w2, v_w1b, v_w2b;
  std::string v_p = "2", v_norm_p = "inf", v_norm_q = "inf", v_order = "first", v_variant = "i";
  int verify_exit = kSuccess;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--frame1", v_frame1, "Frame of the input space")->required()->check(CLI::ExistingFile);
    cmd->add_option("--frame2", v_frame2, "Frame of the output space")->required()->check(CLI::ExistingFile);
    cmd->add_option("--op,--kernel", op_path, "Operator (kernel) matrix JSON")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_weights = [&](CLI::App* cmd) {
    cmd->add_option("--weight1", v_w1, "Weight on the first index set")->check(CLI::ExistingFile);
    cmd->add_option("--weight2", v_w2, "Weight on the second index set")->check(CLI::ExistingFile);
  };
  auto emit_report = [&](const VerificationReport& r) {
    if (config.format == "csv") {
      Emitter(config, out).text(report_csv_header() + "\n" + report_csv_row(r) + "\n");
    } else {
      Emitter(config, out).report(to_json(r));
    }
    verify_exit = r.pass ? kSuccess : kVerificationFailed;
  };
  struct Loaded {
    ComplexMatrix op;
    FramePair p1;
    FramePair p2;
  };
  auto load_common = [&](const std::string& name) {
    config.command = "verify " + name;
    config.inputs = {v_frame1, v_frame2, op_path};
    for (const auto* w : {&v_w1, &v_w2}) {
      if (!w->empty()) config.inputs.push_back(*w);
    }
    return Loaded{matrix_from_json(read_json_file(op_path)), load_pair(v_frame1), load_pair(v_frame2)};
  };
  auto with_weights = [&](const Loaded& l, const std::function<VerificationReport(const WeightVector&,
                                                                                  const WeightVector&)>& fn) {
    return fn(load_weight(v_w1, l.p1.size(), "--weight1"), load_weight(v_w2, l.p2.size(), "--weight2"));
  };

  for (const char* name : {"outer", "inner", "projective", "schur", "schatten", "independence"}) {
    auto* cmd = verify->add_subcommand(name, std::string("Verify the ") + name + " correspondence");
    add_common(cmd);
    const std::string kind = name;
    if (kind != "schatten") add_weights(cmd);
    if (kind == "schur" || kind == "schatten") cmd->add_option("--p", v_p, "Exponent");
    if (kind == "schur") {
      cmd->add_option("--variant", v_variant, "i or ii")->check(CLI::IsMember({"i", "ii"}));
    }
    if (kind == "independence") {
      cmd->add_option("--frame1b", v_frame1b, "Second frame of the input space")
          ->required()
          ->check(CLI::ExistingFile);
      cmd->add_option("--frame2b", v_frame2b, "Second frame of the output space")
          ->required()
          ->check(CLI::ExistingFile);
      cmd->add_option("--weight1b", v_w1b)->check(CLI::ExistingFile);
      cmd->add_option("--weight2b", v_w2b)->check(CLI::ExistingFile);
      cmd->add_option("--norm-p", v_norm_p, "Inner exponent of the mixed norm");
      cmd->add_option("--norm-q", v_norm_q, "Outer exponent of the mixed norm");
      cmd->add_option("--order", v_order, "Inner sum over the first or second index")
          ->check(CLI::IsMember({"first", "second"}));
    }
    cmd->callback([&, kind] {
      action = [&, kind] {
        const Loaded l = load_common(kind);
        VerificationReport r;
        if (kind == "outer") {
          r = with_weights(l, [&](const WeightVector& w1, const WeightVector& w2) {
            return verify_outer(l.op, l.p1, l.p2, w1, w2, config.seed, config.tol);
          });
        } else if (kind == "inner") {
          r = with_weights(l, [&](const WeightVector& w1, const WeightVector& w2) {
            return verify_inner(KernelRep(l.op), l.p1, l.p2, w1, w2, config.tol).second;
          });
        } else if (kind == "projective") {
          r = with_weights(l, [&](const WeightVector& w1, const WeightVector& w2) {
            return verify_projective(KernelRep(l.op), l.p1, l.p2, w1, w2, config.tol);
          });
        } else if (kind == "schur") {
          const double p = exponent_from_string(v_p);
          const SchurVariant variant = v_variant == "i" ? SchurVariant::kFirst : SchurVariant::kSecond;
          r = with_weights(l, [&](const WeightVector& w1, const WeightVector& w2) {
            return schur_characterization(l.op, l.p1, l.p2, w1, w2, p, variant, config.seed, config.tol);
          });
        } else if (kind == "schatten") {
          r = schatten_check(l.op, l.p1, l.p2, exponent_from_string(v_p), config.tol);
        } else {
          config.inputs.push_back(v_frame1b);
          config.inputs.push_back(v_frame2b);
          const FramePair b1 = load_pair(v_frame1b);
          const FramePair b2 = load_pair(v_frame2b);
          const double p = exponent_from_string(v_norm_p);
          const double q = exponent_from_string(v_norm_q);
          const SummationOrder order =
              v_order == "first" ? SummationOrder::kInnerOverFirst : SummationOrder::kInnerOverSecond;
          const auto spec_a = MixedSpaceSpec::tensor(p, q, order, load_weight(v_w1, l.p1.size(), "--weight1"),
                                                     load_weight(v_w2, l.p2.size(), "--weight2"));
          const auto spec_b = MixedSpaceSpec::tensor(p, q, order, load_weight(v_w1b, b1.size(), "--weight1b"),
                                                     load_weight(v_w2b, b2.size(), "--weight2b"));
          r = verify_frame_independence(l.op, {l.p1, l.p2}, {b1, b2}, spec_a, spec_b, config.tol);
        }
        r.seed = config.seed;
        emit_report(r);
      };
    });
  }

  // compress -----------------------------------------------------------------
  auto* compress = app.add_subcommand("compress", "Threshold the kernel coefficients of an operator");
  double tau = 0.0;
  std::string kept_path;
  input_file(compress, "operator", op_path, "Operator matrix JSON");
  input_file(compress, "frame1", f1_path, "Frame of the input space");
  input_file(compress, "frame2", f2_path, "Frame of the output space");
  compress->add_option("--tau", tau, "Threshold")->required()->check(CLI::NonNegativeNumber);
  compress->add_option("--weight1", v_w1)->check(CLI::ExistingFile);
  compress->add_option("--weight2", v_w2)->check(CLI::ExistingFile);
  compress->add_option("--coefficients", kept_path, "Also write the compressed coefficients here");
  compress->callback([&] {
    action = [&] {
      config.command = "compress";
      config.inputs = {op_path, f1_path, f2_path};
      const FramePair p1 = load_pair(f1_path);
      const FramePair p2 = load_pair(f2_path);
      const auto [k, rep] =
          compress_operator(matrix_from_json(read_json_file(op_path)), p1, p2,
                            load_weight(v_w1, p1.size(), "--weight1"), load_weight(v_w2, p2.size(), "--weight2"), tau);
      if (!kept_path.empty()) write_text_file(kept_path, galerkin_to_json(k).dump(2) + "\n");
      if (config.format == "csv") {
        std::ostringstream os;
        os << "threshold,kept,total,sparsity,error_surrogate\n"
           << format_double(rep.threshold) << ',' << rep.kept << ',' << rep.total << ','
           << format_double(rep.sparsity) << ',' << format_double(rep.error_surrogate) << '\n';
        Emitter(config, out).text(os.str());
      } else {
        Emitter(config, out).report(to_json(rep));
      }
    };
  });

  // suite --------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "Run the property suite");
  std::string suite_name;
  int suite_exit = kSuccess;
  suite->add_option("name", suite_name, "fast or full")->required();
  suite->callback([&] {
    action = [&] {
      config.command = "suite " + suite_name;
      require_json_format(config);
      if (!checks::is_known_suite(suite_name)) throw UsageError("unknown suite \"" + suite_name + "\"");
      const checks::SuiteSummary summary = checks::run_suite(suite_name, config.seed, config.tol);
      Emitter(config, out).report(checks::to_json(summary));
      if (!summary.pass) {
        err << "suite " << suite_name << " failed: " << summary.first_failure << '\n';
        suite_exit = kVerificationFailed;
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    config.seed = seed_flag ? *seed_flag : default_seed();
    if (!action) throw UsageError("no command given");
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  }
  if (config.command.rfind("verify", 0) == 0) return verify_exit;
  if (config.command.rfind("suite", 0) == 0) return suite_exit;
  return kSuccess;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, out, err);
}

}  // namespace framekernel::cli
