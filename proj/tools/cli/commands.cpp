// Copyright 2026 The mhqmo Authors
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

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "mhqmo/compat.hpp"
#include "mhqmo/eigen.hpp"
#include "mhqmo/error.hpp"
#include "mhqmo/fuzzing.hpp"
#include "mhqmo/json_io.hpp"
#include "mhqmo/observable.hpp"
#include "mhqmo/qmo.hpp"
#include "mhqmo/scenarios.hpp"
#include "mhqmo/state.hpp"

namespace mhqmo::cli {

namespace {

using json = nlohmann::ordered_json;

/// Bad flags, unreadable files, malformed JSON: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Writes to --out via a temporary file renamed on success, else to `out`.
void emit(const RunConfig& config, const std::string& content, std::ostream& out) {
  if (!config.out_path) {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(*config.out_path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write '" + tmp.string() + "'");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      fs::remove(tmp);
      throw UsageError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot rename output into '" + target.string() + "': " + ec.message());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Source of families for a run: one of the built-in scenarios or a user
// observable file.
class Pipeline {
 public:
  static Pipeline from_config(const RunConfig& config) {
    if (config.scenario.has_value() == config.observables_path.has_value()) {
      throw UsageError("exactly one of --scenario or --observables is required");
    }
    Pipeline p;
    if (config.scenario) {
      ScenarioKind kind;
      try {
        kind = parse_scenario(*config.scenario);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      p.id_ = std::string(scenario_name(kind));
      p.build_ = build_scenario(kind);
      p.sharp_ = p.build_->family;
      return p;
    }
    ObservableSet set;
    try {
      set = observable_set_from_json(read_json_file(*config.observables_path));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    std::vector<Observable> obs;
    for (const auto& m : set.matrices) obs.push_back(spectral(m));
    Grouping grouping = set.grouping ? *set.grouping : singleton_grouping(obs.size());
    p.id_ = "custom";
    p.sharp_ = qmo_jordan(std::move(obs), std::move(grouping));
    return p;
  }

  const std::string& id() const { return id_; }
  const QmoFamily& sharp() const { return sharp_; }
  bool embedded_qutrit() const {
    return build_ && build_->scenario.embedding == Embedding::CgBlock;
  }

  QmoFamily at(double eta) const {
    if (build_) return scenario_family(*build_, eta);
    return fuzzify(sharp_, FuzzParameter(eta));
  }

  FamilyBuilder builder() const {
    return [this](double eta) { return at(eta); };
  }

 private:
  std::string id_;
  std::optional<ScenarioBuild> build_;
  QmoFamily sharp_;
};

std::string outcome_tag(const Outcome& o) {
  std::ostringstream s;
  s << "g(";
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (k) s << ';';
    s << round_significant(o[k]);
  }
  s << ')';
  return s.str();
}

std::vector<double> ascending_eigenvalues(const CMatrix& m) {
  auto v = eigvals_hermitian(m);
  std::reverse(v.begin(), v.end());
  return v;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "build") return cmd_build(config, out);
  if (config.command == "threshold") return cmd_threshold(config, out);
  if (config.command == "scan") return cmd_scan(config, out);
  if (config.command == "quasiprob") return cmd_quasiprob(config, out);
  if (config.command == "verify") return cmd_verify(config, out, err);
  throw UsageError("unknown command '" + config.command + "'");
}

}  // namespace

int cmd_build(const RunConfig& config, std::ostream& out) {
  if (config.format != "json") throw UsageError("build only supports --format json");
  const Pipeline p = Pipeline::from_config(config);
  const QmoFamily fam = p.at(config.eta);
  if (config.marginal) {
    if (*config.marginal >= fam.observables.size()) {
      throw UsageError("--marginal index out of range");
    }
    emit(config, dump(to_json(extract_marginal_povm(fam, *config.marginal, config.slack))), out);
    return kExitOk;
  }
  emit(config, dump(to_json(fam)), out);
  return kExitOk;
}

int cmd_threshold(const RunConfig& config, std::ostream& out) {
  if (config.format != "json") throw UsageError("threshold only supports --format json");
  const Pipeline p = Pipeline::from_config(config);
  ThresholdOptions opts;
  opts.slack = config.slack;
  const auto t = threshold(p.builder(), opts);
  json j;
  j["threshold"] = t ? json(round_significant(*t)) : json(nullptr);
  emit(config, dump(j), out);
  return kExitOk;
}

int cmd_scan(const RunConfig& config, std::ostream& out) {
  if (!(config.eta_min >= 0.0 && config.eta_max <= 1.0 && config.eta_min < config.eta_max)) {
    throw UsageError("scan range must satisfy 0 <= --min < --max <= 1");
  }
  if (config.steps < 2) throw UsageError("--steps must be at least 2");
  const Pipeline p = Pipeline::from_config(config);
  const auto grid = uniform_grid(config.eta_min, config.eta_max, config.steps);

  ThresholdOptions opts;
  opts.slack = config.slack;
  CompatReport report{p.id(), min_eig_curve(p.builder(), grid), std::nullopt};
  std::optional<std::string> threshold_error;
  try {
    report.threshold = threshold(p.builder(), opts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SignChangeViolation && e.kind() != ErrorKind::NotPositiveAtZero)
      throw;
    threshold_error = e.what();
  }

  if (config.format == "csv") {
    if (!config.per_element) {
      emit(config, to_csv(report), out);
      return kExitOk;
    }
    std::string text = "eta,min_eig";
    char buf[64];
    bool header_done = false;
    std::string rows;
    for (const auto& point : report.grid) {
      const QmoFamily fam = p.at(point.eta);
      std::snprintf(buf, sizeof buf, "%.9e,%.9e", point.eta,
                    point.min_eig == 0.0 ? 0.0 : point.min_eig);
      rows += buf;
      for (const auto& e : fam.elements) {
        const auto ev = ascending_eigenvalues(e.matrix);
        for (std::size_t k = 0; k < ev.size(); ++k) {
          if (!header_done) text += "," + outcome_tag(e.outcome) + "[" + std::to_string(k) + "]";
          std::snprintf(buf, sizeof buf, ",%.9e", ev[k] == 0.0 ? 0.0 : ev[k]);
          rows += buf;
        }
      }
      header_done = true;
      rows += "\n";
    }
    emit(config, text + "\n" + rows, out);
    return kExitOk;
  }

  json j = to_json(report);
  if (threshold_error) j["threshold_error"] = *threshold_error;
  if (config.per_element) {
    for (std::size_t k = 0; k < report.grid.size(); ++k) {
      const QmoFamily fam = p.at(report.grid[k].eta);
      json elems = json::array();
      for (const auto& e : fam.elements) {
        json ev = json::array();
        for (double v : ascending_eigenvalues(e.matrix)) ev.push_back(round_significant(v));
        json outcome = json::array();
        for (double v : e.outcome) outcome.push_back(round_significant(v));
        elems.push_back({{"outcome", std::move(outcome)}, {"eigenvalues", std::move(ev)}});
      }
      j["grid"][k]["elements"] = std::move(elems);
    }
  }
  emit(config, dump(j), out);
  return kExitOk;
}

int cmd_quasiprob(const RunConfig& config, std::ostream& out) {
  if (!config.state_path) throw UsageError("quasiprob requires --state");
  if (config.format != "json") throw UsageError("quasiprob only supports --format json");
  CMatrix state_matrix;
  try {
    state_matrix = cmatrix_from_json(read_json_file(*config.state_path));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const DensityMatrix rho(std::move(state_matrix));
  const Pipeline p = Pipeline::from_config(config);

  // The qutrit accepts a spin-1 state (3-dim) or a state on the two-qubit
  // embedding space (4-dim).
  QmoFamily fam = p.at(config.eta);
  if (p.embedded_qutrit() && rho.dim() == 4) fam = fuzzify(p.sharp(), FuzzParameter(config.eta));
  emit(config, dump(to_json(quasiprob(fam, rho))), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto results = run_verification(config.slack);
  std::string text;
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    text += (r.passed ? "PASS " : "FAIL ") + r.name;
    if (!r.detail.empty()) text += "  (" + r.detail + ")";
    text += "\n";
    if (!r.passed && !first_failure) first_failure = &r;
  }
  text += std::to_string(results.size()) + " checks, " +
          (first_failure ? "FAILED" : "all passed") + "\n";
  emit(config, text, out);
  if (first_failure) {
    err << "verification failed: " << first_failure->name << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;

  if (const char* tol = std::getenv("MHQMO_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end == tol || *end != '\0' || !(v >= 0.0)) {
      err << "error: MHQMO_TOL must be a non-negative number\n";
      return kExitUsage;
    }
    config.slack = v;
  }

  CLI::App app{"Margenau-Hill quasi-measurement operators and joint measurability thresholds",
               "mhqmo"};
  app.require_subcommand(1);

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--scenario", config.scenario, "qubit | qutrit | two-qubit");
    sub->add_option("--observables", config.observables_path,
                    "JSON file with \"observables\" and optional \"grouping\"");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", config.out_path, "output file (default: stdout)");
  };

  auto* build = app.add_subcommand("build", "build a QMO family at one eta");
  add_source(build);
  build->add_option("--eta", config.eta, "unsharpness in [0, 1]")->check(CLI::Range(0.0, 1.0));
  build->add_option("--marginal", config.marginal,
                    "emit the marginal POVM of this observable index instead");
  add_output(build);

  auto* thr = app.add_subcommand("threshold", "bisect the largest certified eta");
  add_source(thr);
  add_output(thr);

  auto* scan = app.add_subcommand("scan", "minimum eigenvalue over an eta grid");
  add_source(scan);
  scan->add_option("--min", config.eta_min, "lower eta")->check(CLI::Range(0.0, 1.0));
  scan->add_option("--max", config.eta_max, "upper eta")->check(CLI::Range(0.0, 1.0));
  scan->add_option("--steps", config.steps, "number of grid points (>= 2)");
  scan->add_flag("--per-element", config.per_element, "add every element's eigenvalues");
  add_output(scan);

  auto* qp = app.add_subcommand("quasiprob", "quasi-probability table for a state");
  add_source(qp);
  qp->add_option("--state", config.state_path, "density matrix JSON file")->required();
  qp->add_option("--eta", config.eta, "unsharpness in [0, 1]")->check(CLI::Range(0.0, 1.0));
  add_output(qp);

  auto* verify = app.add_subcommand("verify", "run the built-in invariant suite");
  verify->add_option("--out", config.out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("mhqmo");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mhqmo::cli
