// Copyright 2026 The QGLM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qglm/bounds/bounds.hpp"
#include "qglm/error.hpp"
#include "qglm/experiments/config.hpp"
#include "qglm/experiments/runner.hpp"

namespace {

using nlohmann::json;
using namespace qglm;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ConfigError(field, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(field, std::string("invalid JSON: ") + e.what());
  }
}

int cmd_run(const std::string& config_path, const std::string& preset,
            std::optional<long long> seed, std::optional<int> repeats,
            const std::string& out) {
  json doc;
  if (!config_path.empty()) {
    doc = read_json_file(config_path, "--config");
  } else {
    doc = {{"preset", preset}};
  }
  if (seed) {
    if (*seed < 0) throw ConfigError("--seed", "must be >= 0");
    doc["seed"] = *seed;
  }
  if (repeats) doc["repeats"] = *repeats;
  const auto cfg = experiments::parse_config(doc);
  const auto result = experiments::run_experiment(cfg, out);
  std::cout << "experiment " << cfg.name << ", seeds " << cfg.seed << ".."
            << cfg.seed + static_cast<std::uint64_t>(cfg.repeats) - 1 << "\n";
  for (const auto& [name, stats] : result.summary.at("metrics").items()) {
    std::cout << "  " << name << ": median " << stats.at("median").dump() << " [q1 "
              << stats.at("q1").dump() << ", q3 " << stats.at("q3").dump() << "]\n";
  }
  if (!out.empty()) std::cout << "wrote " << out << "summary.json\n";
  return kExitOk;
}

int cmd_bound(const std::string& formula, const bounds::BoundInput& in) {
  bounds::BoundReport r;
  if (formula == "qcbm") {
    r = bounds::bound_qcbm(in);
  } else if (formula == "qcbm-proof") {
    r = bounds::bound_qcbm_proof(in);
  } else if (formula == "qgan") {
    r = bounds::bound_qgan(in);
  } else if (formula == "hea") {
    r = bounds::bound_hea(in);
  } else {
    r = bounds::bound_qaoa(in);
  }
  std::cout << r.to_json().dump(2) << "\n";
  return kExitOk;
}

int cmd_eval_phl(const std::string& model_path, int grid) {
  const json doc = read_json_file(model_path, "--model");
  const auto rows = experiments::run_phl_eval(doc, grid);
  std::cout.precision(12);
  std::cout << "a,fidelity,energy_estimate,energy_exact\n";
  for (const auto& r : rows) {
    std::cout << r.a << ',' << r.fidelity << ',' << r.energy_estimate << ','
              << r.energy_exact << '\n';
  }
  return kExitOk;
}

int cmd_list(const std::string& show) {
  if (!show.empty()) {
    std::cout << experiments::preset_document(show).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& name : experiments::preset_names()) {
    std::printf("%-24s %s\n", name.c_str(), experiments::preset_description(name).c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum generative model training, MMD losses, and generalization bounds"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Train an experiment over several seeds");
  std::string config_path, preset, out;
  std::optional<long long> seed;
  std::optional<int> repeats;
  auto* cfg_opt = run->add_option("--config", config_path, "Experiment config (JSON)");
  auto* preset_opt = run->add_option("--preset", preset, "Named preset instead of a file");
  cfg_opt->excludes(preset_opt);
  run->add_option("--seed", seed, "First seed (overrides the config)");
  run->add_option("--repeats", repeats, "Number of seeds (overrides the config)");
  run->add_option("--out", out, "Output path prefix, e.g. results/ghz-");

  auto* bound = app.add_subcommand("bound", "Evaluate a generalization bound");
  std::string formula;
  bounds::BoundInput in;
  bound->add_option("--formula", formula, "Bound formula")
      ->required()
      ->check(CLI::IsMember({"qcbm", "qcbm-proof", "qgan", "hea", "qaoa"}));
  bound->add_option("--n", in.n, "Model samples")->capture_default_str();
  bound->add_option("--m", in.m, "Target samples")->capture_default_str();
  bound->add_option("--delta", in.delta, "Failure probability")->capture_default_str();
  bound->add_option("--C1", in.C1, "Loss bound")->capture_default_str();
  bound->add_option("--C2", in.C2, "Kernel bound sup k(x,x)")->capture_default_str();
  bound->add_option("--C3", in.C3, "Kernel Lipschitz constant")->capture_default_str();
  bound->add_option("--d", in.d, "Qudit dimension")->capture_default_str();
  bound->add_option("--k", in.k, "Largest gate locality")->capture_default_str();
  bound->add_option("--N", in.N, "Qudit count")->capture_default_str();
  bound->add_option("--N_gt", in.N_gt, "Trainable gates")->capture_default_str();
  bound->add_option("--N_ge", in.N_ge, "Encoding gates")->capture_default_str();
  bound->add_option("--L", in.L, "Trainable layers")->capture_default_str();
  bound->add_option("--L_E", in.L_E, "Encoding layers")->capture_default_str();

  auto* phl = app.add_subcommand("eval-phl", "Evaluate a trained XXZ ground-state generator");
  std::string model_path;
  int grid = 41;
  phl->add_option("--model", model_path, "Run document (seed<S>.json)")->required();
  phl->add_option("--grid", grid, "Number of evaluation points")->capture_default_str();

  auto* list = app.add_subcommand("list-presets", "List named experiment presets");
  std::string show;
  list->add_option("--show", show, "Print the full document of one preset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      if (config_path.empty() && preset.empty()) {
        throw ConfigError("--config", "either --config or --preset is required");
      }
      return cmd_run(config_path, preset, seed, repeats, out);
    }
    if (*bound) return cmd_bound(formula, in);
    if (*phl) return cmd_eval_phl(model_path, grid);
    if (*list) return cmd_list(show);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
