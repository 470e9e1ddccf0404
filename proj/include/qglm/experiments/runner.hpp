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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qglm/circuits/circuit.hpp"
#include "qglm/experiments/config.hpp"
#include "qglm/train/trace.hpp"

namespace qglm::experiments {

struct RunResult {
  std::uint64_t seed = 0;
  train::TrainTrace trace;
  std::map<std::string, double> metrics;
  /// Per-run document: config echo, seed, trace summary, metrics, bound
  /// and gap reports.
  nlohmann::json document;
};

struct ExperimentResult {
  std::vector<RunResult> runs;
  /// Config echo, seeds, and per-metric min/q1/median/q3/max.
  nlohmann::json summary;

  /// Values of one metric across runs, in seed order.
  std::vector<double> metric(const std::string& name) const;
  double median(const std::string& name) const;
};

struct Quantiles {
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

/// Linear-interpolation quantiles. Throws ArgumentError on empty input.
Quantiles quantiles(std::vector<double> values);

/// Runs config.repeats seeds (config.seed, config.seed + 1, ...). With a
/// nonempty `out_prefix`, writes <prefix>seed<S>.csv (trace),
/// <prefix>seed<S>.json (run document), a per-run dump
/// (<prefix>seed<S>_dist.csv, _samples.txt or _phl.csv) and
/// <prefix>summary.json; parent directories are created as needed.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::string& out_prefix = "");

struct PhlRow {
  double a = 0.0;
  double fidelity = 0.0;
  double energy_estimate = 0.0;
  double energy_exact = 0.0;
};

/// For each a in linspace(a_low, a_high, grid): encodes a, applies the
/// trained generator, and compares the output state with the exact ground
/// state of H(a).
std::vector<PhlRow> run_phl_eval(const circuits::ParamCircuit& encoder,
                                 const circuits::ParamCircuit& generator,
                                 const std::vector<double>& theta,
                                 const XxzTarget& target, int grid);

/// Same, from a run document written by run_experiment for an xxz config.
std::vector<PhlRow> run_phl_eval(const nlohmann::json& run_document, int grid);

}  // namespace qglm::experiments
