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

#include "qglm/experiments/runner.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qglm/bounds/bounds.hpp"
#include "qglm/bounds/gap.hpp"
#include "qglm/circuits/builders.hpp"
#include "qglm/error.hpp"
#include "qglm/mmd/mmd.hpp"
#include "qglm/sim/metrics.hpp"
#include "qglm/train/qcbm.hpp"
#include "qglm/train/qgan.hpp"

namespace qglm::experiments {
namespace {

using nlohmann::json;

constexpr std::size_t kSampleDump = 1000;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

circuits::ParamCircuit build_born_circuit(const CircuitSpec& c, int n_qubits) {
  if (c.type == "qcbm") return circuits::build_qcbm_ansatz(n_qubits, c.depth);
  if (c.type == "hardware_efficient") return circuits::build_hardware_efficient(n_qubits, c.depth);
  sim::Hamiltonian h(n_qubits);
  for (const auto& t : c.cost) h.add_term(t.coeff, t.paulis);
  return circuits::build_qaoa(n_qubits, c.depth, h);
}

circuits::QganCircuits build_qgan_circuits(const CircuitSpec& c) {
  return c.type == "style_qgan" ? circuits::build_style_qgan(c.depth)
                                : circuits::build_xxz_phl(c.depth);
}

train::PriorSampler make_prior(const PriorSpec& p) {
  if (p.type == "uniform") {
    return [p](sim::RngStream& s) {
      std::vector<double> z(static_cast<std::size_t>(p.dim));
      for (double& v : z) v = s.uniform(p.low, p.high);
      return z;
    };
  }
  return [p](sim::RngStream& s) {
    std::vector<double> z(static_cast<std::size_t>(p.dim));
    for (double& v : z) v = s.normal();
    return z;
  };
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

RunResult run_qcbm(const ExperimentConfig& cfg, std::uint64_t seed) {
  const int n_qubits = std::holds_alternative<GhzTarget>(cfg.target)
                           ? std::get<GhzTarget>(cfg.target).n_qubits
                           : std::get<DiscreteGaussianTarget>(cfg.target).n_qubits;
  const auto circuit = build_born_circuit(cfg.circuit, n_qubits);
  std::optional<sim::PureState> ghz;
  std::optional<train::QcbmTarget> target;
  if (std::holds_alternative<GhzTarget>(cfg.target)) {
    ghz = make_ghz(n_qubits);
    target = train::QcbmTarget::state(*ghz);
  } else {
    const auto& g = std::get<DiscreteGaussianTarget>(cfg.target);
    target = train::QcbmTarget::distribution(make_discrete_gaussian(g.n_qubits, g.mu, g.sigma));
  }
  train::TrainConfig tc = cfg.train;
  tc.seed = seed;

  RunResult r;
  r.seed = seed;
  r.trace = train::train_qcbm(circuit, *target, cfg.kernel, tc);
  const sim::PureState psi = circuits::bind(circuit, r.trace.final_theta);
  const sim::DiscreteDistribution p = sim::born_distribution(psi);
  const auto& q = target->dist();
  auto& m = r.metrics;
  m = r.trace.metrics;
  m["initial_loss_empirical"] = r.trace.records.front().loss_empirical;
  m["kl"] = sim::kl_divergence(p, q);
  m["mmd2_reference"] =
      mmd::mmd2_exact(p, q, mmd::KernelSpec::rbf(cfg.evaluation.reference_gammas));
  if (ghz) m["fidelity"] = sim::fidelity(psi, *ghz);

  const auto gap = bounds::empirical_gap(r.trace, circuit, *target, cfg.kernel,
                                         cfg.evaluation.holdout_n, seed);
  m["expected_loss"] = gap.expected_loss;
  m["gap"] = gap.gap;

  r.document = {{"gap", gap.to_json()}};
  if (tc.n_model_samples) {
    bounds::BoundInput in;
    in.n = static_cast<double>(*tc.n_model_samples);
    in.m = static_cast<double>(*tc.m_target_samples);
    in.delta = cfg.evaluation.delta;
    in.C1 = 2.0;
    in.C2 = 1.0;
    const auto b = bounds::bound_qcbm(in);
    m["bound"] = b.total;
    r.document["bound"] = b.to_json();
    r.document["bound_proof_variant"] = bounds::bound_qcbm_proof(in).to_json();
  }

  std::ostringstream dump;
  dump.precision(17);
  dump << "x,p_model,q_target\n";
  for (std::size_t x = 0; x < p.size(); ++x) dump << x << ',' << p[x] << ',' << q[x] << '\n';
  r.document["dump"] = dump.str();
  return r;
}

RunResult run_qgan(const ExperimentConfig& cfg, std::uint64_t seed) {
  const auto& spec = std::get<Gaussian3DTarget>(cfg.target);
  const Gaussian3D gauss(spec.mean, spec.covariance);
  const auto qc = build_qgan_circuits(cfg.circuit);
  const train::QganModel model{qc.encoder, qc.generator, cfg.output};
  const auto prior = make_prior(cfg.prior);
  const sim::RngStream root(seed);
  sim::RngStream ts = root.substream("targets");
  const auto ys = sample_gaussian3d(gauss, spec.m, ts);
  train::TrainConfig tc = cfg.train;
  tc.seed = seed;

  RunResult r;
  r.seed = seed;
  r.trace = train::train_qgan_algorithm1(model, prior, ys, cfg.kernel, tc);
  const bounds::TargetSampler sampler = [&gauss](sim::RngStream& s, std::size_t n) {
    return sample_gaussian3d(gauss, n, s);
  };
  const auto gap = bounds::empirical_gap(r.trace, model, prior, sampler, cfg.kernel,
                                         cfg.evaluation.holdout_n, seed);
  auto& m = r.metrics;
  m = r.trace.metrics;
  m["initial_loss_empirical"] = r.trace.records.front().loss_empirical;
  m["min_loss_empirical"] = r.trace.min_loss_empirical();
  m["expected_mmd"] = gap.expected_loss;
  m["gap"] = gap.gap;

  bounds::BoundInput in;
  in.n = static_cast<double>(*tc.n_model_samples);
  in.m = static_cast<double>(spec.m);
  in.delta = cfg.evaluation.delta;
  in.C2 = 1.0;
  in.C3 = bounds::rbf_lipschitz(cfg.kernel.max_gamma());
  in.d = 2;
  in.k = qc.generator.max_locality();
  in.N = qc.generator.n_qubits();
  in.N_gt = qc.generator.n_trainable();
  in.N_ge = qc.encoder.n_encoding();
  const auto b = bounds::bound_qgan(in);
  m["bound"] = b.total;
  r.document = {{"gap", gap.to_json()}, {"bound", b.to_json()}};

  sim::RngStream ds = root.substream("dump");
  std::vector<std::vector<double>> zs(kSampleDump);
  for (auto& z : zs) z = prior(ds);
  const auto xs = train::generate(model, r.trace.final_theta,
                                  sim::SampleSet::real_rows(zs, sim::Provenance::Model));
  std::ostringstream dump;
  dump.precision(17);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto row = xs.row(i);
    for (std::size_t a = 0; a < row.size(); ++a) dump << (a ? " " : "") << row[a];
    dump << '\n';
  }
  r.document["dump"] = dump.str();
  return r;
}

RunResult run_phl(const ExperimentConfig& cfg, std::uint64_t seed) {
  const auto& spec = std::get<XxzTarget>(cfg.target);
  const auto qc = build_qgan_circuits(cfg.circuit);
  const train::QganModel model{qc.encoder, qc.generator, train::GeneratorOutput::State};
  const auto prior = make_prior(cfg.prior);
  const sim::RngStream root(seed);
  sim::RngStream ts = root.substream("targets");
  std::vector<sim::PureState> states;
  for (std::size_t j = 0; j < spec.m; ++j) {
    const double a = ts.uniform(spec.a_low, spec.a_high);
    states.push_back(ground_state(make_xxz(spec.n_qubits, a, spec.eta, spec.boundary)).state);
  }
  const auto ys = sim::SampleSet::states(std::move(states), sim::Provenance::Target);
  train::TrainConfig tc = cfg.train;
  tc.seed = seed;

  RunResult r;
  r.seed = seed;
  r.trace = train::train_qgan_algorithm1(model, prior, ys, cfg.kernel, tc);
  const auto rows = run_phl_eval(qc.encoder, qc.generator, r.trace.final_theta, spec,
                                 cfg.evaluation.phl_grid);
  double min_fid = 1.0, mean_fid = 0.0, max_err = 0.0;
  int violations = 0;
  for (const auto& row : rows) {
    min_fid = std::min(min_fid, row.fidelity);
    mean_fid += row.fidelity / static_cast<double>(rows.size());
    max_err = std::max(max_err, std::abs(row.energy_estimate - row.energy_exact));
    if (row.energy_estimate < row.energy_exact - 1e-10) ++violations;
  }
  auto& m = r.metrics;
  m = r.trace.metrics;
  m["initial_loss_empirical"] = r.trace.records.front().loss_empirical;
  m["min_fidelity"] = min_fid;
  m["mean_fidelity"] = mean_fid;
  m["max_energy_error"] = max_err;
  m["variational_violations"] = violations;

  bounds::BoundInput in;
  in.n = static_cast<double>(*tc.n_model_samples);
  in.m = static_cast<double>(spec.m);
  in.delta = cfg.evaluation.delta;
  in.C2 = 1.0;
  in.C3 = 1.0;
  in.d = 2;
  in.k = qc.generator.max_locality();
  in.N = qc.generator.n_qubits();
  in.N_gt = qc.generator.n_trainable();
  in.N_ge = qc.encoder.n_encoding();
  const auto b = bounds::bound_qgan(in);
  m["bound"] = b.total;
  r.document = {{"bound", b.to_json()}};

  std::ostringstream dump;
  dump.precision(17);
  dump << "a,fidelity,energy_estimate,energy_exact\n";
  for (const auto& row : rows) {
    dump << row.a << ',' << row.fidelity << ',' << row.energy_estimate << ','
         << row.energy_exact << '\n';
  }
  r.document["dump"] = dump.str();
  return r;
}

std::string dump_suffix(Family f) {
  switch (f) {
    case Family::Qcbm:
      return "_dist.csv";
    case Family::Qgan:
      return "_samples.txt";
    case Family::Phl:
      return "_phl.csv";
  }
  return "_dump.txt";
}

}  // namespace

Quantiles quantiles(std::vector<double> v) {
  if (v.empty()) throw ArgumentError("quantiles of an empty list");
  std::sort(v.begin(), v.end());
  auto at = [&](double q) {
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  return {v.front(), at(0.25), at(0.5), at(0.75), v.back()};
}

std::vector<double> ExperimentResult::metric(const std::string& name) const {
  std::vector<double> out;
  for (const auto& r : runs) {
    const auto it = r.metrics.find(name);
    if (it == r.metrics.end()) throw ArgumentError("no metric '" + name + "'");
    out.push_back(it->second);
  }
  return out;
}

double ExperimentResult::median(const std::string& name) const {
  return quantiles(metric(name)).median;
}

std::vector<PhlRow> run_phl_eval(const circuits::ParamCircuit& encoder,
                                 const circuits::ParamCircuit& generator,
                                 const std::vector<double>& theta, const XxzTarget& target,
                                 int grid) {
  if (grid < 2) throw ArgumentError("grid must have at least two points");
  std::vector<PhlRow> rows;
  for (double a : linspace(target.a_low, target.a_high, grid)) {
    const auto h = make_xxz(target.n_qubits, a, target.eta, target.boundary);
    const auto gs = ground_state(h);
    const std::vector<double> z{a};
    const auto psi = circuits::bind_chain(encoder, generator, theta, z);
    rows.push_back({a, sim::fidelity(psi, gs.state), h.expectation(psi), gs.energy});
  }
  return rows;
}

std::vector<PhlRow> run_phl_eval(const json& doc, int grid) {
  ExperimentConfig cfg;
  try {
    cfg = parse_config(doc.at("config"));
  } catch (const json::exception& e) {
    throw ConfigError("config", e.what());
  }
  if (cfg.family() != Family::Phl) {
    throw ConfigError("config.target.type", "model was not trained on an xxz target");
  }
  std::vector<double> theta;
  try {
    theta = doc.at("trace").at("final_theta").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ConfigError("trace.final_theta", e.what());
  }
  const auto qc = build_qgan_circuits(cfg.circuit);
  if (theta.size() != static_cast<std::size_t>(qc.generator.n_trainable())) {
    throw ConfigError("trace.final_theta", "length differs from the generator slot count");
  }
  return run_phl_eval(qc.encoder, qc.generator, theta, std::get<XxzTarget>(cfg.target), grid);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::string& out_prefix) {
  ExperimentResult result;
  const json config_doc = config_to_json(config);
  for (int rep = 0; rep < config.repeats; ++rep) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(rep);
    RunResult r;
    switch (config.family()) {
      case Family::Qcbm:
        r = run_qcbm(config, seed);
        break;
      case Family::Qgan:
        r = run_qgan(config, seed);
        break;
      case Family::Phl:
        r = run_phl(config, seed);
        break;
    }
    const std::string dump = r.document.value("dump", "");
    r.document.erase("dump");
    json metrics = json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = finite_or_null(v);
    r.document["config"] = config_doc;
    r.document["seed"] = seed;
    r.document["trace"] = r.trace.summary_json();
    r.document["metrics"] = metrics;
    if (!out_prefix.empty()) {
      const std::string base = out_prefix + "seed" + std::to_string(seed);
      write_text(base + ".csv", r.trace.to_csv());
      write_text(base + ".json", r.document.dump(2) + "\n");
      write_text(base + dump_suffix(config.family()), dump);
    }
    result.runs.push_back(std::move(r));
  }

  json stats = json::object();
  for (const auto& [name, unused] : result.runs.front().metrics) {
    const auto q = quantiles(result.metric(name));
    stats[name] = {{"min", finite_or_null(q.min)},
                   {"q1", finite_or_null(q.q1)},
                   {"median", finite_or_null(q.median)},
                   {"q3", finite_or_null(q.q3)},
                   {"max", finite_or_null(q.max)}};
  }
  json seeds = json::array();
  for (const auto& r : result.runs) seeds.push_back(r.seed);
  result.summary = {{"config", config_doc},
                    {"seeds", seeds},
                    {"metrics", stats},
                    {"gap_reference", "minimum loss observed during the run"}};
  if (!out_prefix.empty()) write_text(out_prefix + "summary.json", result.summary.dump(2) + "\n");
  return result;
}

}  // namespace qglm::experiments
