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

#include "qglm/experiments/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qglm/error.hpp"

namespace qglm::experiments {
namespace {

using nlohmann::json;

// Reads one JSON object, tracking the field path and rejecting unknown keys.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "$" : path_, "expected an object");
  }

  std::string at(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw ConfigError(at(key), "missing required field");
    return j_.at(key);
  }

  template <typename T>
  T get(const std::string& key, T fallback) {
    if (!has(key)) return fallback;
    return convert<T>(j_.at(key), at(key));
  }

  template <typename T>
  T require(const std::string& key) {
    return convert<T>(raw(key), at(key));
  }

  Reader child(const std::string& key) { return Reader(raw(key), at(key)); }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(at(it.key()), "unknown field");
    }
  }

  template <typename T>
  static T convert(const json& v, const std::string& path) {
    if constexpr (std::is_same_v<T, double>) {
      if (!v.is_number()) throw ConfigError(path, "expected a number");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.get<long long>() < 0) throw ConfigError(path, "expected a nonnegative integer");
      }
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(path, "expected a string");
    }
    try {
      return v.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(path, e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

void check(bool ok, const std::string& path, const std::string& message) {
  if (!ok) throw ConfigError(path, message);
}

std::optional<std::size_t> sample_count(Reader& r, const std::string& key) {
  if (!r.has(key)) return std::nullopt;
  const json& v = r.raw(key);
  if (v.is_string() && v.get<std::string>() == "exact") return std::nullopt;
  const auto n = Reader::convert<long long>(v, r.at(key));
  check(n >= 2, r.at(key), "must be \"exact\" or an integer >= 2");
  return static_cast<std::size_t>(n);
}

Vec3 read_vec3(const json& v, const std::string& path) {
  check(v.is_array() && v.size() == 3, path, "expected 3 numbers");
  Vec3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = Reader::convert<double>(v[i], path + "[" + std::to_string(i) + "]");
  }
  return out;
}

TargetSpec parse_target(Reader r) {
  const auto type = r.require<std::string>("type");
  TargetSpec out;
  if (type == "discrete_gaussian") {
    DiscreteGaussianTarget t;
    t.n_qubits = r.get("n_qubits", t.n_qubits);
    t.mu = r.get("mu", t.mu);
    t.sigma = r.get("sigma", t.sigma);
    check(t.n_qubits >= 1 && t.n_qubits <= 16, r.at("n_qubits"), "must lie in [1, 16]");
    check(t.sigma > 0.0, r.at("sigma"), "must be positive");
    out = t;
  } else if (type == "ghz") {
    GhzTarget t;
    t.n_qubits = r.get("n_qubits", t.n_qubits);
    check(t.n_qubits >= 2 && t.n_qubits <= 16, r.at("n_qubits"), "must lie in [2, 16]");
    out = t;
  } else if (type == "gaussian3d") {
    Gaussian3DTarget t;
    if (r.has("mean")) t.mean = read_vec3(r.raw("mean"), r.at("mean"));
    if (r.has("covariance")) {
      const json& c = r.raw("covariance");
      check(c.is_array() && c.size() == 3, r.at("covariance"), "expected a 3x3 matrix");
      for (std::size_t i = 0; i < 3; ++i) {
        t.covariance[i] = read_vec3(c[i], r.at("covariance") + "[" + std::to_string(i) + "]");
      }
    }
    try {
      Gaussian3D check_pd(t.mean, t.covariance);
    } catch (const ArgumentError& e) {
      throw ConfigError(r.at("covariance"), e.what());
    }
    t.m = r.get<std::size_t>("m", t.m);
    check(t.m >= 2, r.at("m"), "must be >= 2");
    out = t;
  } else if (type == "xxz") {
    XxzTarget t;
    t.n_qubits = r.get("n_qubits", t.n_qubits);
    check(t.n_qubits >= 2 && t.n_qubits <= 6, r.at("n_qubits"), "must lie in [2, 6]");
    t.eta = r.get("eta", t.eta);
    if (r.has("a_range")) {
      const json& a = r.raw("a_range");
      check(a.is_array() && a.size() == 2, r.at("a_range"), "expected [low, high]");
      t.a_low = Reader::convert<double>(a[0], r.at("a_range") + "[0]");
      t.a_high = Reader::convert<double>(a[1], r.at("a_range") + "[1]");
    }
    check(t.a_low < t.a_high, r.at("a_range"), "must be a nonempty interval");
    const auto b = r.get<std::string>("boundary", "open");
    check(b == "open" || b == "periodic", r.at("boundary"), "must be open or periodic");
    t.boundary = b == "open" ? Boundary::Open : Boundary::Periodic;
    t.m = r.get<std::size_t>("m", t.m);
    check(t.m >= 2, r.at("m"), "must be >= 2");
    out = t;
  } else {
    throw ConfigError(r.at("type"),
                      "unknown target type '" + type +
                          "' (discrete_gaussian, ghz, gaussian3d, xxz)");
  }
  r.finish();
  return out;
}

CircuitSpec parse_circuit(Reader r) {
  CircuitSpec c;
  c.type = r.require<std::string>("type");
  static const std::set<std::string> kTypes{"qcbm", "hardware_efficient", "qaoa",
                                            "style_qgan", "xxz_phl"};
  check(kTypes.count(c.type) > 0, r.at("type"), "unknown circuit type '" + c.type + "'");
  c.depth = r.get("depth", c.depth);
  check(c.depth >= 1, r.at("depth"), "must be >= 1");
  if (r.has("cost")) {
    const json& arr = r.raw("cost");
    check(arr.is_array(), r.at("cost"), "expected a list of terms");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Reader t(arr[i], r.at("cost") + "[" + std::to_string(i) + "]");
      c.cost.push_back({t.require<double>("coeff"), t.require<std::string>("paulis")});
      t.finish();
    }
  }
  check(c.type != "qaoa" || !c.cost.empty(), r.at("cost"), "qaoa needs a cost Hamiltonian");
  r.finish();
  return c;
}

mmd::KernelSpec parse_kernel(Reader r) {
  const auto type = r.require<std::string>("type");
  mmd::KernelSpec k = mmd::KernelSpec::linear();
  if (type == "rbf") {
    const json& g = r.raw("gammas");
    check(g.is_array() && !g.empty(), r.at("gammas"), "expected a nonempty list");
    std::vector<double> gammas;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto path = r.at("gammas") + "[" + std::to_string(i) + "]";
      const double v = Reader::convert<double>(g[i], path);
      check(v > 0.0 && std::isfinite(v), path,
            "RBF precision must be strictly positive (a negative value is not a valid kernel)");
      gammas.push_back(v);
    }
    k = mmd::KernelSpec::rbf(std::move(gammas));
  } else if (type == "linear") {
    k = mmd::KernelSpec::linear();
  } else if (type == "bhattacharyya") {
    k = mmd::KernelSpec::pure_overlap(false);
  } else if (type == "overlap") {
    k = mmd::KernelSpec::pure_overlap(true);
  } else {
    throw ConfigError(r.at("type"), "unknown kernel type '" + type +
                                        "' (rbf, linear, bhattacharyya, overlap)");
  }
  r.finish();
  return k;
}

json kernel_to_json(const mmd::KernelSpec& k) {
  if (k.is_rbf()) return {{"type", "rbf"}, {"gammas", k.gammas()}};
  if (k.is_linear()) return {{"type", "linear"}};
  return {{"type", k.phase_sensitive() ? "overlap" : "bhattacharyya"}};
}

std::string output_name(train::GeneratorOutput o) {
  switch (o) {
    case train::GeneratorOutput::ProbVector:
      return "prob_vector";
    case train::GeneratorOutput::ZExpectation:
      return "z_expectation";
    case train::GeneratorOutput::State:
      return "state";
  }
  return "?";
}

Family family_of(const TargetSpec& t) {
  if (std::holds_alternative<Gaussian3DTarget>(t)) return Family::Qgan;
  if (std::holds_alternative<XxzTarget>(t)) return Family::Phl;
  return Family::Qcbm;
}

int target_qubits(const TargetSpec& t) {
  if (const auto* g = std::get_if<DiscreteGaussianTarget>(&t)) return g->n_qubits;
  if (const auto* g = std::get_if<GhzTarget>(&t)) return g->n_qubits;
  if (const auto* g = std::get_if<XxzTarget>(&t)) return g->n_qubits;
  return 3;
}

ExperimentConfig parse_expanded(const json& doc) {
  Reader r(doc, "");
  ExperimentConfig c;
  c.name = r.get<std::string>("name", "custom");
  c.target = parse_target(r.child("target"));
  const Family fam = family_of(c.target);
  c.circuit = parse_circuit(r.child("circuit"));
  c.kernel = parse_kernel(r.child("kernel"));

  switch (fam) {
    case Family::Qcbm:
      check(c.circuit.type == "qcbm" || c.circuit.type == "hardware_efficient" ||
                c.circuit.type == "qaoa",
            "circuit.type", "Born-machine targets need qcbm, hardware_efficient or qaoa");
      for (std::size_t i = 0; i < c.circuit.cost.size(); ++i) {
        check(static_cast<int>(c.circuit.cost[i].paulis.size()) == target_qubits(c.target),
              "circuit.cost[" + std::to_string(i) + "].paulis",
              "length must equal the qubit count");
      }
      break;
    case Family::Qgan:
      check(c.circuit.type == "style_qgan", "circuit.type",
            "gaussian3d targets need the style_qgan circuit");
      check(c.kernel.is_rbf(), "kernel.type", "QGAN vector outputs need an rbf kernel");
      break;
    case Family::Phl:
      check(c.circuit.type == "xxz_phl", "circuit.type", "xxz targets need the xxz_phl circuit");
      check(target_qubits(c.target) == 2, "target.n_qubits",
            "the xxz_phl circuit acts on 2 qubits");
      check(c.kernel.is_pure_overlap(), "kernel.type",
            "state outputs need the bhattacharyya or overlap kernel");
      break;
  }

  const auto out = r.get<std::string>("output", fam == Family::Phl ? "state" : "z_expectation");
  if (out == "z_expectation") {
    c.output = train::GeneratorOutput::ZExpectation;
  } else if (out == "prob_vector") {
    c.output = train::GeneratorOutput::ProbVector;
  } else if (out == "state") {
    c.output = train::GeneratorOutput::State;
  } else {
    throw ConfigError("output", "unknown output '" + out + "'");
  }
  if (fam == Family::Qgan) {
    check(c.output != train::GeneratorOutput::State, "output",
          "gaussian3d targets need z_expectation or prob_vector");
    check(c.output != train::GeneratorOutput::ProbVector, "output",
          "prob_vector outputs have 8 entries but gaussian3d samples have 3");
  }
  if (fam == Family::Phl) {
    check(c.output == train::GeneratorOutput::State, "output", "xxz targets need state outputs");
  }

  if (r.has("prior")) {
    Reader p = r.child("prior");
    c.prior.type = p.get<std::string>("type", c.prior.type);
    check(c.prior.type == "normal" || c.prior.type == "uniform", p.at("type"),
          "must be normal or uniform");
    c.prior.dim = p.get("dim", c.prior.dim);
    c.prior.low = p.get("low", c.prior.low);
    c.prior.high = p.get("high", c.prior.high);
    check(c.prior.dim >= 1, p.at("dim"), "must be >= 1");
    check(c.prior.type != "uniform" || c.prior.low < c.prior.high, p.at("low"),
          "must be below prior.high");
    p.finish();
  }
  if (fam == Family::Qgan) {
    check(c.prior.dim >= 3, "prior.dim", "the style_qgan encoder reads 3 features");
  }
  if (fam == Family::Phl) {
    check(c.prior.dim >= 1, "prior.dim", "the xxz_phl encoder reads 1 feature");
  }

  if (r.has("train")) {
    Reader t = r.child("train");
    auto& tc = c.train;
    tc.max_iters = t.get("max_iters", tc.max_iters);
    check(tc.max_iters >= 1, t.at("max_iters"), "must be >= 1");
    tc.learning_rate = t.get("learning_rate", tc.learning_rate);
    check(tc.learning_rate > 0.0, t.at("learning_rate"), "must be positive");
    if (t.has("optimizer")) {
      try {
        tc.optimizer = train::optimizer_from_string(t.require<std::string>("optimizer"));
      } catch (const ArgumentError& e) {
        throw ConfigError(t.at("optimizer"), e.what());
      }
    }
    tc.n_model_samples = sample_count(t, "n_model_samples");
    tc.m_target_samples = sample_count(t, "m_target_samples");
    tc.batch_size = t.get<std::size_t>("batch_size", tc.batch_size);
    tc.noise_refresh = t.get("noise_refresh", tc.noise_refresh);
    check(tc.noise_refresh >= 1, t.at("noise_refresh"), "must be >= 1");
    tc.convergence_tol = t.get("convergence_tol", tc.convergence_tol);
    check(tc.convergence_tol >= 0.0, t.at("convergence_tol"), "must be >= 0");
    t.finish();
  }
  auto& tc = c.train;
  if (fam == Family::Qcbm) {
    check(tc.n_model_samples.has_value() == tc.m_target_samples.has_value(),
          "train.m_target_samples", "n and m must both be exact or both be counts");
    check(!tc.n_model_samples || c.kernel.is_rbf(), "kernel.type",
          "sampled training needs an rbf kernel; quantum kernels need exact access");
  } else {
    const std::size_t m = fam == Family::Qgan ? std::get<Gaussian3DTarget>(c.target).m
                                              : std::get<XxzTarget>(c.target).m;
    check(tc.n_model_samples.has_value(), "train.n_model_samples",
          "QGAN training needs a model sample count");
    check(!tc.m_target_samples || *tc.m_target_samples == m, "train.m_target_samples",
          "must equal target.m");
    tc.m_target_samples = m;
    check(tc.batch_size <= m, "train.batch_size", "must not exceed target.m");
    check(tc.batch_size != 1, "train.batch_size", "minibatches need at least two targets");
  }

  if (r.has("evaluation")) {
    Reader e = r.child("evaluation");
    auto& ev = c.evaluation;
    ev.holdout_n = e.get<std::size_t>("holdout_n", ev.holdout_n);
    check(ev.holdout_n >= 2, e.at("holdout_n"), "must be >= 2");
    ev.delta = e.get("delta", ev.delta);
    check(ev.delta > 0.0 && ev.delta < 1.0, e.at("delta"), "must lie in (0, 1)");
    ev.phl_grid = e.get("phl_grid", ev.phl_grid);
    check(ev.phl_grid >= 2, e.at("phl_grid"), "must be >= 2");
    if (e.has("reference_gammas")) {
      const json& g = e.raw("reference_gammas");
      check(g.is_array() && !g.empty(), e.at("reference_gammas"), "expected a nonempty list");
      ev.reference_gammas.clear();
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto path = e.at("reference_gammas") + "[" + std::to_string(i) + "]";
        const double v = Reader::convert<double>(g[i], path);
        check(v > 0.0, path, "must be positive");
        ev.reference_gammas.push_back(v);
      }
    }
    e.finish();
  }

  c.seed = r.get<std::uint64_t>("seed", c.seed);
  c.repeats = r.get("repeats", c.repeats);
  check(c.repeats >= 1, "repeats", "must be >= 1");
  r.finish();
  return c;
}

// ---------------------------------------------------------------------------
// Presets.

json qcbm_train(int iters, double lr, std::optional<std::size_t> samples) {
  json t = {{"max_iters", iters}, {"learning_rate", lr}, {"optimizer", "adam"}};
  t["n_model_samples"] = samples ? json(*samples) : json("exact");
  t["m_target_samples"] = samples ? json(*samples) : json("exact");
  return t;
}

json gauss_preset(int n, double mu, const json& kernel, std::optional<std::size_t> samples) {
  return {{"target", {{"type", "discrete_gaussian"}, {"n_qubits", n}, {"mu", mu}, {"sigma", 8.0}}},
          {"circuit", {{"type", "qcbm"}, {"depth", n}}},
          {"kernel", kernel},
          {"train", qcbm_train(50, 0.2, samples)},
          {"repeats", 5}};
}

json ghz_preset(int n, const json& kernel, std::optional<std::size_t> samples) {
  return {{"target", {{"type", "ghz"}, {"n_qubits", n}}},
          {"circuit", {{"type", "qcbm"}, {"depth", n}}},
          {"kernel", kernel},
          {"train", qcbm_train(50, 0.2, samples)},
          {"repeats", 5}};
}

json gauss3d_preset(std::size_t m, int iters, std::size_t n) {
  return {{"target", {{"type", "gaussian3d"}, {"m", m}}},
          {"circuit", {{"type", "style_qgan"}, {"depth", 3}}},
          {"kernel", {{"type", "rbf"}, {"gammas", {0.001, 1.0, 10.0}}}},
          {"output", "z_expectation"},
          {"prior", {{"type", "normal"}, {"dim", 3}}},
          {"train",
           {{"max_iters", iters},
            {"learning_rate", 0.05},
            {"optimizer", "adam"},
            {"n_model_samples", n},
            {"batch_size", std::min<std::size_t>(64, m)},
            {"noise_refresh", 1}}},
          {"evaluation", {{"holdout_n", 10000}}},
          {"repeats", 5}};
}

json xxz_preset() {
  return {{"target",
           {{"type", "xxz"},
            {"n_qubits", 2},
            {"eta", 0.25},
            {"a_range", {-0.2, 0.2}},
            {"boundary", "open"},
            {"m", 9}}},
          {"circuit", {{"type", "xxz_phl"}, {"depth", 4}}},
          {"kernel", {{"type", "bhattacharyya"}}},
          {"output", "state"},
          {"prior", {{"type", "uniform"}, {"dim", 1}, {"low", -0.2}, {"high", 0.2}}},
          {"train",
           {{"max_iters", 80},
            {"learning_rate", 0.3},
            {"optimizer", "adagrad"},
            {"n_model_samples", 9},
            {"batch_size", 9},
            {"noise_refresh", 1}}},
          {"evaluation", {{"phl_grid", 41}}},
          {"repeats", 5}};
}

struct Preset {
  std::string description;
  json doc;
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = [] {
    const json bha = {{"type", "bhattacharyya"}};
    const json overlap = {{"type", "overlap"}};
    const json lin = {{"type", "linear"}};
    const json rbf = {{"type", "rbf"}, {"gammas", {0.25, 4.0}}};
    std::map<std::string, Preset> t;
    for (int n : {8, 12}) {
      const auto N = std::to_string(n);
      t["gauss-quantum-N" + N] = {
          "Born machine, discrete Gaussian (mu=1, sigma=8), pure-state kernel, exact access",
          gauss_preset(n, 1.0, bha, std::nullopt)};
      t["gauss-linear-N" + N] = {
          "Born machine, discrete Gaussian, linear (diagonal-state) kernel, exact access",
          gauss_preset(n, 1.0, lin, std::nullopt)};
      t["gauss-rbf-N" + N + "-exact"] = {
          "Born machine, discrete Gaussian, RBF kernel, exact distributions",
          gauss_preset(n, 1.0, rbf, std::nullopt)};
      for (std::size_t s : {100, 1000}) {
        t["gauss-rbf-N" + N + "-n" + std::to_string(s)] = {
            "Born machine, discrete Gaussian, RBF kernel, n=m=" + std::to_string(s) + " samples",
            gauss_preset(n, 1.0, rbf, s)};
      }
    }
    t["gauss-mid-quantum-N8"] = {
        "Born machine, discrete Gaussian centred at 2^(N-1), pure-state kernel",
        gauss_preset(8, 128.0, bha, std::nullopt)};
    for (int n : {4, 6, 8, 10}) {
      const auto N = std::to_string(n);
      t["ghz-quantum-N" + N] = {"Born machine, GHZ state, state-overlap kernel, exact access",
                                ghz_preset(n, overlap, std::nullopt)};
      t["ghz-rbf-N" + N + "-n1000"] = {"Born machine, GHZ distribution, RBF kernel, n=m=1000",
                                       ghz_preset(n, rbf, 1000)};
    }
    for (std::size_t m : {2, 10, 200}) {
      t["gauss3d-m" + std::to_string(m)] = {
          "QGAN, 3-D Gaussian, n=m=" + std::to_string(m) + ", T=120",
          gauss3d_preset(m, 120, m)};
    }
    t["gauss3d-m5000"] = {"QGAN, 3-D Gaussian, n=m=5000, b=64, T=800 (long run)",
                          gauss3d_preset(5000, 800, 5000)};
    t["xxz-phl"] = {"QGAN ground-state learning for the 2-site XXZ chain", xxz_preset()};
    for (auto& [name, p] : t) p.doc["name"] = name;
    return t;
  }();
  return table;
}

}  // namespace

Family ExperimentConfig::family() const { return family_of(target); }

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, p] : presets()) out.push_back(name);
  return out;
}

json preset_document(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("preset", "unknown preset '" + name + "'");
  return it->second.doc;
}

std::string preset_description(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("preset", "unknown preset '" + name + "'");
  return it->second.description;
}

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("$", "expected an object");
  if (!doc.contains("preset")) return parse_expanded(doc);
  const json& name = doc.at("preset");
  if (!name.is_string()) throw ConfigError("preset", "expected a string");
  json base = preset_document(name.get<std::string>());
  json patch = doc;
  patch.erase("preset");
  base.merge_patch(patch);
  return parse_expanded(base);
}

json config_to_json(const ExperimentConfig& c) {
  json target;
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DiscreteGaussianTarget>) {
          target = {{"type", "discrete_gaussian"},
                    {"n_qubits", t.n_qubits},
                    {"mu", t.mu},
                    {"sigma", t.sigma}};
        } else if constexpr (std::is_same_v<T, GhzTarget>) {
          target = {{"type", "ghz"}, {"n_qubits", t.n_qubits}};
        } else if constexpr (std::is_same_v<T, Gaussian3DTarget>) {
          target = {{"type", "gaussian3d"},
                    {"mean", t.mean},
                    {"covariance", t.covariance},
                    {"m", t.m}};
        } else {
          target = {{"type", "xxz"},
                    {"n_qubits", t.n_qubits},
                    {"eta", t.eta},
                    {"a_range", {t.a_low, t.a_high}},
                    {"boundary", t.boundary == Boundary::Open ? "open" : "periodic"},
                    {"m", t.m}};
        }
      },
      c.target);
  json circuit = {{"type", c.circuit.type}, {"depth", c.circuit.depth}};
  if (!c.circuit.cost.empty()) {
    json cost = json::array();
    for (const auto& t : c.circuit.cost) cost.push_back({{"coeff", t.coeff}, {"paulis", t.paulis}});
    circuit["cost"] = cost;
  }
  json tr = train::to_json(c.train);
  tr.erase("seed");
  return {{"name", c.name},
          {"target", target},
          {"circuit", circuit},
          {"kernel", kernel_to_json(c.kernel)},
          {"output", output_name(c.output)},
          {"prior",
           {{"type", c.prior.type},
            {"dim", c.prior.dim},
            {"low", c.prior.low},
            {"high", c.prior.high}}},
          {"train", tr},
          {"evaluation",
           {{"holdout_n", c.evaluation.holdout_n},
            {"delta", c.evaluation.delta},
            {"phl_grid", c.evaluation.phl_grid},
            {"reference_gammas", c.evaluation.reference_gammas}}},
          {"seed", c.seed},
          {"repeats", c.repeats}};
}

}  // namespace qglm::experiments
