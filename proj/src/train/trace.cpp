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

#include "qglm/train/trace.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "qglm/error.hpp"
#include "qglm/sim/rng.hpp"

namespace qglm::train {

void TrainConfig::validate() const {
  if (max_iters < 1) throw ArgumentError("max_iters must be >= 1");
  if (!(learning_rate > 0.0)) throw ArgumentError("learning_rate must be positive");
  if (noise_refresh < 1) throw ArgumentError("noise_refresh must be >= 1");
  if (!(convergence_tol >= 0.0)) throw ArgumentError("convergence_tol must be >= 0");
  if (n_model_samples && *n_model_samples == 0) {
    throw ArgumentError("n_model_samples must be >= 1");
  }
  if (m_target_samples && *m_target_samples == 0) {
    throw ArgumentError("m_target_samples must be >= 1");
  }
  if (m_target_samples && batch_size > *m_target_samples) {
    throw ArgumentError("batch_size exceeds m_target_samples");
  }
}

nlohmann::json to_json(const TrainConfig& c) {
  nlohmann::json j = {{"max_iters", c.max_iters},
                      {"learning_rate", c.learning_rate},
                      {"optimizer", std::string(to_string(c.optimizer))},
                      {"batch_size", c.batch_size},
                      {"noise_refresh", c.noise_refresh},
                      {"seed", c.seed},
                      {"convergence_tol", c.convergence_tol}};
  j["n_model_samples"] = c.n_model_samples ? nlohmann::json(*c.n_model_samples)
                                           : nlohmann::json("exact");
  j["m_target_samples"] = c.m_target_samples ? nlohmann::json(*c.m_target_samples)
                                             : nlohmann::json("exact");
  return j;
}

namespace {

void put(std::ostringstream& os, double v) {
  if (std::isnan(v)) {
    os << "nan";
  } else {
    os << v;
  }
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

std::string TrainTrace::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "iter,loss_empirical,loss_exact,grad_norm,elapsed_ms\n";
  for (const auto& r : records) {
    os << r.iter << ',';
    put(os, r.loss_empirical);
    os << ',';
    put(os, r.loss_exact);
    os << ',';
    put(os, r.grad_norm);
    os << ',';
    put(os, r.elapsed_ms);
    os << '\n';
  }
  return os.str();
}

void TrainTrace::write_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_csv();
}

nlohmann::json TrainTrace::summary_json() const {
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [k, v] : metrics) m[k] = number_or_null(v);
  return {{"iterations", records.size()},
          {"converged", converged},
          {"initial_theta", initial_theta},
          {"final_theta", final_theta},
          {"metrics", m}};
}

double TrainTrace::min_loss_empirical() const {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : records) {
    if (std::isnan(best) || r.loss_empirical < best) best = r.loss_empirical;
  }
  return best;
}

double TrainTrace::min_loss_exact() const {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : records) {
    if (std::isfinite(r.loss_exact) && (std::isnan(best) || r.loss_exact < best)) {
      best = r.loss_exact;
    }
  }
  return best;
}

bool same_except_timing(const TrainTrace& a, const TrainTrace& b) {
  auto same = [](double x, double y) {
    return (std::isnan(x) && std::isnan(y)) || x == y;
  };
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& r = a.records[i];
    const auto& s = b.records[i];
    if (r.iter != s.iter || !same(r.loss_empirical, s.loss_empirical) ||
        !same(r.loss_exact, s.loss_exact) || !same(r.grad_norm, s.grad_norm)) {
      return false;
    }
  }
  if (a.metrics.size() != b.metrics.size()) return false;
  for (const auto& [k, v] : a.metrics) {
    auto it = b.metrics.find(k);
    if (it == b.metrics.end() || !same(v, it->second)) return false;
  }
  return a.initial_theta == b.initial_theta && a.final_theta == b.final_theta &&
         a.converged == b.converged;
}

std::vector<double> initial_theta(std::size_t n, std::uint64_t seed) {
  sim::RngStream s = sim::RngStream(seed).substream("init");
  std::vector<double> theta(n);
  for (double& t : theta) t = s.uniform(0.0, 2.0 * std::numbers::pi);
  return theta;
}

}  // namespace qglm::train
