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

#include "qglm/train/qcbm.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <algorithm>

#include "qglm/error.hpp"
#include "qglm/mmd/mmd.hpp"
#include "qglm/sim/accumulate.hpp"

namespace qglm::train {
namespace {

using circuits::ParamCircuit;
using sim::NeumaierSum;

void check_inputs(const ParamCircuit& circuit, const std::vector<double>& theta,
                  const QcbmTarget& target, const mmd::KernelSpec& spec,
                  const Sampling& sampling, const sim::RngStream* stream) {
  if (circuit.n_qubits() != target.n_qubits()) {
    throw ArgumentError("circuit and target qubit counts differ");
  }
  if (theta.size() != static_cast<std::size_t>(circuit.n_trainable())) {
    throw ArgumentError("theta length differs from the trainable slot count");
  }
  if (circuit.n_features() != 0) {
    throw ArgumentError("Born machine circuits take no input features");
  }
  if (sampling.is_exact()) return;
  if (!sampling.n || !sampling.m) {
    throw CapabilityError("sampled mode needs both n and m");
  }
  if (!spec.is_classical()) {
    throw CapabilityError("quantum kernels need exact model and target access");
  }
  if (*sampling.n < 2 || *sampling.m < 2) {
    throw ArgumentError("sampled mode needs n, m >= 2");
  }
  if (stream == nullptr) throw ArgumentError("sampled mode needs a random stream");
}

struct BaseSamples {
  std::vector<std::size_t> model;
  std::vector<std::size_t> target;
};

BaseSamples draw_base(const sim::DiscreteDistribution& p, const QcbmTarget& target,
                      const Sampling& sampling, const sim::RngStream& stream) {
  sim::RngStream ms = stream.substream("model");
  sim::RngStream ts = stream.substream("target");
  return {sim::sample_counts(p, *sampling.n, ms),
          sim::sample_counts(target.dist(), *sampling.m, ts)};
}

double dot(std::span<const double> a, std::span<const double> b) {
  NeumaierSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s.value();
}

// Mean of delta_{x,y} over pairs drawn from two histograms.
double mean_delta(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  double na = 0.0, nb = 0.0, ab = 0.0;
  for (std::size_t e = 0; e < a.size(); ++e) {
    na += static_cast<double>(a[e]);
    nb += static_cast<double>(b[e]);
    ab += static_cast<double>(a[e]) * static_cast<double>(b[e]);
  }
  return ab / (na * nb);
}

}  // namespace

QcbmTarget QcbmTarget::distribution(sim::DiscreteDistribution dist) {
  sim::PureState s = sim::sqrt_amplitude_state(dist);
  return QcbmTarget(std::move(dist), std::move(s));
}

QcbmTarget QcbmTarget::state(sim::PureState state) {
  sim::DiscreteDistribution d = sim::born_distribution(state);
  return QcbmTarget(std::move(d), std::move(state));
}

double qcbm_exact_loss(const sim::PureState& model, const QcbmTarget& target,
                       const mmd::KernelSpec& spec) {
  if (spec.is_pure_overlap()) {
    return spec.phase_sensitive() ? mmd::quantum_mmd_overlap(model, target.amplitudes())
                                  : mmd::quantum_mmd_pure(model, target.amplitudes());
  }
  return mmd::mmd2_exact(sim::born_distribution(model), target.dist(), spec);
}

double qcbm_loss(const ParamCircuit& circuit, const std::vector<double>& theta,
                 const QcbmTarget& target, const mmd::KernelSpec& spec,
                 const Sampling& sampling, const sim::RngStream* stream) {
  check_inputs(circuit, theta, target, spec, sampling, stream);
  const sim::PureState psi = circuits::bind(circuit, theta);
  if (sampling.is_exact()) return qcbm_exact_loss(psi, target, spec);
  const BaseSamples base =
      draw_base(sim::born_distribution(psi), target, sampling, *stream);
  return mmd::mmd2_u_counts(base.model, base.target, spec.one_hot_offset());
}

std::vector<double> qcbm_gradient(const ParamCircuit& circuit,
                                  const std::vector<double>& theta,
                                  const QcbmTarget& target,
                                  const mmd::KernelSpec& spec,
                                  const Sampling& sampling,
                                  const sim::RngStream* stream) {
  check_inputs(circuit, theta, target, spec, sampling, stream);
  const sim::PureState psi = circuits::bind(circuit, theta);
  const sim::DiscreteDistribution p = sim::born_distribution(psi);
  const auto q = target.dist().probs();
  const double scale = 1.0 - spec.one_hot_offset();
  const std::size_t dim = p.size();

  std::optional<BaseSamples> base;
  if (!sampling.is_exact()) base = draw_base(p, target, sampling, *stream);

  // Per-event weights w(x) such that dL = sum_x w(x) dP(x) (distribution
  // losses), or the overlap and its magnitude (phase-sensitive loss).
  std::vector<double> w(dim, 0.0);
  std::complex<double> overlap;
  if (spec.is_pure_overlap() && spec.phase_sensitive()) {
    overlap = sim::inner_product(target.amplitudes(), psi);
  } else if (spec.is_pure_overlap()) {
    for (std::size_t x = 0; x < dim; ++x) {
      // d(2 - 2 sum sqrt(PQ)) = -sum sqrt(Q/P) dP; zero-probability events
      // have no finite derivative and are skipped.
      w[x] = p[x] > 1e-300 ? -std::sqrt(q[x] / p[x]) : 0.0;
    }
  } else if (sampling.is_exact()) {
    for (std::size_t x = 0; x < dim; ++x) w[x] = scale * (2.0 * p[x] - 2.0 * q[x]);
  }

  std::vector<double> grad(theta.size(), 0.0);
  std::uint64_t shift_index = 0;
  for (int slot = 0; slot < circuit.n_trainable(); ++slot) {
    NeumaierSum g;
    for (const auto& term : circuits::slot_shift_terms(circuit, slot)) {
      sim::PureState shifted(circuit.n_qubits());
      circuits::run(shifted, circuit, theta, {}, &term.perturbation);
      if (spec.is_pure_overlap() && spec.phase_sensitive()) {
        g += term.coeff * std::norm(sim::inner_product(target.amplitudes(), shifted));
      } else if (base) {
        sim::RngStream ss = stream->substream("shift", shift_index);
        const auto h = sim::sample_counts(sim::born_distribution(shifted), *sampling.n, ss);
        g += term.coeff * scale *
             (2.0 * mean_delta(h, base->model) - 2.0 * mean_delta(h, base->target));
      } else {
        std::vector<double> ps(dim);
        for (std::size_t x = 0; x < dim; ++x) ps[x] = std::norm(shifted[x]);
        g += term.coeff * dot(w, ps);
      }
      ++shift_index;
    }
    grad[static_cast<std::size_t>(slot)] = g.value();
  }
  if (spec.is_pure_overlap() && spec.phase_sensitive()) {
    // d(2 - 2|o|) = -d|o|^2 / |o|.
    const double mag = std::abs(overlap);
    for (double& gi : grad) gi = mag > 1e-300 ? -gi / mag : 0.0;
  }
  return grad;
}

TrainTrace train_qcbm(const ParamCircuit& circuit, const QcbmTarget& target,
                      const mmd::KernelSpec& spec, const TrainConfig& config,
                      std::optional<std::vector<double>> theta0) {
  config.validate();
  const Sampling sampling{config.n_model_samples, config.m_target_samples};
  const auto n_params = static_cast<std::size_t>(circuit.n_trainable());
  std::vector<double> theta = theta0 ? *theta0 : initial_theta(n_params, config.seed);
  const sim::RngStream root(config.seed);
  Optimizer opt(config.optimizer, config.learning_rate, n_params);

  TrainTrace trace;
  trace.initial_theta = theta;
  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < config.max_iters; ++t) {
    const sim::RngStream it = root.substream("iter", static_cast<std::uint64_t>(t));
    IterationRecord rec;
    rec.iter = t;
    rec.loss_empirical = qcbm_loss(circuit, theta, target, spec, sampling, &it);
    rec.loss_exact = sampling.is_exact()
                         ? rec.loss_empirical
                         : qcbm_exact_loss(circuits::bind(circuit, theta), target, spec);
    const auto grad = qcbm_gradient(circuit, theta, target, spec, sampling, &it);
    double norm2 = 0.0;
    for (double g : grad) norm2 += g * g;
    rec.grad_norm = std::sqrt(norm2);
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    trace.records.push_back(rec);
    if (rec.grad_norm < config.convergence_tol) {
      trace.converged = true;
      break;
    }
    opt.step(theta, grad);
  }
  trace.final_theta = theta;
  const sim::PureState final_state = circuits::bind(circuit, theta);
  trace.metrics["final_loss_exact"] = qcbm_exact_loss(final_state, target, spec);
  if (sampling.is_exact()) {
    trace.metrics["final_loss_empirical"] = trace.metrics["final_loss_exact"];
  } else {
    const sim::RngStream fin = root.substream("final");
    trace.metrics["final_loss_empirical"] =
        qcbm_loss(circuit, theta, target, spec, sampling, &fin);
  }
  trace.metrics["min_loss_exact"] =
      std::min(trace.min_loss_exact(), trace.metrics["final_loss_exact"]);
  return trace;
}

}  // namespace qglm::train
