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

#include "qglm/train/qgan.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "qglm/error.hpp"
#include "qglm/mmd/mmd.hpp"
#include "qglm/sim/accumulate.hpp"

namespace qglm::train {
namespace {

using circuits::ParamCircuit;
using sim::NeumaierSum;
using sim::PureState;
using sim::SampleSet;

circuits::OutputMode vector_mode(GeneratorOutput o) {
  return o == GeneratorOutput::ProbVector ? circuits::OutputMode::ProbVector
                                          : circuits::OutputMode::ZExpectation;
}

void check_model(const QganModel& model, const std::vector<double>& theta,
                 const SampleSet& zs) {
  if (model.encoder.n_qubits() != model.generator.n_qubits()) {
    throw ArgumentError("encoder and generator qubit counts differ");
  }
  if (theta.size() != static_cast<std::size_t>(model.generator.n_trainable())) {
    throw ArgumentError("theta length differs from the generator slot count");
  }
  if (zs.kind() != SampleSet::Kind::Real ||
      zs.dim() < static_cast<std::size_t>(model.encoder.n_features())) {
    throw ArgumentError("latent samples must be real vectors covering the encoder features");
  }
}

void check_kernel(const QganModel& model, const mmd::KernelSpec& spec) {
  if (model.output == GeneratorOutput::State) {
    if (!spec.is_pure_overlap()) {
      throw CapabilityError("state outputs need the pure-state overlap kernel");
    }
  } else if (!spec.is_rbf()) {
    throw CapabilityError("vector outputs need an RBF kernel");
  }
}

std::vector<PureState> encode_all(const QganModel& model, const SampleSet& zs) {
  std::vector<PureState> out;
  out.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    PureState s(model.encoder.n_qubits());
    circuits::run(s, model.encoder, {}, zs.row(i));
    out.push_back(std::move(s));
  }
  return out;
}

PureState apply_generator(const QganModel& model, const std::vector<double>& theta,
                          const PureState& encoded,
                          const circuits::Perturbation* pert = nullptr) {
  PureState s = encoded;
  circuits::run(s, model.generator, theta, {}, pert);
  return s;
}

double fid(const PureState& a, const PureState& b) {
  return std::norm(sim::inner_product(a, b));
}

// Gradient of sum_k exp(-g_k |x - y|^2) / K with respect to x, added to out
// with weight w.
void add_rbf_partial(const std::vector<double>& gammas, std::span<const double> x,
                     std::span<const double> y, double w, std::vector<double>& out) {
  double d2 = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a) d2 += (x[a] - y[a]) * (x[a] - y[a]);
  double f = 0.0;
  for (double g : gammas) f += -2.0 * g * std::exp(-g * d2);
  f *= w / static_cast<double>(gammas.size());
  for (std::size_t a = 0; a < x.size(); ++a) out[a] += f * (x[a] - y[a]);
}

std::vector<double> vector_gradient(const QganModel& model,
                                    const std::vector<double>& theta,
                                    const SampleSet& zs, const SampleSet& ys,
                                    const mmd::KernelSpec& spec) {
  const auto mode = vector_mode(model.output);
  const auto encoded = encode_all(model, zs);
  std::vector<std::vector<double>> xs;
  xs.reserve(encoded.size());
  for (const auto& e : encoded) {
    xs.push_back(circuits::measure_output(apply_generator(model, theta, e), mode));
  }
  if (ys.kind() != SampleSet::Kind::Real || ys.dim() != xs.front().size()) {
    throw ArgumentError("target samples must be real vectors of the output dimension");
  }
  const double n = static_cast<double>(xs.size());
  const double m = static_cast<double>(ys.size());
  const auto& gammas = spec.gammas();
  const std::size_t dim = xs.front().size();

  // dL/dx_i for every generated sample.
  std::vector<std::vector<double>> dx(xs.size(), std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) add_rbf_partial(gammas, xs[i], xs[j], 2.0 / (n * (n - 1.0)), dx[i]);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      add_rbf_partial(gammas, xs[i], ys.row(j), -2.0 / (n * m), dx[i]);
    }
  }

  std::vector<double> grad(theta.size(), 0.0);
  for (int slot = 0; slot < model.generator.n_trainable(); ++slot) {
    const auto terms = circuits::slot_shift_terms(model.generator, slot);
    NeumaierSum g;
    for (std::size_t i = 0; i < encoded.size(); ++i) {
      for (const auto& term : terms) {
        const auto out = circuits::measure_output(
            apply_generator(model, theta, encoded[i], &term.perturbation), mode);
        double d = 0.0;
        for (std::size_t a = 0; a < dim; ++a) d += dx[i][a] * out[a];
        g += term.coeff * d;
      }
    }
    grad[static_cast<std::size_t>(slot)] = g.value();
  }
  return grad;
}

std::vector<double> state_gradient(const QganModel& model,
                                   const std::vector<double>& theta,
                                   const SampleSet& zs, const SampleSet& ys) {
  if (ys.kind() != SampleSet::Kind::State ||
      ys.state_list()[0].n_qubits() != model.generator.n_qubits()) {
    throw ArgumentError("target samples must be states on the generator's qubits");
  }
  const auto encoded = encode_all(model, zs);
  std::vector<PureState> psi;
  psi.reserve(encoded.size());
  for (const auto& e : encoded) psi.push_back(apply_generator(model, theta, e));
  const auto targets = ys.state_list();
  const double n = static_cast<double>(psi.size());
  const double m = static_cast<double>(targets.size());

  std::vector<double> grad(theta.size(), 0.0);
  for (int slot = 0; slot < model.generator.n_trainable(); ++slot) {
    const auto terms = circuits::slot_shift_terms(model.generator, slot);
    NeumaierSum g;
    for (std::size_t i = 0; i < encoded.size(); ++i) {
      for (const auto& term : terms) {
        const PureState s = apply_generator(model, theta, encoded[i], &term.perturbation);
        NeumaierSum within, cross;
        for (std::size_t j = 0; j < psi.size(); ++j) {
          if (j != i) within += fid(s, psi[j]);
        }
        for (const auto& t : targets) cross += fid(s, t);
        g += term.coeff * (2.0 * within.value() / (n * (n - 1.0)) -
                           2.0 * cross.value() / (n * m));
      }
    }
    grad[static_cast<std::size_t>(slot)] = g.value();
  }
  return grad;
}

}  // namespace

SampleSet generate(const QganModel& model, const std::vector<double>& theta,
                   const SampleSet& zs) {
  check_model(model, theta, zs);
  const auto encoded = encode_all(model, zs);
  if (model.output == GeneratorOutput::State) {
    std::vector<PureState> out;
    out.reserve(encoded.size());
    for (const auto& e : encoded) out.push_back(apply_generator(model, theta, e));
    return SampleSet::states(std::move(out), sim::Provenance::Model);
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(encoded.size());
  for (const auto& e : encoded) {
    rows.push_back(circuits::measure_output(apply_generator(model, theta, e),
                                            vector_mode(model.output)));
  }
  return SampleSet::real_rows(rows, sim::Provenance::Model);
}

double qgan_loss(const QganModel& model, const std::vector<double>& theta,
                 const SampleSet& zs, const SampleSet& ys, const mmd::KernelSpec& spec) {
  check_kernel(model, spec);
  return mmd::mmd2_u(generate(model, theta, zs), ys, spec);
}

std::vector<double> qgan_gradient(const QganModel& model, const std::vector<double>& theta,
                                  const SampleSet& zs, const SampleSet& ys,
                                  const mmd::KernelSpec& spec) {
  check_model(model, theta, zs);
  check_kernel(model, spec);
  if (zs.size() < 2 || ys.size() < 2) {
    throw ArgumentError("QGAN gradient needs at least two samples per side");
  }
  if (model.output == GeneratorOutput::State) return state_gradient(model, theta, zs, ys);
  return vector_gradient(model, theta, zs, ys, spec);
}

std::vector<std::size_t> minibatch_sizes(std::size_t m, std::size_t b) {
  if (b == 0 || b > m) throw ArgumentError("batch size must lie in [1, m]");
  std::vector<std::size_t> sizes(m / b, b);
  const std::size_t rest = m % b;
  if (rest == 1 && !sizes.empty()) {
    sizes.back() += 1;
  } else if (rest > 0) {
    sizes.push_back(rest);
  }
  return sizes;
}

TrainTrace train_qgan_algorithm1(const QganModel& model, const PriorSampler& prior,
                                 const SampleSet& targets, const mmd::KernelSpec& spec,
                                 const TrainConfig& config,
                                 std::optional<std::vector<double>> theta0) {
  config.validate();
  check_kernel(model, spec);
  if (!config.n_model_samples || *config.n_model_samples < 2) {
    throw ArgumentError("QGAN training needs n_model_samples >= 2");
  }
  const std::size_t m = targets.size();
  if (m < 2) throw ArgumentError("QGAN training needs at least two targets");
  if (config.m_target_samples && *config.m_target_samples != m) {
    throw ArgumentError("m_target_samples differs from the target set size");
  }
  const std::size_t b = config.batch_size == 0 ? m : config.batch_size;
  const auto sizes = minibatch_sizes(m, b);
  if (sizes.front() < 2) throw ArgumentError("minibatches need at least two targets");

  const auto n_params = static_cast<std::size_t>(model.generator.n_trainable());
  std::vector<double> theta = theta0 ? *theta0 : initial_theta(n_params, config.seed);
  const sim::RngStream root(config.seed);
  Optimizer opt(config.optimizer, config.learning_rate, n_params);

  auto draw_noise = [&](int t) {
    sim::RngStream s = root.substream("noise", static_cast<std::uint64_t>(t));
    std::vector<std::vector<double>> rows(*config.n_model_samples);
    for (auto& r : rows) r = prior(s);
    return SampleSet::real_rows(rows, sim::Provenance::Model);
  };

  TrainTrace trace;
  trace.initial_theta = theta;
  std::optional<SampleSet> zs;
  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < config.max_iters; ++t) {
    if (t % config.noise_refresh == 0) zs = draw_noise(t);

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    sim::RngStream sh = root.substream("shuffle", static_cast<std::uint64_t>(t));
    for (std::size_t i = m - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(sh.next_u64() % (i + 1));
      std::swap(perm[i], perm[j]);
    }

    IterationRecord rec;
    rec.iter = t;
    rec.loss_empirical = qgan_loss(model, theta, *zs, targets, spec);
    rec.loss_exact = std::nan("");

    double norm_sum = 0.0;
    std::size_t offset = 0;
    for (std::size_t size : sizes) {
      const SampleSet batch =
          targets.subset(std::span<const std::size_t>(perm).subspan(offset, size));
      offset += size;
      const auto grad = qgan_gradient(model, theta, *zs, batch, spec);
      double norm2 = 0.0;
      for (double g : grad) norm2 += g * g;
      norm_sum += std::sqrt(norm2);
      opt.step(theta, grad);
    }
    rec.grad_norm = norm_sum / static_cast<double>(sizes.size());
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    trace.records.push_back(rec);
    if (rec.grad_norm < config.convergence_tol) {
      trace.converged = true;
      break;
    }
  }
  trace.final_theta = theta;
  trace.metrics["final_loss_empirical"] = qgan_loss(model, theta, *zs, targets, spec);
  return trace;
}

}  // namespace qglm::train
