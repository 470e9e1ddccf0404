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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qglm/circuits/builders.hpp"
#include "qglm/circuits/circuit.hpp"
#include "qglm/error.hpp"
#include "qglm/mmd/kernel.hpp"
#include "qglm/mmd/mmd.hpp"
#include "qglm/sim/distribution.hpp"
#include "qglm/sim/rng.hpp"
#include "qglm/train/optimizer.hpp"
#include "qglm/train/qcbm.hpp"
#include "qglm/train/qgan.hpp"
#include "qglm/train/trace.hpp"

namespace {

namespace qc = qglm::circuits;
namespace qt = qglm::train;
using qc::Binding;
using qc::GateKind;
using qc::ParamCircuit;
using qglm::mmd::KernelSpec;
using qglm::sim::DiscreteDistribution;
using qglm::sim::Provenance;
using qglm::sim::PureState;
using qglm::sim::RngStream;
using qglm::sim::SampleSet;

constexpr double kPi = std::numbers::pi;

ParamCircuit single_ry() {
  return ParamCircuit(1, {{GateKind::RY, {0}, Binding::trainable(0), {}}});
}

std::vector<double> random_theta(std::size_t n, RngStream& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(0, 2 * kPi);
  return v;
}

template <class F>
std::vector<double> central_differences(F f, const std::vector<double>& theta,
                                        double h = 1e-5) {
  std::vector<double> g(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    auto up = theta, down = theta;
    up[j] += h;
    down[j] -= h;
    g[j] = (f(up) - f(down)) / (2 * h);
  }
  return g;
}

double rel_error(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0, r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += (a[i] - b[i]) * (a[i] - b[i]);
    r += b[i] * b[i];
  }
  return std::sqrt(d) / std::max(std::sqrt(r), 1e-12);
}

// --- optimizers -----------------------------------------------------------

TEST(Optimizer, GdDecreasesQuadraticMonotonically) {
  std::vector<double> theta{1.0, -2.0, 0.5};
  qt::Optimizer opt(qt::OptimizerKind::GD, 0.1, 3);
  double prev = 1e300;
  for (int s = 0; s < 100; ++s) {
    double f = 0.0;
    std::vector<double> g(3);
    for (std::size_t i = 0; i < 3; ++i) {
      f += theta[i] * theta[i];
      g[i] = 2 * theta[i];
    }
    EXPECT_LT(f, prev);
    prev = f;
    opt.step(theta, g);
  }
}

TEST(Optimizer, AdaptiveMethodsReachSmallFraction) {
  for (auto kind : {qt::OptimizerKind::Adam, qt::OptimizerKind::Adagrad}) {
    std::vector<double> theta{1.0, -2.0, 0.5};
    const double f0 = 1 + 4 + 0.25;
    qt::Optimizer opt(kind, 0.1, 3);
    double f = f0;
    for (int s = 0; s < 500 && f >= 1e-3 * f0; ++s) {
      std::vector<double> g(3);
      for (std::size_t i = 0; i < 3; ++i) g[i] = 2 * theta[i];
      opt.step(theta, g);
      f = 0.0;
      for (double t : theta) f += t * t;
    }
    EXPECT_LT(f, 1e-3 * f0) << qt::to_string(kind);
  }
}

TEST(Optimizer, AdamMatchesHandUpdate) {
  const double lr = 0.05, b1 = 0.9, b2 = 0.999, eps = 1e-8;
  std::vector<double> theta{0.3}, ref{0.3};
  double m = 0.0, v = 0.0;
  qt::Optimizer opt(qt::OptimizerKind::Adam, lr, 1);
  for (int t = 1; t <= 5; ++t) {
    const double g = std::sin(3.0 * ref[0]) + 0.1 * t;
    opt.step(theta, std::vector<double>{g});
    m = b1 * m + (1 - b1) * g;
    v = b2 * v + (1 - b2) * g * g;
    const double mh = m / (1 - std::pow(b1, t));
    const double vh = v / (1 - std::pow(b2, t));
    ref[0] -= lr * mh / (std::sqrt(vh) + eps);
    EXPECT_NEAR(theta[0], ref[0], 1e-15);
  }
}

TEST(Optimizer, ParsesNames) {
  EXPECT_EQ(qt::optimizer_from_string("adam"), qt::OptimizerKind::Adam);
  EXPECT_EQ(qt::optimizer_from_string("AdaGrad"), qt::OptimizerKind::Adagrad);
  EXPECT_EQ(qt::optimizer_from_string("gd"), qt::OptimizerKind::GD);
  EXPECT_THROW(qt::optimizer_from_string("lbfgs"), qglm::ArgumentError);
}

// --- QCBM loss and gradient ----------------------------------------------

// p = [0.5, 0.5] against [1, 0]: sum p^2 + sum q^2 - 2 sum p q = 0.5 + 1 - 1.
TEST(QcbmLoss, SingleQubitExample) {
  const auto target = qt::QcbmTarget::distribution(DiscreteDistribution({1, 0}));
  const double loss = qt::qcbm_loss(single_ry(), {kPi / 2}, target,
                                    KernelSpec::linear(), qt::Sampling::exact());
  EXPECT_NEAR(loss, 0.5, 1e-15);
  EXPECT_NEAR(loss, qglm::mmd::mmd2_exact(DiscreteDistribution({0.5, 0.5}),
                                          DiscreteDistribution({1, 0}),
                                          KernelSpec::linear()),
              1e-15);
}

TEST(QcbmLoss, ZeroAtRepresentedTarget) {
  const ParamCircuit c = qc::build_qcbm_ansatz(3, 2);
  RngStream rng(1);
  const auto theta = random_theta(9, rng);
  const auto target = qt::QcbmTarget::distribution(
      qglm::sim::born_distribution(qc::bind(c, theta)));
  EXPECT_NEAR(qt::qcbm_loss(c, theta, target, KernelSpec::linear(),
                            qt::Sampling::exact()),
              0.0, 1e-14);
}

TEST(QcbmLoss, SampledModeConcentrates) {
  const auto target = qt::QcbmTarget::distribution(DiscreteDistribution({1, 0}));
  const auto spec = KernelSpec::rbf({0.25, 4});
  const double exact = qt::qcbm_loss(single_ry(), {kPi / 2}, target, spec,
                                     qt::Sampling::exact());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RngStream s(seed);
    const double v = qt::qcbm_loss(single_ry(), {kPi / 2}, target, spec,
                                   qt::Sampling::sampled(10000, 10000), &s);
    EXPECT_NEAR(v, exact, 0.02) << seed;
  }
}

TEST(QcbmGradient, SingleQubitMatchesFiniteDifference) {
  const auto target = qt::QcbmTarget::distribution(DiscreteDistribution({1, 0}));
  const auto loss = [&](const std::vector<double>& th) {
    return qt::qcbm_loss(single_ry(), th, target, KernelSpec::linear(),
                         qt::Sampling::exact());
  };
  const auto g = qt::qcbm_gradient(single_ry(), {kPi / 2}, target,
                                   KernelSpec::linear(), qt::Sampling::exact());
  // L = p0^2 + p1^2 - 2 p0 with p0 = cos^2(t/2): dL/dt = sin t (1 - 2 p0) + sin t.
  EXPECT_NEAR(g[0], 1.0, 1e-12);
  EXPECT_NEAR(g[0], central_differences(loss, {kPi / 2})[0], 1e-8);
}

TEST(QcbmGradient, MatchesFiniteDifferencesForEveryKernel) {
  const ParamCircuit c = qc::build_qcbm_ansatz(3, 2);
  const auto target = qt::QcbmTarget::distribution(
      DiscreteDistribution({0.3, 0.05, 0.1, 0.05, 0.2, 0.1, 0.15, 0.05}));
  RngStream rng(2);
  for (const auto& spec : {KernelSpec::linear(), KernelSpec::rbf({0.25, 4}),
                           KernelSpec::pure_overlap(false),
                           KernelSpec::pure_overlap(true)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto theta = random_theta(9, rng);
      const auto loss = [&](const std::vector<double>& th) {
        return qt::qcbm_loss(c, th, target, spec, qt::Sampling::exact());
      };
      const auto g = qt::qcbm_gradient(c, theta, target, spec, qt::Sampling::exact());
      EXPECT_LE(rel_error(g, central_differences(loss, theta)), 1e-6)
          << spec.describe();
    }
  }
}

TEST(QcbmGradient, ZeroAtGlobalMinimum) {
  const ParamCircuit c = qc::build_qcbm_ansatz(3, 2);
  RngStream rng(3);
  const auto theta = random_theta(9, rng);
  const PureState s = qc::bind(c, theta);
  const auto dist_target =
      qt::QcbmTarget::distribution(qglm::sim::born_distribution(s));
  for (const auto& spec : {KernelSpec::linear(), KernelSpec::rbf({0.25, 4}),
                           KernelSpec::pure_overlap()}) {
    for (double g : qt::qcbm_gradient(c, theta, dist_target, spec,
                                      qt::Sampling::exact()))
      EXPECT_NEAR(g, 0.0, 1e-9) << spec.describe();
  }
  for (double g : qt::qcbm_gradient(c, theta, qt::QcbmTarget::state(s),
                                    KernelSpec::pure_overlap(true),
                                    qt::Sampling::exact()))
    EXPECT_NEAR(g, 0.0, 1e-8);
}

// On one-hot events the RBF mixture is c + (1 - c) delta, so loss and
// gradient are the linear-kernel ones scaled by (1 - c).
TEST(QcbmGradient, ScalesWithKernel) {
  const ParamCircuit c = qc::build_qcbm_ansatz(2, 2);
  const auto target =
      qt::QcbmTarget::distribution(DiscreteDistribution({0.5, 0, 0, 0.5}));
  RngStream rng(4);
  const auto theta = random_theta(6, rng);
  const auto rbf = KernelSpec::rbf({0.7});
  const double scale = 1.0 - std::exp(-2 * 0.7);
  const auto gl = qt::qcbm_gradient(c, theta, target, KernelSpec::linear(),
                                    qt::Sampling::exact());
  const auto gr = qt::qcbm_gradient(c, theta, target, rbf, qt::Sampling::exact());
  for (std::size_t j = 0; j < gl.size(); ++j) EXPECT_NEAR(gr[j], scale * gl[j], 1e-14);
}

TEST(QcbmGradient, SampledAveragesToExact) {
  const ParamCircuit c = qc::build_qcbm_ansatz(2, 1);
  const auto target =
      qt::QcbmTarget::distribution(DiscreteDistribution({0.4, 0.1, 0.1, 0.4}));
  const auto spec = KernelSpec::rbf({0.25, 4});
  const std::vector<double> theta{0.3, 1.9, 2.5, 4.0};
  const auto exact = qt::qcbm_gradient(c, theta, target, spec, qt::Sampling::exact());
  const int reps = 200;
  std::vector<double> sum(4, 0.0), sum2(4, 0.0);
  for (int r = 0; r < reps; ++r) {
    const RngStream s(static_cast<std::uint64_t>(r));
    const auto g = qt::qcbm_gradient(c, theta, target, spec,
                                     qt::Sampling::sampled(500, 500), &s);
    for (std::size_t j = 0; j < 4; ++j) {
      sum[j] += g[j];
      sum2[j] += g[j] * g[j];
    }
  }
  for (std::size_t j = 0; j < 4; ++j) {
    const double mean = sum[j] / reps;
    const double se = std::sqrt((sum2[j] / reps - mean * mean) / (reps - 1));
    EXPECT_LE(std::abs(mean - exact[j]), 4 * se + 1e-12) << j;
  }
}

TEST(QcbmGradient, SampledIsSeedDeterministic) {
  const ParamCircuit c = qc::build_qcbm_ansatz(2, 1);
  const auto target =
      qt::QcbmTarget::distribution(DiscreteDistribution({0.4, 0.1, 0.1, 0.4}));
  const RngStream s(5);
  const auto spec = KernelSpec::rbf({1.0});
  const std::vector<double> theta{0.3, 1.9, 2.5, 4.0};
  EXPECT_EQ(qt::qcbm_gradient(c, theta, target, spec, qt::Sampling::sampled(50, 50), &s),
            qt::qcbm_gradient(c, theta, target, spec, qt::Sampling::sampled(50, 50), &s));
}

// --- QGAN gradient ---------------------------------------------------------

struct Toy {
  ParamCircuit encoder{1, {{GateKind::RY, {0}, Binding::input(0), {}}}};
  ParamCircuit generator = single_ry();
};

TEST(QganGradient, ToyMatchesFiniteDifference) {
  Toy toy;
  const qt::QganModel model{toy.encoder, toy.generator,
                            qt::GeneratorOutput::ZExpectation};
  const auto zs = SampleSet::real(1, {0.2, -0.7}, Provenance::Model);
  const auto ys = SampleSet::real(1, {0.5, -0.1}, Provenance::Target);
  const auto spec = KernelSpec::rbf({1.0});
  const std::vector<double> theta{0.9};
  const auto loss = [&](const std::vector<double>& th) {
    return qt::qgan_loss(model, th, zs, ys, spec);
  };
  const auto g = qt::qgan_gradient(model, theta, zs, ys, spec);
  EXPECT_NEAR(g[0], central_differences(loss, theta)[0], 1e-7);
}

TEST(QganGradient, DiagonalOnlyGeneratorIsFlat) {
  const auto style = qc::build_style_qgan(1);
  const ParamCircuit rz(3, {{GateKind::RZ, {0}, Binding::trainable(0), {}},
                            {GateKind::RZ, {1}, Binding::trainable(1), {}},
                            {GateKind::RZ, {2}, Binding::trainable(2), {}}});
  const qt::QganModel model{style.encoder, rz, qt::GeneratorOutput::ZExpectation};
  const auto zs = SampleSet::real(3, {0.1, 0.5, -0.3, 1.2, -0.4, 0.9},
                                  Provenance::Model);
  const auto ys = SampleSet::real(3, {0.0, 0.1, 0.2, 0.3, 0.4, 0.5},
                                  Provenance::Target);
  for (double g : qt::qgan_gradient(model, {0.3, 1.1, 2.0}, zs, ys,
                                    KernelSpec::rbf({0.001, 1, 10})))
    EXPECT_NEAR(g, 0.0, 1e-14);
}

TEST(QganGradient, DoublingTargetsLeavesGradient) {
  const auto style = qc::build_style_qgan(1);
  const qt::QganModel model{style.encoder, style.generator,
                            qt::GeneratorOutput::ZExpectation};
  RngStream rng(6);
  std::vector<double> zf(12), yf(9);
  for (double& v : zf) v = rng.normal();
  for (double& v : yf) v = rng.normal();
  std::vector<double> yf2 = yf;
  yf2.insert(yf2.end(), yf.begin(), yf.end());
  const auto zs = SampleSet::real(3, zf, Provenance::Model);
  const auto spec = KernelSpec::rbf({0.001, 1, 10});
  const auto theta = random_theta(14, rng);
  const auto g1 = qt::qgan_gradient(model, theta, zs,
                                    SampleSet::real(3, yf, Provenance::Target), spec);
  const auto g2 = qt::qgan_gradient(model, theta, zs,
                                    SampleSet::real(3, yf2, Provenance::Target), spec);
  for (std::size_t j = 0; j < g1.size(); ++j) EXPECT_NEAR(g1[j], g2[j], 1e-13);
}

TEST(QganGradient, StyleAndPhlMatchFiniteDifferences) {
  RngStream rng(7);
  const auto style = qc::build_style_qgan(2);
  for (auto out : {qt::GeneratorOutput::ZExpectation, qt::GeneratorOutput::ProbVector}) {
    const qt::QganModel model{style.encoder, style.generator, out};
    const std::size_t dim = out == qt::GeneratorOutput::ProbVector ? 8 : 3;
    std::vector<double> zf(15), yf(4 * dim);
    for (double& v : zf) v = rng.normal();
    for (double& v : yf) v = rng.uniform();
    const auto zs = SampleSet::real(3, zf, Provenance::Model);
    const auto ys = SampleSet::real(dim, yf, Provenance::Target);
    const auto spec = KernelSpec::rbf({0.001, 1, 10});
    const auto theta = random_theta(28, rng);
    const auto loss = [&](const std::vector<double>& th) {
      return qt::qgan_loss(model, th, zs, ys, spec);
    };
    EXPECT_LE(rel_error(qt::qgan_gradient(model, theta, zs, ys, spec),
                        central_differences(loss, theta)),
              1e-6);
  }
  const auto phl = qc::build_xxz_phl(3);
  const qt::QganModel model{phl.encoder, phl.generator, qt::GeneratorOutput::State};
  const auto zs = SampleSet::real(1, {-0.1, 0.05, 0.2}, Provenance::Model);
  std::vector<PureState> targets;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> th = random_theta(12, rng);
    targets.push_back(qc::bind(phl.generator, th));
  }
  const auto ys = SampleSet::states(targets, Provenance::Target);
  const auto theta = random_theta(12, rng);
  const auto loss = [&](const std::vector<double>& th) {
    return qt::qgan_loss(model, th, zs, ys, KernelSpec::pure_overlap());
  };
  EXPECT_LE(rel_error(qt::qgan_gradient(model, theta, zs, ys, KernelSpec::pure_overlap()),
                      central_differences(loss, theta)),
            1e-6);
}

TEST(QganGradient, NeedsTwoSamples) {
  Toy toy;
  const qt::QganModel model{toy.encoder, toy.generator,
                            qt::GeneratorOutput::ZExpectation};
  const auto one = SampleSet::real(1, {0.2}, Provenance::Model);
  const auto two = SampleSet::real(1, {0.2, 0.3}, Provenance::Target);
  EXPECT_THROW(qt::qgan_gradient(model, {0.1}, one, two, KernelSpec::rbf({1})),
               qglm::ArgumentError);
}

// --- training loops --------------------------------------------------------

TEST(TrainQcbm, SelfTargetConvergesImmediately) {
  const ParamCircuit c = qc::build_qcbm_ansatz(3, 2);
  qt::TrainConfig cfg;
  cfg.seed = 12;
  const auto theta0 = qt::initial_theta(9, cfg.seed);
  const auto target = qt::QcbmTarget::distribution(
      qglm::sim::born_distribution(qc::bind(c, theta0)));
  const auto trace = qt::train_qcbm(c, target, KernelSpec::linear(), cfg);
  ASSERT_FALSE(trace.records.empty());
  EXPECT_LE(trace.records[0].loss_exact, 1e-10);
  EXPECT_TRUE(trace.converged);
  EXPECT_EQ(trace.records.size(), 1u);
}

// Adam keeps oscillating around 3e-4 at this budget; Adagrad settles.
TEST(TrainQcbm, LearnsBellDistribution) {
  const ParamCircuit c = qc::build_qcbm_ansatz(2, 2);
  const auto target =
      qt::QcbmTarget::distribution(DiscreteDistribution({0.5, 0, 0, 0.5}));
  int good = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    qt::TrainConfig cfg;
    cfg.seed = seed;
    cfg.optimizer = qt::OptimizerKind::Adagrad;
    cfg.learning_rate = 1.0;
    const auto trace = qt::train_qcbm(c, target, KernelSpec::linear(), cfg);
    EXPECT_LE(trace.records.size(), 50u);
    if (trace.metrics.at("final_loss_exact") <= 1e-4) ++good;
  }
  EXPECT_GE(good, 4);
}

TEST(TrainQcbm, SampledRunIsReproducible) {
  const ParamCircuit c = qc::build_qcbm_ansatz(2, 1);
  const auto target =
      qt::QcbmTarget::distribution(DiscreteDistribution({0.4, 0.1, 0.1, 0.4}));
  qt::TrainConfig cfg;
  cfg.max_iters = 5;
  cfg.n_model_samples = 100;
  cfg.m_target_samples = 100;
  cfg.seed = 3;
  const auto a = qt::train_qcbm(c, target, KernelSpec::rbf({1}), cfg);
  const auto b = qt::train_qcbm(c, target, KernelSpec::rbf({1}), cfg);
  EXPECT_TRUE(qt::same_except_timing(a, b));
  EXPECT_EQ(a.records.size(), 5u);
}

TEST(Minibatch, SizesFollowCeilDivision) {
  EXPECT_EQ(qt::minibatch_sizes(200, 64), (std::vector<std::size_t>{64, 64, 64, 8}));
  EXPECT_EQ(qt::minibatch_sizes(10, 10), (std::vector<std::size_t>{10}));
  EXPECT_EQ(qt::minibatch_sizes(9, 4), (std::vector<std::size_t>{4, 5}));
  EXPECT_THROW(qt::minibatch_sizes(10, 11), qglm::ArgumentError);
}

struct Gauss3dFixture {
  qc::QganCircuits circuits = qc::build_style_qgan(1);
  qt::PriorSampler prior = [](RngStream& s) {
    return std::vector<double>{s.normal(), s.normal(), s.normal()};
  };
  SampleSet targets;
  Gauss3dFixture() : targets(make_targets(12)) {}
  static SampleSet make_targets(std::size_t m) {
    RngStream s(77);
    std::vector<double> flat(3 * m);
    for (double& v : flat) v = 0.3 * s.normal() + 0.2;
    return SampleSet::real(3, flat, Provenance::Target);
  }
  qt::QganModel model() const {
    return {circuits.encoder, circuits.generator, qt::GeneratorOutput::ZExpectation};
  }
};

// With r = 1 and b = m the loop is plain full-batch descent on fresh noise;
// replay it by hand.
TEST(Algorithm1, FullBatchReducesToPlainDescent) {
  Gauss3dFixture fx;
  const auto spec = KernelSpec::rbf({0.001, 1, 10});
  qt::TrainConfig cfg;
  cfg.max_iters = 6;
  cfg.optimizer = qt::OptimizerKind::GD;
  cfg.learning_rate = 0.1;
  cfg.n_model_samples = 5;
  cfg.seed = 9;
  const auto trace = qt::train_qgan_algorithm1(fx.model(), fx.prior, fx.targets,
                                               spec, cfg);
  std::vector<double> theta = qt::initial_theta(14, cfg.seed);
  const RngStream root(cfg.seed);
  for (int t = 0; t < cfg.max_iters; ++t) {
    RngStream s = root.substream("noise", static_cast<std::uint64_t>(t));
    std::vector<std::vector<double>> rows(5);
    for (auto& r : rows) r = fx.prior(s);
    const auto zs = SampleSet::real_rows(rows, Provenance::Model);
    EXPECT_NEAR(trace.records[t].loss_empirical,
                qglm::mmd::mmd2_u(qt::generate(fx.model(), theta, zs), fx.targets, spec),
                1e-12);
    const auto g = qt::qgan_gradient(fx.model(), theta, zs, fx.targets, spec);
    for (std::size_t j = 0; j < theta.size(); ++j) theta[j] -= 0.1 * g[j];
  }
  for (std::size_t j = 0; j < theta.size(); ++j)
    EXPECT_NEAR(trace.final_theta[j], theta[j], 1e-10);
}

TEST(Algorithm1, BitwiseDeterministic) {
  Gauss3dFixture fx;
  qt::TrainConfig cfg;
  cfg.max_iters = 4;
  cfg.n_model_samples = 6;
  cfg.batch_size = 5;
  cfg.noise_refresh = 2;
  cfg.seed = 21;
  const auto spec = KernelSpec::rbf({0.001, 1, 10});
  const auto a = qt::train_qgan_algorithm1(fx.model(), fx.prior, fx.targets, spec, cfg);
  const auto b = qt::train_qgan_algorithm1(fx.model(), fx.prior, fx.targets, spec, cfg);
  EXPECT_TRUE(qt::same_except_timing(a, b));
  EXPECT_EQ(a.final_theta, b.final_theta);
}

// Four minibatches per epoch means four optimizer steps per iteration; the
// Adam step counter exposes that through a one-iteration replay.
TEST(Algorithm1, StepsPerEpochFollowBatchCount) {
  qc::QganCircuits circuits = qc::build_style_qgan(1);
  const auto targets = Gauss3dFixture::make_targets(200);
  qt::PriorSampler prior = [](RngStream& s) {
    return std::vector<double>{s.normal(), s.normal(), s.normal()};
  };
  const qt::QganModel model{circuits.encoder, circuits.generator,
                            qt::GeneratorOutput::ZExpectation};
  qt::TrainConfig cfg;
  cfg.max_iters = 1;
  cfg.optimizer = qt::OptimizerKind::GD;
  cfg.learning_rate = 0.05;
  cfg.n_model_samples = 4;
  cfg.batch_size = 64;
  cfg.seed = 2;
  const auto spec = KernelSpec::rbf({1.0});
  const auto trace = qt::train_qgan_algorithm1(model, prior, targets, spec, cfg);

  RngStream s = RngStream(cfg.seed).substream("noise", 0);
  std::vector<std::vector<double>> rows(4);
  for (auto& r : rows) r = prior(s);
  const auto zs = SampleSet::real_rows(rows, Provenance::Model);
  std::vector<std::size_t> perm(200);
  for (std::size_t i = 0; i < 200; ++i) perm[i] = i;
  RngStream sh = RngStream(cfg.seed).substream("shuffle", 0);
  for (std::size_t i = 199; i > 0; --i) std::swap(perm[i], perm[sh.next_u64() % (i + 1)]);
  std::vector<double> theta = qt::initial_theta(14, cfg.seed);
  int steps = 0;
  for (std::size_t off = 0; off < 200; off += 64, ++steps) {
    const std::size_t len = std::min<std::size_t>(64, 200 - off);
    const auto batch = targets.subset(std::span<const std::size_t>(perm).subspan(off, len));
    const auto g = qt::qgan_gradient(model, theta, zs, batch, spec);
    for (std::size_t j = 0; j < theta.size(); ++j) theta[j] -= 0.05 * g[j];
  }
  EXPECT_EQ(steps, 4);
  for (std::size_t j = 0; j < theta.size(); ++j)
    EXPECT_NEAR(trace.final_theta[j], theta[j], 1e-12);
}

TEST(Algorithm1, RejectsOversizedBatch) {
  Gauss3dFixture fx;
  qt::TrainConfig cfg;
  cfg.n_model_samples = 4;
  cfg.batch_size = 13;
  EXPECT_THROW(qt::train_qgan_algorithm1(fx.model(), fx.prior, fx.targets,
                                         KernelSpec::rbf({1}), cfg),
               qglm::ArgumentError);
}

// --- trace ------------------------------------------------------------------

TEST(Trace, CsvHasOneRowPerIteration) {
  const ParamCircuit c = qc::build_qcbm_ansatz(2, 1);
  const auto target =
      qt::QcbmTarget::distribution(DiscreteDistribution({0.4, 0.1, 0.1, 0.4}));
  qt::TrainConfig cfg;
  cfg.max_iters = 7;
  const auto trace = qt::train_qcbm(c, target, KernelSpec::linear(), cfg);
  const std::string csv = trace.to_csv();
  EXPECT_EQ(csv.rfind("iter,loss_empirical,loss_exact,grad_norm,elapsed_ms\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'),
            static_cast<long>(trace.records.size()) + 1);
  const auto summary = trace.summary_json();
  EXPECT_EQ(summary.at("final_theta").size(), 4u);
}

TEST(TrainConfig, Validates) {
  qt::TrainConfig cfg;
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.validate(), qglm::ArgumentError);
  cfg = {};
  cfg.learning_rate = -1;
  EXPECT_THROW(cfg.validate(), qglm::ArgumentError);
  cfg = {};
  cfg.noise_refresh = 0;
  EXPECT_THROW(cfg.validate(), qglm::ArgumentError);
}

TEST(InitialTheta, UniformInRangeAndSeeded) {
  const auto a = qt::initial_theta(1000, 4);
  EXPECT_EQ(a, qt::initial_theta(1000, 4));
  EXPECT_NE(a, qt::initial_theta(1000, 5));
  for (double t : a) {
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 2 * kPi);
  }
}

}  // namespace
