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


// Acceptance suite. Each criterion runs at its stated tolerance and prints
// a single PASS/FAIL line; `--criterion N` selects one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bound_oracles.hpp"
#include "qglm/bounds/bounds.hpp"
#include "qglm/circuits/builders.hpp"
#include "qglm/circuits/circuit.hpp"
#include "qglm/experiments/config.hpp"
#include "qglm/experiments/runner.hpp"
#include "qglm/experiments/targets.hpp"
#include "qglm/mmd/kernel.hpp"
#include "qglm/mmd/mmd.hpp"
#include "qglm/sim/distribution.hpp"
#include "qglm/sim/eigen.hpp"
#include "qglm/sim/rng.hpp"
#include "qglm/train/qcbm.hpp"
#include "qglm/train/qgan.hpp"

namespace {

namespace qc = qglm::circuits;
namespace qe = qglm::experiments;
namespace qt = qglm::train;
using qglm::mmd::KernelSpec;
using qglm::sim::DiscreteDistribution;
using qglm::sim::RngStream;
using qglm::sim::SampleSet;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double median(std::vector<double> v) { return qe::quantiles(std::move(v)).median; }

qe::ExperimentResult run_preset(const std::string& name) {
  return qe::run_experiment(qe::parse_config(qe::preset_document(name)));
}

// Median final empirical loss below the median initial one.
bool training_helps(const qe::ExperimentResult& r) {
  std::vector<double> first, last;
  for (const auto& run : r.runs) {
    first.push_back(run.trace.records.front().loss_empirical);
    last.push_back(run.trace.metrics.at("final_loss_empirical"));
  }
  return median(last) < median(first);
}

// --- 1: gradient oracles ----------------------------------------------------

std::vector<double> random_theta(std::size_t n, RngStream& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(0, 2 * std::numbers::pi);
  return v;
}

double fd_rel_error(const std::function<double(const std::vector<double>&)>& loss,
                    const std::vector<double>& grad, const std::vector<double>& theta) {
  constexpr double h = 1e-5;
  double diff = 0.0, ref = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    auto up = theta, down = theta;
    up[j] += h;
    down[j] -= h;
    const double fd = (loss(up) - loss(down)) / (2 * h);
    diff += (grad[j] - fd) * (grad[j] - fd);
    ref += fd * fd;
  }
  return std::sqrt(diff) / std::max(std::sqrt(ref), 1e-12);
}

void criterion_gradients(Outcome& out) {
  RngStream rng(101);
  qglm::sim::Hamiltonian cost(3);
  cost.add_term(1.0, "ZZI").add_term(0.7, "IZZ").add_term(-0.4, "ZIZ").add_term(0.3, "IIZ");
  const std::vector<std::pair<std::string, qc::ParamCircuit>> born{
      {"qcbm", qc::build_qcbm_ansatz(3, 2)},
      {"hardware_efficient", qc::build_hardware_efficient(3, 2)},
      {"qaoa", qc::build_qaoa(3, 2, cost)}};
  const auto dist = qt::QcbmTarget::distribution(qe::make_discrete_gaussian(3, 3.5, 2));
  const auto ghz = qt::QcbmTarget::state(qe::make_ghz(3));
  const std::vector<std::pair<KernelSpec, const qt::QcbmTarget*>> kernels{
      {KernelSpec::rbf({0.25, 4}), &dist},
      {KernelSpec::linear(), &dist},
      {KernelSpec::pure_overlap(false), &dist},
      {KernelSpec::pure_overlap(true), &ghz}};
  double worst = 0.0;
  int checks = 0;
  for (const auto& [name, c] : born) {
    for (const auto& [spec, target] : kernels) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto theta = random_theta(static_cast<std::size_t>(c.n_trainable()), rng);
        const auto loss = [&](const std::vector<double>& th) {
          return qt::qcbm_loss(c, th, *target, spec, qt::Sampling::exact());
        };
        const auto g = qt::qcbm_gradient(c, theta, *target, spec, qt::Sampling::exact());
        const double e = fd_rel_error(loss, g, theta);
        worst = std::max(worst, e);
        ++checks;
        out.require(e <= 1e-6, name + " " + spec.describe());
      }
    }
  }

  const auto style = qc::build_style_qgan(2);
  const auto phl = qc::build_xxz_phl(3);
  const auto rbf = KernelSpec::rbf({0.001, 1, 10});
  for (auto mode : {qt::GeneratorOutput::ZExpectation, qt::GeneratorOutput::ProbVector}) {
    const qt::QganModel model{style.encoder, style.generator, mode};
    const std::size_t dim = mode == qt::GeneratorOutput::ProbVector ? 8 : 3;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> zf(12), yf(5 * dim);
      for (double& v : zf) v = rng.normal();
      for (double& v : yf) v = rng.uniform(-1, 1);
      const auto zs = SampleSet::real(3, zf, qglm::sim::Provenance::Model);
      const auto ys = SampleSet::real(dim, yf, qglm::sim::Provenance::Target);
      const auto theta = random_theta(28, rng);
      const auto loss = [&](const std::vector<double>& th) {
        return qt::qgan_loss(model, th, zs, ys, rbf);
      };
      const double e = fd_rel_error(loss, qt::qgan_gradient(model, theta, zs, ys, rbf), theta);
      worst = std::max(worst, e);
      ++checks;
      out.require(e <= 1e-6, "style_qgan");
    }
  }
  const qt::QganModel model{phl.encoder, phl.generator, qt::GeneratorOutput::State};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> zf{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
    std::vector<qglm::sim::PureState> states;
    for (double a : zf) {
      states.push_back(qe::ground_state(qe::make_xxz(2, a, 0.25, qe::Boundary::Open)).state);
    }
    const auto zs = SampleSet::real(1, zf, qglm::sim::Provenance::Model);
    const auto ys = SampleSet::states(states, qglm::sim::Provenance::Target);
    const auto theta = random_theta(12, rng);
    const auto spec = KernelSpec::pure_overlap();
    const auto loss = [&](const std::vector<double>& th) {
      return qt::qgan_loss(model, th, zs, ys, spec);
    };
    const double e = fd_rel_error(loss, qt::qgan_gradient(model, theta, zs, ys, spec), theta);
    worst = std::max(worst, e);
    ++checks;
    out.require(e <= 1e-6, "xxz_phl");
  }
  out.detail << checks << " gradient checks, worst relative error " << fmt(worst);
}

// --- 2: unbiasedness --------------------------------------------------------

void criterion_unbiased(Outcome& out) {
  const DiscreteDistribution p({0.05, 0.2, 0.1, 0.15, 0.2, 0.1, 0.15, 0.05});
  const DiscreteDistribution q({0.15, 0.1, 0.1, 0.05, 0.1, 0.2, 0.1, 0.2});
  const RngStream root(202);
  for (const auto& spec : {KernelSpec::rbf({0.25, 4}), KernelSpec::linear()}) {
    const int reps = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
      RngStream s = root.substream(spec.describe(), static_cast<std::uint64_t>(r));
      const auto xs = qglm::sim::sample(p, 30, s);
      const auto ys = qglm::sim::sample(q, 30, s, qglm::sim::Provenance::Target);
      const double v = qglm::mmd::mmd2_u(xs, ys, spec);
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sum2 / reps - mean * mean) / (reps - 1));
    const double exact = qglm::mmd::mmd2_exact(p, q, spec);
    const double z = std::abs(mean - exact) / se;
    if (out.detail.tellp() > 0) out.detail << "; ";
    out.detail << spec.describe() << ": |mean-exact|/SE=" << fmt(z);
    out.require(z <= 3.0, spec.describe());
  }
}

// --- 3, 4, 6: Born machines on the discrete Gaussian -------------------------

void criterion_quantum_gaussian(Outcome& out) {
  const auto r = run_preset("gauss-quantum-N8");
  const double kl = r.median("kl");
  out.detail << "median KL " << fmt(kl) << " (<= 0.5)";
  out.require(kl <= 0.5, "median KL");
  out.require(training_helps(r), "median final loss below initial");
}

void criterion_sample_trend(Outcome& out) {
  const auto small = run_preset("gauss-rbf-N8-n100");
  const auto large = run_preset("gauss-rbf-N8-n1000");
  const double a = small.median("kl"), b = large.median("kl");
  out.detail << "median KL n=m=100: " << fmt(a) << ", n=m=1000: " << fmt(b);
  out.require(b < a, "KL decreases with samples");
  out.require(training_helps(small) && training_helps(large),
              "median final loss below initial");
}

void criterion_kernel_separation(Outcome& out) {
  const auto quantum = run_preset("gauss-quantum-N8");
  const auto classical = run_preset("gauss-rbf-N8-n100");
  const double q = quantum.median("mmd2_reference");
  const double c = classical.median("mmd2_reference");
  out.detail << "median exact MMD^2 (reference RBF) quantum " << fmt(q)
             << " vs classical " << fmt(c) << "; median gap quantum "
             << fmt(quantum.median("gap")) << " vs classical " << fmt(classical.median("gap"));
  out.require(q <= c, "quantum <= classical");
}

// --- 5: GHZ -----------------------------------------------------------------

void criterion_ghz(Outcome& out) {
  for (int n : {4, 6, 8, 10}) {
    const auto r = run_preset("ghz-quantum-N" + std::to_string(n));
    const double f = r.median("fidelity");
    const double need = n == 10 ? 0.95 : 0.99;
    if (out.detail.tellp() > 0) out.detail << ", ";
    out.detail << "N=" << n << ": " << fmt(f);
    out.require(f >= need, "N=" + std::to_string(n));
    out.require(training_helps(r), "median final loss below initial");
  }
}

// --- 7: 3-D Gaussian QGAN ---------------------------------------------------

void criterion_gauss3d(Outcome& out) {
  std::vector<double> medians;
  for (const char* name : {"gauss3d-m2", "gauss3d-m10", "gauss3d-m200"}) {
    const auto r = run_preset(name);
    medians.push_back(r.median("expected_mmd"));
    if (out.detail.tellp() > 0) out.detail << ", ";
    out.detail << name << ": " << fmt(medians.back());
    out.require(training_helps(r), std::string(name) + " final loss below initial");
  }
  out.require(medians[0] > medians[1] && medians[1] > medians[2], "strictly decreasing");
  out.require(medians[2] <= 0.02, "m=200 expected MMD <= 0.02");
}

// --- 8: XXZ Hamiltonian learning --------------------------------------------

void criterion_phl(Outcome& out) {
  const auto r = run_preset("xxz-phl");
  const double fid = r.median("min_fidelity");
  const double err = r.median("max_energy_error");
  double violations = 0.0;
  for (double v : r.metric("variational_violations")) violations += v;
  out.detail << "median min fidelity " << fmt(fid) << ", median max |energy error| "
             << fmt(err) << ", variational violations " << violations;
  out.require(fid >= 0.95, "min fidelity");
  out.require(err <= 0.2, "energy error");
  out.require(violations == 0.0, "variational principle");
  out.require(training_helps(r), "median final loss below initial");
}

// --- 9: bound calculators -----------------------------------------------------

void criterion_bounds(Outcome& out) {
  using namespace qglm::testing;
  namespace qb = qglm::bounds;
  double worst = 0.0;
  const auto check = [&](double got, ld want, const char* what) {
    const double rel = static_cast<double>(std::abs(ld(got) - want) / std::abs(want));
    worst = std::max(worst, rel);
    out.require(rel <= 1e-10, what);
  };
  for (const auto& in : bound_tuples()) {
    check(qb::bound_qcbm(in).total, oracle_qcbm(in), "qcbm");
    check(qb::bound_qgan(in).total, oracle_qgan(in), "qgan");
    check(qb::bound_hea(in).total, oracle_hea(in), "hea");
    check(qb::bound_qaoa(in).total, oracle_qaoa(in), "qaoa");
  }
  const double sizes[] = {10, 100, 1000, 10000};
  const double structure[] = {1, 2, 5, 12};
  int violations = 0;
  using Fn = qb::BoundReport (*)(const qb::BoundInput&);
  for (Fn f : {qb::bound_qcbm, qb::bound_qcbm_proof, qb::bound_qgan, qb::bound_hea,
               qb::bound_qaoa}) {
    for (double n : sizes) for (double m : sizes) for (double a : structure) for (double b : structure) {
      qb::BoundInput in;
      in.n = n; in.m = m; in.N_gt = a; in.N_ge = b;
      qb::BoundInput more_n = in, more_m = in;
      more_n.n *= 10;
      more_m.m *= 10;
      if (f(more_n).total > f(in).total || f(more_m).total > f(in).total) ++violations;
    }
  }
  for (double a : structure) for (double b : structure) for (double k : structure) for (double N : structure) {
    qb::BoundInput in;
    in.N_gt = a; in.N_ge = b; in.k = k; in.N = N;
    const double here = qb::bound_qgan(in).term("architecture");
    for (double qb::BoundInput::*field : {&qb::BoundInput::N_gt, &qb::BoundInput::N_ge,
                                          &qb::BoundInput::k, &qb::BoundInput::N}) {
      qb::BoundInput up = in;
      up.*field *= 2;
      if (qb::bound_qgan(up).term("architecture") < here) ++violations;
    }
  }
  out.detail << "worst oracle relative error " << fmt(worst) << ", monotonicity violations "
             << violations;
  out.require(violations == 0, "monotonicity");
}

// --- 10: eigensolver ------------------------------------------------------------

void criterion_eigen(Outcome& out) {
  RngStream rng(1010);
  double worst_res = 0.0, worst_orth = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 1 + rng.next_u64() % 64;
    qglm::sim::DenseMatrix h(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      h(r, r) = rng.normal();
      for (std::size_t c = r + 1; c < dim; ++c) {
        h(r, c) = {rng.normal(), rng.normal()};
        h(c, r) = std::conj(h(r, c));
      }
    }
    const auto e = qglm::sim::hermitian_eigensolve(h);
    for (std::size_t i = 0; i < dim; ++i) {
      double res = 0.0;
      for (std::size_t r = 0; r < dim; ++r) {
        qglm::sim::Complex hv = 0.0;
        for (std::size_t c = 0; c < dim; ++c) hv += h(r, c) * e.vectors(c, i);
        res += std::norm(hv - e.values[i] * e.vectors(r, i));
      }
      worst_res = std::max(worst_res, std::sqrt(res));
      for (std::size_t j = 0; j < dim; ++j) {
        qglm::sim::Complex ip = 0.0;
        for (std::size_t r = 0; r < dim; ++r) ip += std::conj(e.vectors(r, i)) * e.vectors(r, j);
        worst_orth = std::max(worst_orth, std::abs(ip - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  const double e0 = qe::ground_state(qe::make_xxz(2, 0.0, 0.25, qe::Boundary::Open)).energy;
  out.detail << "worst residual " << fmt(worst_res) << ", worst orthonormality "
             << fmt(worst_orth) << ", XXZ ground energy " << e0;
  out.require(worst_res <= 1e-8, "residual");
  out.require(worst_orth <= 1e-8, "orthonormality");
  out.require(std::abs(e0 + 2.0) <= 1e-10, "XXZ ground energy");
}

struct Criterion {
  const char* title;
  double budget_s;
  void (*body)(Outcome&);
};

const Criterion kCriteria[] = {
    {"gradient oracle suite", 60, criterion_gradients},
    {"MMD_U unbiasedness", 120, criterion_unbiased},
    {"QCBM quantum-kernel Gaussian KL", 600, criterion_quantum_gaussian},
    {"QCBM classical-kernel sample-size trend", 1200, criterion_sample_trend},
    {"GHZ approximation", 1800, criterion_ghz},
    {"kernel separation", 600, criterion_kernel_separation},
    {"3-D Gaussian QGAN", 1800, criterion_gauss3d},
    {"XXZ Hamiltonian learning", 900, criterion_phl},
    {"bound calculators", 10, criterion_bounds},
    {"eigensolver", 60, criterion_eigen},
};

bool run_one(int index) {
  const Criterion& c = kCriteria[index - 1];
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < c.budget_s, "runtime over " + fmt(c.budget_s) + " s");
  std::printf("criterion %2d %s: %s (%s; %.1f s)\n", index, c.title,
              out.pass ? "PASS" : "FAIL", out.detail.str().c_str(), secs);
  std::fflush(stdout);
  return out.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QGLM acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (int i = 1; i <= 10; ++i) {
    if (only == 0 || only == i) ok = run_one(i) && ok;
  }
  return ok ? 0 : 1;
}
