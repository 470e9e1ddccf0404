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

#include "qglm/bounds/gap.hpp"

#include <algorithm>

#include "qglm/error.hpp"
#include "qglm/mmd/mmd.hpp"

namespace qglm::bounds {

nlohmann::json GapReport::to_json() const {
  return {{"expected_loss", expected_loss},
          {"reference_loss", reference_loss},
          {"reference", "run minimum"},
          {"gap", gap},
          {"holdout_n", holdout_n}};
}

GapReport empirical_gap(const train::TrainTrace& trace,
                        const circuits::ParamCircuit& circuit,
                        const train::QcbmTarget& target, const mmd::KernelSpec& spec,
                        std::size_t holdout_n, std::uint64_t seed) {
  if (holdout_n < 2) throw ArgumentError("holdout_n must be >= 2");
  const sim::PureState psi = circuits::bind(circuit, trace.final_theta);
  GapReport r;
  r.holdout_n = holdout_n;
  if (spec.is_pure_overlap()) {
    r.expected_loss = train::qcbm_exact_loss(psi, target, spec);
  } else {
    const sim::RngStream root(seed);
    sim::RngStream ms = root.substream("gap-model");
    sim::RngStream ts = root.substream("gap-target");
    const auto hx = sim::sample_counts(sim::born_distribution(psi), holdout_n, ms);
    const auto hy = sim::sample_counts(target.dist(), holdout_n, ts);
    r.expected_loss = mmd::mmd2_u_counts(hx, hy, spec.one_hot_offset());
  }
  const auto it = trace.metrics.find("min_loss_exact");
  r.reference_loss = it != trace.metrics.end() ? it->second : trace.min_loss_exact();
  r.gap = r.expected_loss - r.reference_loss;
  return r;
}

GapReport empirical_gap(const train::TrainTrace& trace, const train::QganModel& model,
                        const train::PriorSampler& prior,
                        const TargetSampler& target_sampler,
                        const mmd::KernelSpec& spec, std::size_t holdout_n,
                        std::uint64_t seed) {
  if (holdout_n < 2) throw ArgumentError("holdout_n must be >= 2");
  const sim::RngStream root(seed);
  sim::RngStream zs_stream = root.substream("gap-noise");
  sim::RngStream ys_stream = root.substream("gap-target");
  std::vector<std::vector<double>> rows(holdout_n);
  for (auto& r : rows) r = prior(zs_stream);
  const auto zs = sim::SampleSet::real_rows(rows, sim::Provenance::Model);
  const auto ys = target_sampler(ys_stream, holdout_n);
  GapReport r;
  r.holdout_n = holdout_n;
  r.expected_loss = train::qgan_loss(model, trace.final_theta, zs, ys, spec);
  r.reference_loss = trace.min_loss_empirical();
  if (trace.metrics.count("final_loss_empirical")) {
    r.reference_loss = std::min(r.reference_loss, trace.metrics.at("final_loss_empirical"));
  }
  r.gap = r.expected_loss - r.reference_loss;
  return r;
}

}  // namespace qglm::bounds
