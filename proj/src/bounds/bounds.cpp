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

#include "qglm/bounds/bounds.hpp"

#include <cmath>
#include <numbers>

#include "qglm/error.hpp"

namespace qglm::bounds {
namespace {

void check_common(const BoundInput& in) {
  if (!(in.delta > 0.0 && in.delta < 1.0)) throw ArgumentError("delta must lie in (0, 1)");
  if (!(in.n >= 1.0) || !(in.m >= 1.0)) throw ArgumentError("n and m must be >= 1");
  if (!(in.C1 > 0.0) || !(in.C2 > 0.0) || !(in.C3 > 0.0)) {
    throw ArgumentError("C1, C2, C3 must be positive");
  }
}

void check_qgan(const BoundInput& in) {
  check_common(in);
  if (!(in.n >= 2.0)) throw ArgumentError("n must be >= 2");
  for (double c : {in.d, in.k, in.N, in.N_gt, in.N_ge, in.L, in.L_E}) {
    if (!(c >= 1.0)) throw ArgumentError("structural counts must be >= 1");
  }
}

BoundReport finish(std::string formula, std::vector<BoundTerm> terms) {
  BoundReport r{std::move(formula), std::move(terms), 0.0, {}};
  for (const auto& t : r.terms) r.total += t.value;
  return r;
}

double statistical(const BoundInput& in) {
  return 8.0 * std::sqrt(8.0 * in.C2 * in.C2 * (in.n + in.m) / (in.n * in.m) *
                         std::log(1.0 / in.delta));
}

double c4(const BoundInput& in) {
  return in.N * std::log(441.0 * in.d * in.C3 * in.C3 * in.n * in.N_ge * in.N_gt) + 1.0;
}

double generic_architecture(const BoundInput& in) {
  return 144.0 * std::pow(in.d, in.k) * std::sqrt(in.N_gt + in.N_ge) / (in.n - 1.0) * c4(in);
}

std::vector<BoundTerm> qgan_terms(const BoundInput& in, double architecture) {
  return {{"statistical", statistical(in)},
          {"sample", 48.0 / (in.n - 1.0)},
          {"architecture", architecture}};
}

}  // namespace

double BoundReport::term(const std::string& label) const {
  for (const auto& t : terms) {
    if (t.label == label) return t.value;
  }
  throw ArgumentError("bound report has no term '" + label + "'");
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json t = nlohmann::json::object();
  for (const auto& x : terms) t[x.label] = x.value;
  return {{"formula", formula}, {"terms", t}, {"total", total}, {"extras", extras}};
}

BoundReport bound_qcbm(const BoundInput& in) {
  check_common(in);
  const double v = in.C1 * std::sqrt(8.0 / in.n + 8.0 / in.m) * std::sqrt(in.C2) *
                   (2.0 + std::sqrt(std::log(1.0 / in.delta)));
  return finish("qcbm", {{"statistical", v}});
}

BoundReport bound_qcbm_proof(const BoundInput& in) {
  check_common(in);
  const double v = 4.0 * in.C1 * (2.0 / in.n + std::sqrt(2.0 / in.m)) * std::sqrt(in.C2) *
                   (2.0 + std::sqrt(std::log(2.0 / in.delta)));
  return finish("qcbm-proof", {{"statistical", v}});
}

BoundReport bound_qgan(const BoundInput& in) {
  check_qgan(in);
  BoundReport r = finish("qgan", qgan_terms(in, generic_architecture(in)));
  r.extras["C4"] = c4(in);
  return r;
}

BoundReport bound_hea(const BoundInput& in) {
  check_qgan(in);
  const double arch =
      576.0 * std::sqrt(in.N * (in.L_E + 3.0 * in.L)) / (in.n - 1.0) *
      (in.N * std::log(1323.0 * in.d * in.C3 * in.C3 * in.n * in.N * in.N * in.L_E * in.L) +
       1.0);
  BoundReport r = finish("hea", qgan_terms(in, arch));
  BoundInput g = in;
  g.k = 2;
  g.d = 2;
  g.N_ge = in.L_E * in.N;
  g.N_gt = 3.0 * in.L * in.N;
  r.extras["generic_architecture"] = generic_architecture(g);
  return r;
}

BoundReport bound_qaoa(const BoundInput& in) {
  check_qgan(in);
  const double arch =
      144.0 * std::pow(2.0, in.N) * std::sqrt((in.N + 1.0) * (in.L + in.L_E)) /
      (in.n - 1.0) *
      (in.N * std::log(441.0 * in.d * in.C3 * in.C3 * in.n * in.L * in.L_E * in.N *
                       (in.N + 1.0)) +
       1.0);
  BoundReport r = finish("qaoa", qgan_terms(in, arch));
  BoundInput g = in;
  g.k = in.N;
  g.N_gt = in.L * (in.N + 1.0);
  g.N_ge = in.L_E * in.N;
  r.extras["generic_architecture"] = generic_architecture(g);
  return r;
}

double log_covering_circuit(double N_gt, double k, double d, double epsilon,
                            double pi_norm) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  return std::pow(d, 2.0 * k) * N_gt * std::log(7.0 * N_gt * pi_norm / epsilon);
}

double log_covering_encoder(double N_ge, double k, double d, double epsilon) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be positive");
  return std::pow(d, 2.0 * k) * N_ge * std::log(7.0 * N_ge / epsilon);
}

double rbf_lipschitz(double gamma) {
  if (!(gamma > 0.0)) throw ArgumentError("gamma must be positive");
  return std::sqrt(2.0 * gamma / std::numbers::e);
}

}  // namespace qglm::bounds
