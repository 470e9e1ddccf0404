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

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace qglm::bounds {

struct BoundInput {
  double n = 100;
  double m = 100;
  double delta = 0.05;
  double C1 = 1.0;  // sup of the loss
  double C2 = 1.0;  // sup_x k(x, x)
  double C3 = 1.0;  // kernel Lipschitz constant
  double d = 2;     // qudit dimension
  double k = 2;     // largest gate locality
  double N = 2;     // qudit count
  double N_gt = 1;  // trainable gates
  double N_ge = 1;  // encoding gates
  double L = 1;     // trainable layers
  double L_E = 1;   // encoding layers
};

struct BoundTerm {
  std::string label;
  double value = 0.0;
};

struct BoundReport {
  std::string formula;
  std::vector<BoundTerm> terms;
  double total = 0.0;
  /// Auxiliary quantities (e.g. C4, the generic architecture term).
  std::map<std::string, double> extras;

  double term(const std::string& label) const;
  nlohmann::json to_json() const;
};

/// C1 sqrt(8/n + 8/m) sqrt(C2) (2 + sqrt(ln(1/delta))). Formula id "qcbm".
BoundReport bound_qcbm(const BoundInput& in);

/// 4 C1 (2/n + sqrt(2/m)) sqrt(C2) (2 + sqrt(ln(2/delta))).
/// Formula id "qcbm-proof".
BoundReport bound_qcbm_proof(const BoundInput& in);

/// Three summands:
///   statistical   8 sqrt(8 C2^2 (n+m)/(nm) ln(1/delta))
///   sample        48 / (n-1)
///   architecture  144 d^k sqrt(N_gt + N_ge) / (n-1) * C4,
///                 C4 = N ln(441 d C3^2 n N_ge N_gt) + 1.
/// Formula id "qgan".
BoundReport bound_qgan(const BoundInput& in);

/// Hardware-efficient form: architecture term
/// 576 sqrt(N (L_E + 3L)) / (n-1) * (N ln(1323 d C3^2 n N^2 L_E L) + 1).
/// Formula id "hea". Extras: "generic_architecture" from bound_qgan with
/// k = 2, d = 2, N_ge = L_E N, N_gt = 3 L N.
BoundReport bound_hea(const BoundInput& in);

/// QAOA form: architecture term
/// 144 2^N sqrt((N+1)(L+L_E)) / (n-1) * (N ln(441 d C3^2 n L L_E N (N+1)) + 1).
/// Formula id "qaoa". Extras: "generic_architecture" from bound_qgan with
/// k = N, N_gt = L (N+1), N_ge = L_E N (never larger than the form above).
BoundReport bound_qaoa(const BoundInput& in);

/// Log of the covering number of the trainable-circuit class:
/// d^{2k} N_gt ln(7 N_gt pi_norm / eps).
double log_covering_circuit(double N_gt, double k, double d, double epsilon,
                            double pi_norm);

/// Log of the covering number of the encoder class: d^{2k} N_ge ln(7 N_ge / eps).
double log_covering_encoder(double N_ge, double k, double d, double epsilon);

/// Lipschitz constant sqrt(2 gamma / e) of exp(-gamma r^2) in r.
double rbf_lipschitz(double gamma);

}  // namespace qglm::bounds
