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

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace qglm::sim {

/// Seeded random stream. Child streams are derived from the parent's key
/// and a (label, index) pair, never from the parent's draw position, so a
/// child is the same no matter how many values the parent has produced or
/// in which order sibling streams are consumed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  RngStream substream(std::string_view label, std::uint64_t index = 0) const;

  std::uint64_t key() const noexcept { return key_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (platform independent, unlike
  /// std::normal_distribution).
  double normal();

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace qglm::sim
