// Copyright 2026 The fairmatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRMATCH_MERIT_HPP_
#define FAIRMATCH_MERIT_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fairmatch/model.hpp"

namespace fairmatch {

struct MeritSample {
  RatMatrix v;  // v[x][y]
  std::optional<std::size_t> scenario_index;  // set for mixture draws
};

/// Per resource y, individuals listed best-to-worst by merit (ties broken by
/// ascending individual index), plus the inverse rank lookup.
struct ResourceRanking {
  std::vector<std::vector<int>> order;  // order[y][pos] = individual
  std::vector<std::vector<int>> rank;   // rank[y][x] in 1..n

  int rank_of(int y, int x) const { return rank[y][x]; }
};

/// Pure function of (gamma, seed, index); bit-identical on repeated calls.
/// Continuous entries are drawn in double precision, then held exactly.
MeritSample sample_merits(const MeritDistribution& gamma, std::uint64_t seed,
                          std::uint64_t index);

/// Full finite support with exact probabilities. Throws
/// unsupported_distribution when gamma has any non-point continuous entry.
std::vector<std::pair<Rat, MeritSample>> enumerate_scenarios(
    const MeritDistribution& gamma);

/// Sorts each column by strictly decreasing merit; exact ties break toward
/// the lower individual index.
ResourceRanking induced_resource_rankings(const MeritSample& v);

}  // namespace fairmatch

#endif  // FAIRMATCH_MERIT_HPP_
