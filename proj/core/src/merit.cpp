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

#include "fairmatch/merit.hpp"

#include <algorithm>
#include <numeric>

#include "fairmatch/rng.hpp"

namespace fairmatch {

MeritSample sample_merits(const MeritDistribution& gamma, std::uint64_t seed,
                          std::uint64_t index) {
  SplitMix64 rng(seed, index);
  MeritSample out;

  if (const auto* mix = std::get_if<DiscreteMixture>(&gamma)) {
    const Rat u = rng.next_unit_rational();
    Rat cumulative = 0;
    std::size_t chosen = mix->scenarios.size() - 1;
    for (std::size_t s = 0; s < mix->scenarios.size(); ++s) {
      cumulative += mix->scenarios[s].prob;
      if (u < cumulative) {
        chosen = s;
        break;
      }
    }
    out.v = mix->scenarios[chosen].merits;
    out.scenario_index = chosen;
    return out;
  }

  const auto& ind = std::get<IndependentParametric>(gamma);
  out.v.reserve(ind.entries.size());
  for (const auto& row : ind.entries) {
    std::vector<Rat> sampled;
    sampled.reserve(row.size());
    for (const auto& d : row) {
      if (const auto* pt = std::get_if<PointDist>(&d)) {
        sampled.push_back(pt->value);
      } else if (const auto* un = std::get_if<UniformDist>(&d)) {
        // Drawn in double precision, held exactly afterwards; downstream use
        // is order-based only.
        const Rat u(rng.next_unit());
        sampled.push_back(un->lo + u * (un->hi - un->lo));
      } else {
        const auto& nd = std::get<NormalDist>(d);
        sampled.push_back(nd.mean + Rat(rng.next_normal()) * nd.std);
      }
    }
    out.v.push_back(std::move(sampled));
  }
  return out;
}

std::vector<std::pair<Rat, MeritSample>> enumerate_scenarios(
    const MeritDistribution& gamma) {
  if (const auto* mix = std::get_if<DiscreteMixture>(&gamma)) {
    std::vector<std::pair<Rat, MeritSample>> out;
    out.reserve(mix->scenarios.size());
    for (std::size_t s = 0; s < mix->scenarios.size(); ++s) {
      out.emplace_back(mix->scenarios[s].prob,
                       MeritSample{mix->scenarios[s].merits, s});
    }
    return out;
  }

  const auto& ind = std::get<IndependentParametric>(gamma);
  if (!ind.all_point()) {
    throw unsupported_distribution(
        "exact enumeration requires finite-support merits");
  }
  MeritSample sample;
  for (const auto& row : ind.entries) {
    std::vector<Rat> values;
    for (const auto& d : row) values.push_back(std::get<PointDist>(d).value);
    sample.v.push_back(std::move(values));
  }
  sample.scenario_index = 0;
  return {{Rat(1), std::move(sample)}};
}

ResourceRanking induced_resource_rankings(const MeritSample& v) {
  const int n_x = static_cast<int>(v.v.size());
  const int n_y = n_x == 0 ? 0 : static_cast<int>(v.v[0].size());
  ResourceRanking out;
  out.order.assign(n_y, {});
  out.rank.assign(n_y, std::vector<int>(n_x, 0));
  for (int y = 0; y < n_y; ++y) {
    std::vector<int> order(n_x);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return v.v[a][y] > v.v[b][y];  // ties keep ascending index
    });
    for (int pos = 0; pos < n_x; ++pos) out.rank[y][order[pos]] = pos + 1;
    out.order[y] = std::move(order);
  }
  return out;
}

}  // namespace fairmatch
