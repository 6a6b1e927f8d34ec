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

#include "fairmatch/gen.hpp"

#include <numeric>
#include <set>

#include "fairmatch/rng.hpp"

namespace fairmatch {

namespace {

void base_names(Instance& inst, int n) {
  for (int i = 0; i < n; ++i) {
    inst.individuals.push_back("x" + std::to_string(i + 1));
    inst.resources.push_back("y" + std::to_string(i + 1));
  }
  inst.real_individuals = n;
  inst.real_resources = n;
}

std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.next_below(i + 1)]);
  }
  return perm;
}

RatMatrix random_utility(int n, SplitMix64& rng) {
  RatMatrix mu(n, std::vector<Rat>(n));
  for (auto& row : mu) {
    for (auto& v : row) v = Rat(Int(rng.next_below(101)), Int(10));
  }
  return mu;
}

}  // namespace

Instance gen_mixture(int n, int scenario_count, std::uint64_t seed) {
  if (n < 1 || scenario_count < 1) {
    throw validation_error("gen_mixture requires n >= 1 and s >= 1");
  }
  SplitMix64 rng(seed, 0x6d69787475726531ULL);

  Instance inst;
  base_names(inst, n);
  for (int x = 0; x < n; ++x) inst.preferences.push_back(random_permutation(n, rng));
  inst.utility = random_utility(n, rng);

  DiscreteMixture mix;
  std::vector<std::uint64_t> weights(scenario_count);
  std::uint64_t weight_sum = 0;
  for (auto& w : weights) {
    w = 1 + rng.next_below(99);
    weight_sum += w;
  }
  for (int s = 0; s < scenario_count; ++s) {
    DiscreteMixture::Scenario scen;
    scen.prob = Rat(Int(weights[s]), Int(weight_sum));
    scen.merits.assign(n, std::vector<Rat>(n));
    for (int y = 0; y < n; ++y) {
      // Column-wise rejection sampling until tie-free, then a deterministic
      // index perturbation as the fallback.
      bool tie_free = false;
      for (int attempt = 0; attempt < 32 && !tie_free; ++attempt) {
        std::set<Rat> seen;
        tie_free = true;
        for (int x = 0; x < n; ++x) {
          scen.merits[x][y] = Rat(Int(rng.next_below(1000)), Int(10));
          if (!seen.insert(scen.merits[x][y]).second) tie_free = false;
        }
      }
      if (!tie_free) {
        for (int x = 0; x < n; ++x) {
          scen.merits[x][y] += Rat(Int(x), Int(10 * n));
        }
      }
    }
    mix.scenarios.push_back(std::move(scen));
  }
  inst.merits = std::move(mix);

  inst.rebuild_rank_index();
  inst.validate();
  return inst;
}

Instance gen_normal(int n, const Rat& mean_lo, const Rat& mean_hi,
                    const Rat& std, std::uint64_t seed) {
  if (n < 1) throw validation_error("gen_normal requires n >= 1");
  if (std <= 0) throw validation_error("gen_normal requires std > 0");
  if (mean_hi < mean_lo) throw validation_error("gen_normal requires mean_hi >= mean_lo");
  SplitMix64 rng(seed, 0x6e6f726d616c6731ULL);

  Instance inst;
  base_names(inst, n);
  for (int x = 0; x < n; ++x) inst.preferences.push_back(random_permutation(n, rng));
  inst.utility = random_utility(n, rng);

  IndependentParametric ind;
  ind.entries.assign(n, std::vector<PairDist>(n, PointDist{Rat(0)}));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // Means on a rating-style grid with two decimals.
      const Rat span = mean_hi - mean_lo;
      const Rat u = Rat(Int(rng.next_below(10001)), Int(10000));
      ind.entries[x][y] = NormalDist{mean_lo + u * span, std};
    }
  }
  inst.merits = std::move(ind);

  inst.rebuild_rank_index();
  inst.validate();
  return inst;
}

}  // namespace fairmatch
