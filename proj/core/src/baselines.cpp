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

#include "fairmatch/baselines.hpp"

#include "fairmatch/flowlp.hpp"
#include "fairmatch/merit.hpp"
#include "fairmatch/stable.hpp"

namespace fairmatch {

Matching thompson_matching(const Instance& inst, std::uint64_t seed,
                           std::uint64_t index) {
  return fair_matching_for_sample(inst, sample_merits(inst.merits, seed, index));
}

std::pair<DoublyStochastic, Rat> mix_marginals(const Instance& inst,
                                               const FairnessCdf& l,
                                               const Rat& phi) {
  if (phi < 0 || phi > 1) throw validation_error("phi must be in [0, 1]");
  const auto [best, best_utility] = utility_max_matching(inst);
  const DoublyStochastic thompson = cdf_to_pdf(l, inst);

  const int n = inst.num_individuals();
  DoublyStochastic mixed;
  mixed.p.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      mixed.p[x][y] = phi * thompson.p[x][y];
    }
    mixed.p[x][best.assignment[x]] += 1 - phi;
  }
  Rat utility = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) utility += inst.utility[x][y] * mixed.p[x][y];
  }
  return {std::move(mixed), std::move(utility)};
}

}  // namespace fairmatch
