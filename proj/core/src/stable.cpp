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

#include "fairmatch/stable.hpp"

#include <deque>

namespace fairmatch {

Matching gale_shapley(const Instance& inst, const ResourceRanking& rranks) {
  const int n = inst.num_individuals();
  std::vector<int> next_proposal(n, 0);  // index into preference list
  std::vector<int> engaged_to(n, -1);    // resource -> individual
  std::vector<int> matched(n, -1);       // individual -> resource
  std::deque<int> free;
  for (int x = 0; x < n; ++x) free.push_back(x);

  while (!free.empty()) {
    const int x = free.front();
    free.pop_front();
    const int y = inst.preferences[x][next_proposal[x]++];
    const int holder = engaged_to[y];
    if (holder == -1) {
      engaged_to[y] = x;
      matched[x] = y;
    } else if (rranks.rank_of(y, x) < rranks.rank_of(y, holder)) {
      engaged_to[y] = x;
      matched[x] = y;
      matched[holder] = -1;
      free.push_back(holder);
    } else {
      free.push_back(x);
    }
  }
  return Matching{std::move(matched)};
}

bool is_stable(const Matching& m, const Instance& inst,
               const ResourceRanking& rranks) {
  const int n = m.size();
  const std::vector<int> holder = m.inverse();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (inst.rank_of(x, y) < inst.rank_of(x, m.assignment[x]) &&
          rranks.rank_of(y, x) < rranks.rank_of(y, holder[y])) {
        return false;
      }
    }
  }
  return true;
}

bool is_fair_matching(const Matching& m, const MeritSample& v,
                      const Instance& inst) {
  const int n = m.size();
  const std::vector<int> holder = m.inverse();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      // Strict comparison: equal merit is not "less".
      if (v.v[holder[y]][y] < v.v[x][y] &&
          inst.rank_of(x, y) <= inst.rank_of(x, m.assignment[x])) {
        return false;
      }
    }
  }
  return true;
}

Matching fair_matching_for_sample(const Instance& inst, const MeritSample& v) {
  return gale_shapley(inst, induced_resource_rankings(v));
}

}  // namespace fairmatch
