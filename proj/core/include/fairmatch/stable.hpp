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

#ifndef FAIRMATCH_STABLE_HPP_
#define FAIRMATCH_STABLE_HPP_

#include "fairmatch/merit.hpp"
#include "fairmatch/model.hpp"

namespace fairmatch {

/// Individual-proposing deferred acceptance. Returns the individual-optimal
/// stable matching for (r_x, r'_y). Proposal order is ascending individual
/// index (irrelevant to the result, fixed for reproducibility). O(n^2).
Matching gale_shapley(const Instance& inst, const ResourceRanking& rranks);

/// True iff no pair (x, y) blocks: r_x(y) < r_x(M(x)) and
/// r'_y(x) < r'_y(M^-1(y)).
bool is_stable(const Matching& m, const Instance& inst,
               const ResourceRanking& rranks);

/// Merit-side fairness: whenever y goes to someone with strictly less merit
/// than x, x must hold a resource she prefers to y. Equal merit does not
/// count as "less".
bool is_fair_matching(const Matching& m, const MeritSample& v,
                      const Instance& inst);

/// induced_resource_rankings followed by gale_shapley.
Matching fair_matching_for_sample(const Instance& inst, const MeritSample& v);

}  // namespace fairmatch

#endif  // FAIRMATCH_STABLE_HPP_
