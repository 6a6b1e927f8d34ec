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

#include <map>

#include <doctest.h>

#include "fairmatch/audit.hpp"
#include "fairmatch/flowlp.hpp"
#include "fairmatch/stable.hpp"
#include "helpers.hpp"

using namespace fairmatch;
using namespace fairmatch::testing;

TEST_CASE("thompson_matching draws fair matchings with the right frequencies") {
  const Instance inst = load_fixture("appendix_a.json");
  std::map<std::vector<int>, int> counts;
  const int m = 5000;
  for (int i = 0; i < m; ++i) {
    const Matching match = thompson_matching(inst, 23, i);
    CHECK(match.is_bijection());
    ++counts[match.assignment];
  }
  // The two scenarios induce M1 = {1->2, 2->3, 3->1} (prob 9/10) and the
  // identity (prob 1/10).
  REQUIRE(counts.size() == 2);
  const int heavy = counts[{1, 2, 0}];
  CHECK(heavy > 4350);
  CHECK(heavy < 4650);
  CHECK(counts[{0, 1, 2}] == m - heavy);
}

TEST_CASE("mix_marginals interpolates between M* and the Thompson PDF") {
  const Instance inst = load_fixture("appendix_a_dominance.json");
  const FairnessCdf l = exact_fairness_cdf(inst);

  const auto [at0, u0] = mix_marginals(inst, l, Rat(0));
  const auto [mstar, ustar] = utility_max_matching(inst);
  CHECK(at0.p == DoublyStochastic::from_matching(mstar).p);
  CHECK(u0 == ustar);

  const auto [at1, u1] = mix_marginals(inst, l, Rat(1));
  CHECK(at1.p == cdf_to_pdf(l, inst).p);
  // The Thompson marginals never place individual 2 on resource 1.
  CHECK(at1.p[1][0] == 0);
  CHECK(u1 == 0);

  // Affine in phi: the midpoint utility is the average of the endpoints.
  const auto [mid, umid] = mix_marginals(inst, l, Rat(1, 2));
  CHECK(umid == (u0 + u1) / 2);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      CHECK(mid.p[x][y] == (at0.p[x][y] + at1.p[x][y]) / 2);
    }
  }
  CHECK(mid.is_valid());
}

TEST_CASE("the mix is phi-fair and the LP dominates it") {
  const Instance inst = load_fixture("appendix_a_dominance.json");
  const FairnessCdf l = exact_fairness_cdf(inst);
  for (int i = 0; i <= 4; ++i) {
    const Rat phi(i, 4);
    const auto [mix, mix_utility] = mix_marginals(inst, l, phi);
    const AuditReport report = fairness_report(mix, l, inst, phi);
    CHECK(report.fair);
    const FairLpResult lp = solve_fair_lp(inst, l, phi);
    CHECK(lp.utility >= mix_utility);
  }
}
