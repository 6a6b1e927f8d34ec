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

#include "fairmatch/flowlp.hpp"

#include <doctest.h>

#include "fairmatch/gen.hpp"
#include "helpers.hpp"

using namespace fairmatch;
using namespace fairmatch::testing;

namespace {

// Checks the LP (5) constraints exactly against phi * l.
void check_lp_feasible(const DoublyStochastic& p, const Instance& inst,
                       const FairnessCdf& l, const Rat& phi) {
  REQUIRE(p.is_valid());
  const int n = inst.num_individuals();
  for (int x = 0; x < n; ++x) {
    Rat cum = 0;
    for (int k = 1; k <= n; ++k) {
      cum += p.p[x][inst.resource_at_rank(x, k)];
      CHECK(cum >= phi * l.at(x, k));
    }
  }
}

}  // namespace

TEST_CASE("appendix network has 18 direct resource arcs and scaled supplies") {
  const Instance inst = load_fixture("appendix_a.json");
  const FairnessCdf l = exact_fairness_cdf(inst);
  const CirculationNetwork net = build_circulation(inst, l, Rat(1));

  int resource_arcs = 0;
  for (const auto& a : net.arcs) {
    if (a.x >= 0) ++resource_arcs;
  }
  CHECK(resource_arcs == 18);  // sum over x of 1 + 2 + 3
  CHECK(net.capacity_denominator == 10);
  CHECK(net.total_supply == 30);

  // Supplies are the scaled CDF jumps; read them off the source arcs.
  RatMatrix jumps(3, std::vector<Rat>(3));
  for (const auto& a : net.arcs) {
    if (a.tail != net.source) continue;
    const int x = a.head / 3;
    const int k = a.head % 3;  // k-1
    jumps[x][k] = Rat(a.capacity, net.capacity_denominator);
  }
  const RatMatrix expected = {{Rat(1, 10), Rat(0), Rat(9, 10)},
                              {Rat(0), Rat(9, 10), Rat(1, 10)},
                              {Rat(1, 10), Rat(9, 10), Rat(0)}};
  CHECK(jumps == expected);
}

TEST_CASE("phi = 0 concentrates all supply at the rank-n nodes") {
  const Instance inst = load_fixture("appendix_a.json");
  const FairnessCdf l = exact_fairness_cdf(inst);
  const CirculationNetwork net = build_circulation(inst, l, Rat(0));
  for (const auto& a : net.arcs) {
    if (a.tail != net.source) continue;
    const int k = a.head % 3 + 1;
    if (k < 3) CHECK(a.capacity == 0);
    if (k == 3) CHECK(a.capacity == net.capacity_denominator);
  }
}

TEST_CASE("solver routes a single-path network and certifies it") {
  CirculationNetwork net;
  net.num_nodes = 4;
  net.source = 0;
  net.sink = 3;
  net.capacity_denominator = 1;
  net.cost_denominator = 1;
  net.total_supply = 1;
  net.arcs.push_back({0, 1, Int(1), Int(0), -1, -1});
  net.arcs.push_back({1, 2, Int(1), Int(-2), -1, -1});  // the cheap arc
  net.arcs.push_back({1, 2, Int(1), Int(0), -1, -1});   // the dear arc
  net.arcs.push_back({2, 3, Int(1), Int(0), -1, -1});

  const FlowSolution sol = solve_min_cost_flow(net);
  CHECK(sol.flow[1] == 1);
  CHECK(sol.flow[2] == 0);
  CHECK(sol.scaled_cost == -2);
  CHECK(verify_optimality(net, sol));

  // Re-routing the unit over the dear arc is feasible but not optimal; the
  // certificate must reject it.
  FlowSolution bad = sol;
  bad.flow[1] = 0;
  bad.flow[2] = 1;
  bad.scaled_cost = 0;
  CHECK_FALSE(verify_optimality(net, bad));

  net.arcs[0].capacity = 0;
  CHECK_THROWS_AS(solve_min_cost_flow(net), infeasible_network);
}

TEST_CASE("appendix instance with all-ones utility has objective 3") {
  Instance inst = load_fixture("appendix_a.json");
  for (auto& row : inst.utility) {
    for (auto& mu : row) mu = 1;
  }
  const FairnessCdf l = exact_fairness_cdf(inst);
  const FairLpResult lp = solve_fair_lp(inst, l, Rat(1));
  CHECK(lp.utility == 3);
}

TEST_CASE("dominance fixture solves to 9/10 at phi = 1") {
  const Instance inst = load_fixture("appendix_a_dominance.json");
  const FairnessCdf l = exact_fairness_cdf(inst);
  const FairLpResult lp = solve_fair_lp(inst, l, Rat(1));
  CHECK(lp.utility == Rat(9, 10));
  // The optimum is 0.9 * (the swap of individuals 1, 2) + 0.1 * identity.
  const RatMatrix expected = {{Rat(1, 10), Rat(9, 10), Rat(0)},
                              {Rat(9, 10), Rat(1, 10), Rat(0)},
                              {Rat(0), Rat(0), Rat(1)}};
  CHECK(lp.marginals.p == expected);
  CHECK(verify_optimality(lp.network, lp.flow));
  check_lp_feasible(lp.marginals, inst, l, Rat(1));
}

TEST_CASE("all-zero utility accepts any feasible point with utility 0") {
  Instance inst = load_fixture("appendix_a.json");
  for (auto& row : inst.utility) {
    for (auto& mu : row) mu = 0;
  }
  const FairnessCdf l = exact_fairness_cdf(inst);
  const FairLpResult lp = solve_fair_lp(inst, l, Rat(1, 2));
  CHECK(lp.utility == 0);
  check_lp_feasible(lp.marginals, inst, l, Rat(1, 2));
}

TEST_CASE("compact and direct encodings agree") {
  for (int trial = 0; trial < 8; ++trial) {
    const Instance inst = gen_mixture(3 + trial % 4, 2, 3100 + trial);
    const FairnessCdf l = exact_fairness_cdf(inst);
    for (const Rat phi : {Rat(0), Rat(1, 2), Rat(1)}) {
      const FairLpResult direct = solve_fair_lp(inst, l, phi, false);
      const FairLpResult compact = solve_fair_lp(inst, l, phi, true);
      CHECK(direct.utility == compact.utility);
      CHECK(verify_optimality(direct.network, direct.flow));
      CHECK(verify_optimality(compact.network, compact.flow));
      check_lp_feasible(compact.marginals, inst, l, phi);
    }
  }
}

TEST_CASE("phi = 0 matches the best deterministic matching") {
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = gen_mixture(2 + trial % 4, 1, 5200 + trial);
    const FairnessCdf l = exact_fairness_cdf(inst);
    const FairLpResult lp = solve_fair_lp(inst, l, Rat(0));
    const auto [matching, best] = utility_max_matching(inst);
    CHECK(matching.is_bijection());
    CHECK(lp.utility == best);
    CHECK(best == brute_force_max_utility(inst));
  }
}

TEST_CASE("utility_max_matching on the identity utility") {
  Instance inst = load_fixture("appendix_a.json");
  const auto [matching, utility] = utility_max_matching(inst);
  CHECK(matching.assignment == std::vector<int>{0, 1, 2});
  CHECK(utility == 3);
}
