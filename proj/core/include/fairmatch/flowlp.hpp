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

#ifndef FAIRMATCH_FLOWLP_HPP_
#define FAIRMATCH_FLOWLP_HPP_

#include <stdexcept>
#include <utility>
#include <vector>

#include "fairmatch/estimate.hpp"
#include "fairmatch/model.hpp"

namespace fairmatch {

class infeasible_network : public std::runtime_error {
 public:
  explicit infeasible_network(const std::string& what)
      : std::runtime_error(what) {}
};

/// Circulation encoding of the fairness LP. Node u_{x,k} carries the supply
/// phi * (l_{x,k} - l_{x,k-1}) (plus 1-phi at k = n); resource nodes demand 1
/// each. Everything is scaled to integers: capacities by the common
/// denominator D, costs by C, and costs are negated so min-cost == max-weight.
struct CirculationNetwork {
  struct Arc {
    int tail = 0;
    int head = 0;
    Int capacity;
    Int cost;
    // LP bookkeeping: which p_{x,y} this arc contributes to (-1 if none).
    int x = -1;
    int y = -1;
  };

  int n = 0;           // individuals == resources after padding
  int num_nodes = 0;   // n*n supply + n demand + source + sink
  int source = 0;
  int sink = 0;
  bool compact = false;
  std::vector<Arc> arcs;
  Int capacity_denominator;  // D
  Int cost_denominator;      // C
  Int total_supply;          // n * D

  int supply_node(int x, int k) const { return x * n + (k - 1); }  // k 1-based
  int demand_node(int y) const { return n * n + y; }
};

struct FlowSolution {
  std::vector<Int> flow;       // per arc, in network order
  std::vector<Int> potential;  // per node
  Int scaled_cost;             // sum of arc cost * flow
  Rat objective;               // unscaled max-weight value
};

/// Builds the direct encoding (arcs (u_{x,k}, u'_y) for r_x(y) <= k), or the
/// O(n^2)-arc chain encoding when `compact` is set (supply cascades from
/// u_{x,k} down to u_{x,k-1}).
CirculationNetwork build_circulation(const Instance& inst, const FairnessCdf& l,
                                     const Rat& phi, bool compact = false);

/// Successive shortest augmenting paths with node potentials; the initial
/// potentials come from one Bellman-Ford pass (costs are negative after
/// negation). Exact big-integer arithmetic throughout. Throws
/// infeasible_network when the supply cannot be routed.
FlowSolution solve_min_cost_flow(const CirculationNetwork& net);

/// True iff every residual arc has nonnegative reduced cost under the
/// solution's potentials (certifies optimality).
bool verify_optimality(const CirculationNetwork& net, const FlowSolution& sol);

struct FairLpResult {
  DoublyStochastic marginals;
  Rat utility;
  CirculationNetwork network;
  FlowSolution flow;
};

/// Solves OPT-LP_Fair exactly via the circulation reduction.
FairLpResult solve_fair_lp(const Instance& inst, const FairnessCdf& l,
                           const Rat& phi, bool compact = false);

/// Maximum-mu-weight perfect matching (the phi = 0 LP has an integral
/// optimum on the assignment polytope).
std::pair<Matching, Rat> utility_max_matching(const Instance& inst);

}  // namespace fairmatch

#endif  // FAIRMATCH_FLOWLP_HPP_
