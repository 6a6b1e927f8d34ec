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

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace fairmatch {

namespace {

Int lcm(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Core builder on an explicit supply matrix: supplies[x][k-1] is the
// probability mass that must reach a resource x ranks k-th or better.
CirculationNetwork build_network(const Instance& inst, const RatMatrix& supplies,
                                 bool compact) {
  const int n = inst.num_individuals();
  CirculationNetwork net;
  net.n = n;
  net.compact = compact;
  net.num_nodes = n * n + n + 2;
  net.source = n * n + n;
  net.sink = n * n + n + 1;

  // Scale capacities by the common denominator of all supplies (the unit
  // resource demand has denominator 1).
  Int d = 1;
  for (const auto& row : supplies) {
    for (const auto& s : row) d = lcm(d, denominator(s));
  }
  net.capacity_denominator = d;
  net.total_supply = Int(n) * d;

  // Scale costs by the common denominator of mu; negate so that the
  // minimum-cost flow maximizes utility.
  Int c = 1;
  for (const auto& row : inst.utility) {
    for (const auto& mu : row) c = lcm(c, denominator(mu));
  }
  net.cost_denominator = c;
  auto scaled_cost = [&](int x, int y) -> Int {
    const Rat scaled = inst.utility[x][y] * Rat(c);
    return -numerator(scaled);
  };

  auto scaled_supply = [&](int x, int k) -> Int {
    const Rat scaled = supplies[x][k - 1] * Rat(d);
    return numerator(scaled);
  };

  for (int x = 0; x < n; ++x) {
    for (int k = 1; k <= n; ++k) {
      net.arcs.push_back({net.source, net.supply_node(x, k), scaled_supply(x, k),
                          Int(0), -1, -1});
    }
  }
  if (!compact) {
    // Direct encoding: arc (u_{x,k}, u'_y) iff r_x(y) <= k.
    for (int x = 0; x < n; ++x) {
      for (int k = 1; k <= n; ++k) {
        const Int cap = scaled_supply(x, k);
        for (int i = 1; i <= k; ++i) {
          const int y = inst.resource_at_rank(x, i);
          net.arcs.push_back({net.supply_node(x, k), net.demand_node(y), cap,
                              scaled_cost(x, y), x, y});
        }
      }
    }
  } else {
    // Chain encoding: supply at u_{x,k} either buys x's rank-k resource or
    // cascades down to u_{x,k-1}. Capacities are the cumulative supply from
    // above, so zero-capacity prefixes prune themselves.
    for (int x = 0; x < n; ++x) {
      Int cumulative = 0;
      std::vector<Int> cum_from(n + 2, Int(0));
      for (int k = n; k >= 1; --k) {
        cumulative += scaled_supply(x, k);
        cum_from[k] = cumulative;
      }
      for (int k = 1; k <= n; ++k) {
        const int y = inst.resource_at_rank(x, k);
        net.arcs.push_back({net.supply_node(x, k), net.demand_node(y), cum_from[k],
                            scaled_cost(x, y), x, y});
        if (k > 1) {
          net.arcs.push_back({net.supply_node(x, k), net.supply_node(x, k - 1),
                              cum_from[k], Int(0), -1, -1});
        }
      }
    }
  }
  for (int y = 0; y < n; ++y) {
    net.arcs.push_back({net.demand_node(y), net.sink, d, Int(0), -1, -1});
  }
  return net;
}

// Adjacency-list residual graph over paired arcs (i ^ 1 is the reverse).
struct Residual {
  std::vector<int> head;
  std::vector<Int> cap;
  std::vector<Int> cost;
  std::vector<std::vector<int>> out;

  explicit Residual(const CirculationNetwork& net) : out(net.num_nodes) {
    head.reserve(net.arcs.size() * 2);
    for (const auto& a : net.arcs) {
      out[a.tail].push_back(static_cast<int>(head.size()));
      head.push_back(a.head);
      cap.push_back(a.capacity);
      cost.push_back(a.cost);
      out[a.head].push_back(static_cast<int>(head.size()));
      head.push_back(a.tail);
      cap.push_back(Int(0));
      cost.push_back(-a.cost);
    }
  }
};

}  // namespace

CirculationNetwork build_circulation(const Instance& inst, const FairnessCdf& l,
                                     const Rat& phi, bool compact) {
  if (phi < 0 || phi > 1) throw validation_error("phi must be in [0, 1]");
  l.validate(inst);
  const int n = inst.num_individuals();
  RatMatrix supplies(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    for (int k = 1; k <= n; ++k) {
      supplies[x][k - 1] = phi * (l.at(x, k) - l.at(x, k - 1));
    }
    supplies[x][n - 1] += 1 - phi;
  }
  return build_network(inst, supplies, compact);
}

FlowSolution solve_min_cost_flow(const CirculationNetwork& net) {
  const int nodes = net.num_nodes;
  Residual g(net);

  std::vector<Int> pi(nodes, Int(0));
  std::vector<char> has_dist(nodes, 0);
  std::vector<Int> dist(nodes, Int(0));

  // Initial potentials: one Bellman-Ford pass over positive-capacity arcs
  // (middle arcs carry negated costs, so the graph has negative arcs but, by
  // construction, no cycles at all).
  {
    has_dist.assign(nodes, 0);
    has_dist[net.source] = 1;
    dist[net.source] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < g.head.size(); i += 2) {
        if (g.cap[i] == 0) continue;
        const int u = g.head[i ^ 1];
        const int v = g.head[i];
        if (!has_dist[u]) continue;
        const Int candidate = dist[u] + g.cost[i];
        if (!has_dist[v] || candidate < dist[v]) {
          has_dist[v] = 1;
          dist[v] = candidate;
          changed = true;
        }
      }
    }
    for (int v = 0; v < nodes; ++v) {
      if (has_dist[v]) pi[v] = dist[v];
    }
  }

  Int total_flow = 0;
  std::vector<int> parent_arc(nodes, -1);
  using QueueEntry = std::pair<Int, int>;

  while (true) {
    // Dijkstra on reduced costs, run to completion so the potential update
    // below keeps every residual reduced cost nonnegative.
    has_dist.assign(nodes, 0);
    std::vector<char> settled(nodes, 0);
    parent_arc.assign(nodes, -1);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    dist[net.source] = 0;
    has_dist[net.source] = 1;
    queue.emplace(Int(0), net.source);
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (settled[u]) continue;
      settled[u] = 1;
      for (int i : g.out[u]) {
        if (g.cap[i] == 0) continue;
        const int v = g.head[i];
        const Int candidate = d + g.cost[i] + pi[u] - pi[v];
        if (!has_dist[v] || candidate < dist[v]) {
          has_dist[v] = 1;
          dist[v] = candidate;
          parent_arc[v] = i;
          queue.emplace(candidate, v);
        }
      }
    }
    if (!has_dist[net.sink]) break;

    const Int d_sink = dist[net.sink];
    for (int v = 0; v < nodes; ++v) {
      pi[v] += has_dist[v] ? std::min(dist[v], d_sink) : d_sink;
    }

    Int bottleneck;
    bool first = true;
    for (int v = net.sink; v != net.source; v = g.head[parent_arc[v] ^ 1]) {
      const Int& residual = g.cap[parent_arc[v]];
      if (first || residual < bottleneck) bottleneck = residual;
      first = false;
    }
    for (int v = net.sink; v != net.source; v = g.head[parent_arc[v] ^ 1]) {
      g.cap[parent_arc[v]] -= bottleneck;
      g.cap[parent_arc[v] ^ 1] += bottleneck;
    }
    total_flow += bottleneck;
  }

  if (total_flow != net.total_supply) {
    throw infeasible_network("circulation cannot route all supply (routed " +
                             total_flow.str() + " of " + net.total_supply.str() +
                             "); upstream fairness CDF is inconsistent");
  }

  FlowSolution sol;
  sol.flow.reserve(net.arcs.size());
  sol.scaled_cost = 0;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const Int f = net.arcs[a].capacity - g.cap[2 * a];
    sol.scaled_cost += f * net.arcs[a].cost;
    sol.flow.push_back(f);
  }
  sol.potential = std::move(pi);
  sol.objective = -Rat(sol.scaled_cost) /
                  (Rat(net.cost_denominator) * Rat(net.capacity_denominator));
  return sol;
}

bool verify_optimality(const CirculationNetwork& net, const FlowSolution& sol) {
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& arc = net.arcs[a];
    const Int& f = sol.flow[a];
    if (f < 0 || f > arc.capacity) return false;
    const Int reduced = arc.cost + sol.potential[arc.tail] - sol.potential[arc.head];
    if (f < arc.capacity && reduced < 0) return false;
    if (f > 0 && -reduced < 0) return false;
  }
  // Flow conservation (source/sink balance against total supply).
  std::vector<Int> balance(net.num_nodes, Int(0));
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    balance[net.arcs[a].tail] -= sol.flow[a];
    balance[net.arcs[a].head] += sol.flow[a];
  }
  for (int v = 0; v < net.num_nodes; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (balance[v] != 0) return false;
  }
  return balance[net.source] == -net.total_supply &&
         balance[net.sink] == net.total_supply;
}

FairLpResult solve_fair_lp(const Instance& inst, const FairnessCdf& l,
                           const Rat& phi, bool compact) {
  FairLpResult result;
  result.network = build_circulation(inst, l, phi, compact);
  result.flow = solve_min_cost_flow(result.network);

  const int n = inst.num_individuals();
  const Rat d(result.network.capacity_denominator);
  result.marginals.p.assign(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t a = 0; a < result.network.arcs.size(); ++a) {
    const auto& arc = result.network.arcs[a];
    if (arc.x >= 0) {
      result.marginals.p[arc.x][arc.y] += Rat(result.flow.flow[a]) / d;
    }
  }
  result.utility = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      result.utility += inst.utility[x][y] * result.marginals.p[x][y];
    }
  }
  return result;
}

std::pair<Matching, Rat> utility_max_matching(const Instance& inst) {
  const int n = inst.num_individuals();
  // phi = 0 degenerates to the assignment relaxation: all supply sits at the
  // rank-n nodes with integral capacities, so the optimum is integral.
  RatMatrix supplies(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) supplies[x][n - 1] = 1;
  const CirculationNetwork net = build_network(inst, supplies, /*compact=*/false);
  const FlowSolution sol = solve_min_cost_flow(net);

  Matching m;
  m.assignment.assign(n, -1);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (net.arcs[a].x >= 0 && sol.flow[a] == 1) {
      m.assignment[net.arcs[a].x] = net.arcs[a].y;
    }
  }
  Rat utility = 0;
  for (int x = 0; x < n; ++x) utility += inst.utility[x][m.assignment[x]];
  return {std::move(m), std::move(utility)};
}

}  // namespace fairmatch
