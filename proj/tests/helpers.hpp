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

#ifndef FAIRMATCH_TESTS_HELPERS_HPP_
#define FAIRMATCH_TESTS_HELPERS_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fairmatch/estimate.hpp"
#include "fairmatch/model.hpp"
#include "fairmatch/rng.hpp"

namespace fairmatch::testing {

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline Instance load_fixture(const std::string& name) {
  return parse_instance_file(fixture(name));
}

/// Ranking instance: every individual ranks res1 > res2 > ... > resn, and in
/// each scenario individual x has the same merit score[x] for every resource.
inline Instance ranking_instance(const std::vector<Rat>& probs,
                                 const std::vector<std::vector<Rat>>& scores,
                                 RatMatrix utility) {
  const int n = static_cast<int>(scores[0].size());
  Instance inst;
  for (int i = 0; i < n; ++i) {
    inst.individuals.push_back("x" + std::to_string(i + 1));
    inst.resources.push_back("y" + std::to_string(i + 1));
  }
  inst.real_individuals = n;
  inst.real_resources = n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  inst.preferences.assign(n, order);
  DiscreteMixture mix;
  for (std::size_t s = 0; s < probs.size(); ++s) {
    DiscreteMixture::Scenario scen;
    scen.prob = probs[s];
    scen.merits.assign(n, std::vector<Rat>(n));
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) scen.merits[x][y] = scores[s][x];
    }
    mix.scenarios.push_back(std::move(scen));
  }
  inst.merits = std::move(mix);
  inst.utility = std::move(utility);
  inst.rebuild_rank_index();
  return inst;
}

inline RatMatrix zero_matrix(int n) {
  return RatMatrix(n, std::vector<Rat>(n, Rat(0)));
}

/// The tightness instance for the utility bound: individual 1 scores n with
/// probability 1-eps and n-1 otherwise, individual 2 the reverse (realized
/// as two correlated scenarios so columns stay tie-free), individual i >= 3
/// scores n-i. mu_{1,2} = 1, zero elsewhere.
inline Instance tightness_utility_instance(int n, const Rat& eps) {
  std::vector<Rat> a(n), b(n);
  for (int i = 0; i < n; ++i) a[i] = b[i] = Rat(n - i);
  std::swap(b[0], b[1]);
  RatMatrix mu = zero_matrix(n);
  mu[0][1] = 1;
  return ranking_instance({Rat(1) - eps, eps}, {a, b}, std::move(mu));
}

/// The tightness instance for the fairness bound: deterministic scores, so
/// the true PDF is the identity.
inline Instance tightness_fairness_instance(int n) {
  std::vector<Rat> a(n);
  for (int i = 0; i < n; ++i) a[i] = Rat(n - i);
  return ranking_instance({Rat(1)}, {a}, zero_matrix(n));
}

/// The adversarially perturbed CDF shared by both tightness fixtures:
/// row 1 is 1-eps/2 up to the last column, row x >= 2 steps eps/2 at
/// column x-1 and reaches 1 at column x.
inline FairnessCdf tightness_perturbed_cdf(int n, const Rat& eps) {
  FairnessCdf lhat;
  lhat.kind = FairnessCdf::Kind::kEstimated;
  lhat.epsilon = eps / 2;
  lhat.l.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int k = 0; k < n - 1; ++k) lhat.l[0][k] = Rat(1) - eps / 2;
  lhat.l[0][n - 1] = 1;
  for (int x = 1; x < n; ++x) {
    lhat.l[x][x - 1] = eps / 2;
    for (int k = x; k < n; ++k) lhat.l[x][k] = 1;
  }
  return lhat;
}

/// Fisher-Yates permutation from the shared deterministic RNG.
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[static_cast<int>(rng.next_below(i + 1))]);
  }
  return p;
}

/// Random point of the Birkhoff polytope: a convex combination of `terms`
/// random permutation matrices with random rational weights.
inline DoublyStochastic random_doubly_stochastic(int n, int terms,
                                                 SplitMix64& rng) {
  MatchingLottery lottery;
  Rat total = 0;
  std::vector<Rat> raw(terms);
  for (int t = 0; t < terms; ++t) {
    raw[t] = Rat(1 + rng.next_below(99));
    total += raw[t];
  }
  for (int t = 0; t < terms; ++t) {
    MatchingLottery::Component c;
    c.weight = raw[t] / total;
    c.matching.assignment = random_permutation(n, rng);
    lottery.components.push_back(std::move(c));
  }
  return lottery.marginals();
}

/// A valid fairness CDF drawn at random: the CDF of a random lottery over
/// matchings, read against the instance's preference lists.
inline FairnessCdf random_lottery_cdf(const Instance& inst, int terms,
                                      SplitMix64& rng) {
  const int n = inst.num_individuals();
  const DoublyStochastic p = random_doubly_stochastic(n, terms, rng);
  FairnessCdf l;
  l.l.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    Rat cum = 0;
    for (int k = 1; k <= n; ++k) {
      cum += p.p[x][inst.resource_at_rank(x, k)];
      l.l[x][k - 1] = cum;
    }
  }
  return l;
}

/// Exhaustive utility maximum over all n! matchings.
inline Rat brute_force_max_utility(const Instance& inst) {
  const int n = inst.num_individuals();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat best = 0;
  bool first = true;
  do {
    Rat u = 0;
    for (int x = 0; x < n; ++x) u += inst.utility[x][perm[x]];
    if (first || u > best) best = u;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Max-norm distance between two fairness CDFs.
inline Rat cdf_distance(const FairnessCdf& a, const FairnessCdf& b) {
  Rat worst = 0;
  for (std::size_t x = 0; x < a.l.size(); ++x) {
    for (std::size_t k = 0; k < a.l[x].size(); ++k) {
      const Rat d = abs(a.l[x][k] - b.l[x][k]);
      if (d > worst) worst = d;
    }
  }
  return worst;
}

/// Adversarial perturbation at exact max-norm distance eps/2: moves from l
/// toward another valid CDF, scaled so the largest entry shift is eps/2 (or
/// the full step when the two CDFs are closer than that).
inline FairnessCdf perturb_cdf(const FairnessCdf& l, const Instance& inst,
                               const Rat& eps, SplitMix64& rng) {
  const int n = l.size();
  for (int attempt = 0; attempt < 16; ++attempt) {
    const FairnessCdf other = random_lottery_cdf(inst, 2 + attempt % 3, rng);
    const Rat gap = cdf_distance(other, l);
    if (gap == 0) continue;
    Rat delta = (eps / 2) / gap;
    if (delta > 1) delta = 1;
    FairnessCdf out;
    out.kind = FairnessCdf::Kind::kEstimated;
    out.epsilon = eps / 2;
    out.l.assign(n, std::vector<Rat>(n));
    for (int x = 0; x < n; ++x) {
      for (int k = 0; k < n; ++k) {
        out.l[x][k] = l.l[x][k] + delta * (other.l[x][k] - l.l[x][k]);
      }
    }
    return out;
  }
  return l;  // degenerate instance with a unique lottery CDF
}

}  // namespace fairmatch::testing

#endif  // FAIRMATCH_TESTS_HELPERS_HPP_
