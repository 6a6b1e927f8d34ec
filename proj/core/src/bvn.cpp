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

#include "fairmatch/bvn.hpp"

#include <cmath>
#include <functional>

#include "fairmatch/rng.hpp"

namespace fairmatch {

namespace {

// Augmenting-path perfect matching on the positive-support graph. Birkhoff's
// theorem guarantees one exists while any mass remains.
template <typename Matrix, typename IsPositive>
std::vector<int> perfect_matching(const Matrix& m, int n, IsPositive positive) {
  std::vector<int> match_row(n, -1);  // x -> y
  std::vector<int> match_col(n, -1);  // y -> x
  std::vector<char> visited(n);

  std::function<bool(int)> augment = [&](int x) -> bool {
    for (int y = 0; y < n; ++y) {
      if (!positive(m[x][y]) || visited[y]) continue;
      visited[y] = 1;
      if (match_col[y] == -1 || augment(match_col[y])) {
        match_row[x] = y;
        match_col[y] = x;
        return true;
      }
    }
    return false;
  };

  for (int x = 0; x < n; ++x) {
    visited.assign(n, 0);
    if (!augment(x)) return {};
  }
  return match_row;
}

}  // namespace

MatchingLottery decompose(const DoublyStochastic& p) {
  if (!p.is_valid()) {
    throw not_doubly_stochastic("decompose: input is not doubly stochastic");
  }
  const int n = p.size();
  RatMatrix residual = p.p;
  Rat remaining = 1;

  MatchingLottery lottery;
  while (remaining > 0) {
    const std::vector<int> match =
        perfect_matching(residual, n, [](const Rat& v) { return v > 0; });
    if (match.empty()) {
      throw not_doubly_stochastic(
          "decompose: no perfect matching on positive support");
    }
    Rat weight = residual[0][match[0]];
    for (int x = 1; x < n; ++x) weight = std::min(weight, residual[x][match[x]]);
    for (int x = 0; x < n; ++x) residual[x][match[x]] -= weight;
    lottery.components.push_back({weight, Matching{match}});
    remaining -= weight;
  }
  return lottery;
}

MatchingLottery decompose(const std::vector<std::vector<double>>& p) {
  constexpr double kZero = 1e-12;
  constexpr double kSumTolerance = 1e-9;
  const int n = static_cast<int>(p.size());
  std::vector<double> colsum(n, 0.0);
  for (int x = 0; x < n; ++x) {
    double rowsum = 0.0;
    for (int y = 0; y < n; ++y) {
      if (p[x][y] < -kZero) throw not_doubly_stochastic("negative entry");
      rowsum += p[x][y];
      colsum[y] += p[x][y];
    }
    if (std::abs(rowsum - 1.0) > kSumTolerance) {
      throw not_doubly_stochastic("row sum out of tolerance");
    }
  }
  for (double c : colsum) {
    if (std::abs(c - 1.0) > kSumTolerance) {
      throw not_doubly_stochastic("column sum out of tolerance");
    }
  }

  std::vector<std::vector<double>> residual = p;
  MatchingLottery lottery;
  double remaining = 1.0;
  while (remaining > kZero) {
    const std::vector<int> match =
        perfect_matching(residual, n, [](double v) { return v > kZero; });
    if (match.empty()) break;
    double weight = residual[0][match[0]];
    for (int x = 1; x < n; ++x) weight = std::min(weight, residual[x][match[x]]);
    for (int x = 0; x < n; ++x) residual[x][match[x]] -= weight;
    lottery.components.push_back({Rat(weight), Matching{match}});
    remaining -= weight;
  }
  // Renormalize the float weights so downstream draws see an exact unit sum.
  const Rat total = lottery.total_weight();
  for (auto& c : lottery.components) c.weight /= total;
  return lottery;
}

Matching draw_matching(const MatchingLottery& lottery, std::uint64_t seed,
                       std::uint64_t index) {
  SplitMix64 rng(seed, index);
  const Rat u = rng.next_unit_rational();
  Rat cumulative = 0;
  for (const auto& c : lottery.components) {
    cumulative += c.weight;
    if (u < cumulative) return c.matching;
  }
  return lottery.components.back().matching;
}

}  // namespace fairmatch
