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

#include "fairmatch/model.hpp"

#include <sstream>

#include <doctest.h>

#include "helpers.hpp"

using namespace fairmatch;
using namespace fairmatch::testing;

TEST_CASE("appendix fixture parses with exact rationals") {
  const Instance inst = load_fixture("appendix_a.json");
  CHECK(inst.num_individuals() == 3);
  CHECK(inst.num_resources() == 3);
  CHECK(inst.rank_of(0, 0) == 1);  // ind1 ranks res1 first
  CHECK(inst.rank_of(0, 1) == 3);
  CHECK(inst.rank_of(2, 2) == 1);  // ind3 ranks res3 first

  const auto& mix = std::get<DiscreteMixture>(inst.merits);
  REQUIRE(mix.scenarios.size() == 2);
  CHECK(mix.scenarios[0].prob == Rat(9, 10));
  CHECK(mix.scenarios[1].prob == Rat(1, 10));
  CHECK(mix.scenarios[0].merits[2][0] == 2);
}

TEST_CASE("instance JSON round-trips through write_instance") {
  const Instance inst = load_fixture("appendix_a.json");
  std::stringstream buffer;
  write_instance(inst, buffer);
  const Instance again = parse_instance(buffer);
  CHECK(again.individuals == inst.individuals);
  CHECK(again.preferences == inst.preferences);
  CHECK(again.utility == inst.utility);
  CHECK(std::get<DiscreteMixture>(again.merits).scenarios[0].merits ==
        std::get<DiscreteMixture>(inst.merits).scenarios[0].merits);
}

TEST_CASE("parser reports the offending path") {
  std::stringstream bad(R"({
    "individuals": ["a", "b"], "resources": ["p", "q"],
    "preferences": {"a": ["p", "q"], "b": ["p", "p"]},
    "merits": {"type": "discrete_mixture",
               "scenarios": [{"prob": "1", "matrix": [[1, 2], [3, 4]]}]},
    "utility": [[1, 0], [0, 1]]
  })");
  CHECK_THROWS_AS(parse_instance(bad), validation_error);

  std::stringstream bad_prob(R"({
    "individuals": ["a"], "resources": ["p"],
    "preferences": {"a": ["p"]},
    "merits": {"type": "discrete_mixture",
               "scenarios": [{"prob": "1/2", "matrix": [[1]]}]},
    "utility": [[1]]
  })");
  CHECK_THROWS_WITH_AS(parse_instance(bad_prob),
                       doctest::Contains("probabilities sum"),
                       validation_error);
}

TEST_CASE("negative utility is rejected") {
  std::stringstream bad(R"({
    "individuals": ["a"], "resources": ["p"],
    "preferences": {"a": ["p"]},
    "merits": {"type": "discrete_mixture",
               "scenarios": [{"prob": "1", "matrix": [[1]]}]},
    "utility": [[-1]]
  })");
  CHECK_THROWS_AS(parse_instance(bad), validation_error);
}

TEST_CASE("pad_instance squares rectangles and is idempotent") {
  std::stringstream rect(R"({
    "individuals": ["a", "b", "c"], "resources": ["p", "q"],
    "preferences": {"a": ["p", "q"], "b": ["q", "p"], "c": ["p", "q"]},
    "merits": {"type": "discrete_mixture",
               "scenarios": [{"prob": "1", "matrix": [[5, 4], [3, 2], [1, 6]]}]},
    "utility": [[1, 2], [3, 4], [5, 6]]
  })");
  const Instance inst = parse_instance(rect);
  const Instance padded = pad_instance(inst);
  CHECK(padded.is_square());
  CHECK(padded.num_resources() == 3);
  CHECK(padded.real_resources == 2);
  // The virtual resource sits last in every real preference list.
  for (int x = 0; x < 3; ++x) CHECK(padded.rank_of(x, 2) == 3);
  // Virtual column: zero utility, merit strictly below the real support.
  const auto& mix = std::get<DiscreteMixture>(padded.merits);
  for (int x = 0; x < 3; ++x) {
    CHECK(padded.utility[x][2] == 0);
    CHECK(mix.scenarios[0].merits[x][2] == 0);  // min support 1, minus 1
  }
  const Instance twice = pad_instance(padded);
  CHECK(twice.num_individuals() == padded.num_individuals());
  CHECK(twice.preferences == padded.preferences);
}

TEST_CASE("validate flags merit ties among real individuals") {
  std::stringstream tied(R"({
    "individuals": ["a", "b"], "resources": ["p", "q"],
    "preferences": {"a": ["p", "q"], "b": ["q", "p"]},
    "merits": {"type": "discrete_mixture",
               "scenarios": [{"prob": "1", "matrix": [[1, 2], [1, 3]]}]},
    "utility": [[1, 0], [0, 1]]
  })");
  const Instance inst = parse_instance(tied);
  CHECK_FALSE(inst.validate().empty());
}

TEST_CASE("matching and lottery primitives") {
  Matching m{{1, 2, 0}};
  CHECK(m.is_bijection());
  CHECK(m.inverse() == std::vector<int>{2, 0, 1});
  CHECK_FALSE(Matching{{0, 0, 1}}.is_bijection());

  MatchingLottery lottery;
  lottery.components.push_back({Rat(9, 10), Matching{{1, 0, 2}}});
  lottery.components.push_back({Rat(1, 10), Matching{{0, 1, 2}}});
  CHECK(lottery.total_weight() == 1);
  const DoublyStochastic p = lottery.marginals();
  CHECK(p.is_valid());
  CHECK(p.p[0][1] == Rat(9, 10));
  CHECK(p.p[2][2] == 1);
}

TEST_CASE("solution JSON round-trips") {
  Solution sol;
  sol.individuals = {"a", "b"};
  sol.resources = {"p", "q"};
  sol.lottery.components.push_back({Rat(1, 3), Matching{{0, 1}}});
  sol.lottery.components.push_back({Rat(2, 3), Matching{{1, 0}}});
  sol.marginals = sol.lottery.marginals();
  sol.utility = Rat(5, 3);
  sol.audit.phi = 1;
  sol.audit.utility = sol.utility;
  sol.audit.min_ratio = 1;
  sol.audit.fair = true;

  std::stringstream buffer;
  write_solution(sol, buffer);
  const Solution again = parse_solution(buffer);
  CHECK(again.marginals.p == sol.marginals.p);
  CHECK(again.lottery.components.size() == 2);
  CHECK(again.utility == sol.utility);
  CHECK(again.audit.fair);

  // A lottery that does not reconstruct the marginals is rejected.
  sol.marginals.p[0][0] = Rat(1, 2);
  sol.marginals.p[0][1] = Rat(1, 2);
  sol.marginals.p[1][0] = Rat(1, 2);
  sol.marginals.p[1][1] = Rat(1, 2);
  std::stringstream sink;
  CHECK_THROWS_AS(write_solution(sol, sink), validation_error);
}
