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

#ifndef FAIRMATCH_MODEL_HPP_
#define FAIRMATCH_MODEL_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fairmatch/rational.hpp"

namespace fairmatch {

// ---------------------------------------------------------------------------
// Merit distribution Gamma
// ---------------------------------------------------------------------------

struct PointDist {
  Rat value;
};
struct NormalDist {
  Rat mean;
  Rat std;  // > 0
};
struct UniformDist {
  Rat lo;
  Rat hi;  // hi > lo
};
using PairDist = std::variant<PointDist, NormalDist, UniformDist>;

struct DiscreteMixture {
  struct Scenario {
    Rat prob;  // in (0, 1]
    RatMatrix merits;
  };
  std::vector<Scenario> scenarios;  // probabilities sum exactly to 1
};

struct IndependentParametric {
  std::vector<std::vector<PairDist>> entries;  // dense n_X x n_Y

  bool all_point() const;
};

using MeritDistribution = std::variant<DiscreteMixture, IndependentParametric>;

// ---------------------------------------------------------------------------
// Instance
// ---------------------------------------------------------------------------

struct Instance {
  std::vector<std::string> individuals;
  std::vector<std::string> resources;
  // preference[x] lists resource indices best-to-worst (a permutation).
  std::vector<std::vector<int>> preferences;
  MeritDistribution merits;
  RatMatrix utility;  // mu[x][y] >= 0

  // After pad_instance these record the original sizes; virtual entities
  // occupy the trailing indices.
  int real_individuals = 0;
  int real_resources = 0;

  int num_individuals() const { return static_cast<int>(individuals.size()); }
  int num_resources() const { return static_cast<int>(resources.size()); }
  bool is_square() const { return num_individuals() == num_resources(); }

  /// rank of resource y in x's list, 1-based.
  int rank_of(int x, int y) const { return rank_[x][y]; }
  /// the resource x ranks k-th (1-based k).
  int resource_at_rank(int x, int k) const { return preferences[x][k - 1]; }

  /// Recomputes the rank lookup from `preferences`; called by the parser,
  /// the generators, and pad_instance.
  void rebuild_rank_index();

  /// Throws validation_error on any broken invariant. Returns warnings
  /// (currently: in-column merit ties among real individuals).
  std::vector<std::string> validate() const;

 private:
  std::vector<std::vector<int>> rank_;
};

// ---------------------------------------------------------------------------
// Matchings, marginals, lotteries
// ---------------------------------------------------------------------------

/// Bijection individuals -> resources; assignment[x] = y.
struct Matching {
  std::vector<int> assignment;

  int size() const { return static_cast<int>(assignment.size()); }
  bool is_bijection() const;
  std::vector<int> inverse() const;  // resource -> individual
};

struct DoublyStochastic {
  RatMatrix p;  // n x n

  int size() const { return static_cast<int>(p.size()); }
  bool is_valid() const;  // entries in [0,1], rows/cols sum to 1 exactly
  static DoublyStochastic from_matching(const Matching& m);
};

struct MatchingLottery {
  struct Component {
    Rat weight;  // in (0, 1]
    Matching matching;
  };
  std::vector<Component> components;

  Rat total_weight() const;
  /// Weighted sum of the permutation matrices.
  DoublyStochastic marginals() const;
};

// ---------------------------------------------------------------------------
// Audit report (filled by the audit module, serialized here)
// ---------------------------------------------------------------------------

struct AuditReport {
  struct Entry {
    int x = 0;
    int k = 0;
    Rat cumulative;  // sum_{i<=k} p_{x, r_x^-1(i)}
    Rat target;      // ell_{x,k}
    bool ratio_infinite = false;  // target == 0 convention
    Rat ratio;                    // cumulative / target when finite
  };
  std::vector<Entry> entries;
  bool min_ratio_infinite = false;  // every target was zero
  Rat min_ratio;
  Rat utility;
  Rat phi;          // fairness level the policy was solved for
  bool fair = false;  // min ratio >= phi (or vacuously fair)
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Emits the instance JSON format (inverse of parse_instance).
void write_instance(const Instance& inst, std::ostream& sink);

/// Parses the instance JSON format. Numeric literals become exact rationals;
/// both decimal strings and "a/b" fractions are accepted. Errors carry the
/// offending JSON path.
Instance parse_instance(std::istream& source);
Instance parse_instance_file(const std::string& path);

/// Squares a rectangular instance by appending virtual individuals or
/// resources: ranked below all real entities (input order among themselves),
/// zero utility, point-mass merit strictly below Gamma's real support.
/// Idempotent; square instances are returned unchanged.
Instance pad_instance(const Instance& inst);

struct Solution {
  DoublyStochastic marginals;
  MatchingLottery lottery;
  Rat utility;
  AuditReport audit;
  std::vector<std::string> individuals;  // names for the matching maps
  std::vector<std::string> resources;
};

/// Emits the solution JSON format; rationals serialized as "a/b" strings.
/// Throws validation_error if the lottery does not reconstruct P exactly.
void write_solution(const Solution& sol, std::ostream& sink);
Solution parse_solution(std::istream& source);

}  // namespace fairmatch

#endif  // FAIRMATCH_MODEL_HPP_
