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

#ifndef FAIRMATCH_AUDIT_HPP_
#define FAIRMATCH_AUDIT_HPP_

#include "fairmatch/estimate.hpp"
#include "fairmatch/model.hpp"

namespace fairmatch {

/// Exact inner product sum mu_{x,y} * p_{x,y}.
Rat policy_utility(const DoublyStochastic& p, const RatMatrix& mu);

/// Per-(x,k) cumulative top-k mass of P versus ell, with ratio = +infinity
/// when ell_{x,k} = 0 (the constraint is vacuous). `phi` only stamps the
/// report's pass/fail flag.
AuditReport fairness_report(const DoublyStochastic& p,
                            const FairnessCdf& l_truth, const Instance& inst,
                            const Rat& phi = Rat(1));

struct Theorem43Report {
  bool precondition_ok = false;  // max|l^ - l| <= eps/2; else vacuous
  bool feasible = false;
  bool fairness_ok = false;   // min ratio vs truth >= phi*(1+eps/2)/(n*eps+1)
  bool utility_ok = false;    // U(P^) >= U(P*) / (phi*n*eps + 1)
  Rat min_fairness_ratio;
  bool min_ratio_infinite = false;
  Rat fairness_bound;
  Rat utility_hat;
  Rat utility_star;
  Rat utility_bound;

  bool passed() const {
    return !precondition_ok || (feasible && fairness_ok && utility_ok);
  }
};

/// Solves the adjusted LP with l~ = adjust_cdf(l_hat, eps) and checks the
/// multiplicative fairness and utility bounds against the true ell. All
/// comparisons are exact rational.
Theorem43Report check_theorem_43(const Instance& inst,
                                 const FairnessCdf& l_truth,
                                 const FairnessCdf& l_hat, const Rat& epsilon,
                                 const Rat& phi);

}  // namespace fairmatch

#endif  // FAIRMATCH_AUDIT_HPP_
