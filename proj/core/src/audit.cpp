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

#include "fairmatch/audit.hpp"

#include "fairmatch/flowlp.hpp"

namespace fairmatch {

Rat policy_utility(const DoublyStochastic& p, const RatMatrix& mu) {
  Rat utility = 0;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    for (std::size_t y = 0; y < mu[x].size(); ++y) {
      utility += mu[x][y] * p.p[x][y];
    }
  }
  return utility;
}

AuditReport fairness_report(const DoublyStochastic& p,
                            const FairnessCdf& l_truth, const Instance& inst,
                            const Rat& phi) {
  const int n = inst.num_individuals();
  AuditReport report;
  report.phi = phi;
  report.utility = policy_utility(p, inst.utility);
  report.min_ratio_infinite = true;

  for (int x = 0; x < n; ++x) {
    Rat cumulative = 0;
    for (int k = 1; k <= n; ++k) {
      cumulative += p.p[x][inst.resource_at_rank(x, k)];
      AuditReport::Entry e;
      e.x = x;
      e.k = k;
      e.cumulative = cumulative;
      e.target = l_truth.at(x, k);
      if (e.target == 0) {
        e.ratio_infinite = true;  // vacuous constraint
      } else {
        e.ratio = cumulative / e.target;
        if (report.min_ratio_infinite || e.ratio < report.min_ratio) {
          report.min_ratio = e.ratio;
          report.min_ratio_infinite = false;
        }
      }
      report.entries.push_back(std::move(e));
    }
  }
  report.fair = report.min_ratio_infinite || report.min_ratio >= phi;
  return report;
}

Theorem43Report check_theorem_43(const Instance& inst,
                                 const FairnessCdf& l_truth,
                                 const FairnessCdf& l_hat, const Rat& epsilon,
                                 const Rat& phi) {
  const int n = inst.num_individuals();
  Theorem43Report report;

  Rat max_error = 0;
  for (int x = 0; x < n; ++x) {
    for (int k = 1; k <= n; ++k) {
      const Rat diff = abs(l_hat.at(x, k) - l_truth.at(x, k));
      if (diff > max_error) max_error = diff;
    }
  }
  report.precondition_ok = max_error <= epsilon / 2;
  if (!report.precondition_ok) return report;  // bounds are vacuous

  const FairnessCdf l_tilde = adjust_cdf(l_hat, epsilon);
  FairLpResult adjusted;
  try {
    adjusted = solve_fair_lp(inst, l_tilde, phi);
  } catch (const infeasible_network&) {
    return report;  // feasible stays false
  }
  report.feasible = true;

  const AuditReport audit = fairness_report(adjusted.marginals, l_truth, inst, phi);
  report.min_ratio_infinite = audit.min_ratio_infinite;
  report.min_fairness_ratio = audit.min_ratio;
  report.fairness_bound =
      phi * (1 + epsilon / 2) / (Rat(n) * epsilon + 1);
  report.fairness_ok =
      audit.min_ratio_infinite || audit.min_ratio >= report.fairness_bound;

  const FairLpResult truth = solve_fair_lp(inst, l_truth, phi);
  report.utility_hat = adjusted.utility;
  report.utility_star = truth.utility;
  report.utility_bound = truth.utility / (phi * Rat(n) * epsilon + 1);
  report.utility_ok = report.utility_hat >= report.utility_bound;
  return report;
}

}  // namespace fairmatch
