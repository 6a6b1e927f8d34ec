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

#ifndef FAIRMATCH_ESTIMATE_HPP_
#define FAIRMATCH_ESTIMATE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "fairmatch/model.hpp"

namespace fairmatch {

/// The fairness CDF: l[x][k-1] is the probability that individual x receives
/// a resource she ranks k-th or better under the fair baseline policy.
struct FairnessCdf {
  enum class Kind { kExact, kEstimated, kAdjusted };

  Kind kind = Kind::kExact;
  RatMatrix l;  // n x n, rows are CDFs ending at 1

  std::optional<std::uint64_t> sample_count;  // estimated
  std::optional<Rat> epsilon;                 // adjusted/estimated provenance
  std::optional<Rat> kappa;

  int size() const { return static_cast<int>(l.size()); }
  Rat at(int x, int k) const {  // k in 0..n, with l_{x,0} == 0
    return k == 0 ? Rat(0) : l[x][k - 1];
  }

  /// Checks the row-CDF property and, against the given preferences, the
  /// column (doubly-stochastic PDF) property. Throws validation_error.
  void validate(const Instance& inst) const;
};

/// Exact ell by enumerating Gamma's finite support. Throws
/// unsupported_distribution for continuous Gamma.
FairnessCdf exact_fairness_cdf(const Instance& inst);

/// ceil((kappa+1) * ln(2n) / (2 * epsilon^2)). The logarithm is evaluated in
/// double precision; this is the only floating-point step in the pipeline and
/// affects only the sample count.
std::uint64_t required_samples(const Rat& epsilon, const Rat& kappa, int n);

/// Monte-Carlo estimate with denominator m. Samples are indexed 0..m-1 and
/// may be drawn across `threads` workers; the merge sums count vectors, so
/// the result is independent of the partition. threads == 0 picks a default.
FairnessCdf estimate_fairness_cdf(const Instance& inst, std::uint64_t m,
                                  std::uint64_t seed, unsigned threads = 0);

/// Robustness adjustment: l~_{x,k} = (l^_{x,k} + k*eps) / (n*eps + 1).
/// Preserves both FairnessCdf invariants.
FairnessCdf adjust_cdf(const FairnessCdf& lhat, const Rat& epsilon);

/// The difference matrix t_{x,y} = l_{x,r_x(y)} - l_{x,r_x(y)-1}; doubly
/// stochastic and feasible for the fairness LP at every phi.
DoublyStochastic cdf_to_pdf(const FairnessCdf& l, const Instance& inst);

/// JSON caching format: {"kind":"exact","entries":[["1/10",...],...]}.
void write_fairness_cdf(const FairnessCdf& l, std::ostream& sink);
FairnessCdf parse_fairness_cdf(std::istream& source);

}  // namespace fairmatch

#endif  // FAIRMATCH_ESTIMATE_HPP_
