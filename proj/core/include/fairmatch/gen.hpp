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

#ifndef FAIRMATCH_GEN_HPP_
#define FAIRMATCH_GEN_HPP_

#include <cstdint>

#include "fairmatch/model.hpp"

namespace fairmatch {

/// Random square instance with a discrete-mixture Gamma: random preference
/// permutations, s tie-free merit matrices with random rational probabilities
/// summing to 1, random nonnegative rational utilities. Pure in (n, s, seed).
Instance gen_mixture(int n, int scenario_count, std::uint64_t seed);

/// Random square instance with independent normal merits, means uniform in
/// [mean_lo, mean_hi] and a shared std.
Instance gen_normal(int n, const Rat& mean_lo, const Rat& mean_hi,
                    const Rat& std, std::uint64_t seed);

}  // namespace fairmatch

#endif  // FAIRMATCH_GEN_HPP_
