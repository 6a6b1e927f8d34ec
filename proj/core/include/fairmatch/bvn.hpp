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

#ifndef FAIRMATCH_BVN_HPP_
#define FAIRMATCH_BVN_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fairmatch/model.hpp"

namespace fairmatch {

class not_doubly_stochastic : public std::runtime_error {
 public:
  explicit not_doubly_stochastic(const std::string& what)
      : std::runtime_error(what) {}
};

/// Birkhoff-von-Neumann decomposition. Each round finds a perfect matching on
/// the positive-support graph and extracts it with weight equal to the
/// minimum entry along it, zeroing at least one entry; at most n^2 - 2n + 2
/// components. Reconstruction is exact.
MatchingLottery decompose(const DoublyStochastic& p);

/// Float fast-path for approximately doubly stochastic input (row/column sums
/// within 1e-9 of 1); entries below 1e-12 are treated as zero. Weights are
/// returned as exact rationals of the extracted doubles.
MatchingLottery decompose(const std::vector<std::vector<double>>& p);

/// Categorical draw by weight; pure function of (lottery, seed, index).
Matching draw_matching(const MatchingLottery& lottery, std::uint64_t seed,
                       std::uint64_t index);

}  // namespace fairmatch

#endif  // FAIRMATCH_BVN_HPP_
