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

#ifndef FAIRMATCH_BASELINES_HPP_
#define FAIRMATCH_BASELINES_HPP_

#include <cstdint>
#include <utility>

#include "fairmatch/estimate.hpp"
#include "fairmatch/model.hpp"

namespace fairmatch {

/// Thompson sampling: one fresh merit draw, then the fair matching for it.
/// The induced distribution over matchings is the 1-fair baseline.
Matching thompson_matching(const Instance& inst, std::uint64_t seed,
                           std::uint64_t index);

/// The phi-mix baseline: (1-phi) * M* + phi * cdf_to_pdf(l), evaluated
/// analytically (exact Thompson marginals, no simulation noise).
std::pair<DoublyStochastic, Rat> mix_marginals(const Instance& inst,
                                               const FairnessCdf& l,
                                               const Rat& phi);

}  // namespace fairmatch

#endif  // FAIRMATCH_BASELINES_HPP_
