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

#ifndef FAIRMATCH_RNG_HPP_
#define FAIRMATCH_RNG_HPP_

#include <cmath>
#include <cstdint>

#include "fairmatch/rational.hpp"

namespace fairmatch {

// Every randomized operation derives its per-draw generator state as
// splitmix64(seed XOR index). Draw i is therefore reproducible no matter how
// the index range is partitioned across workers. The constants below are part
// of the file-format/fixture contract and must not change.
class SplitMix64 {
 public:
  SplitMix64(std::uint64_t seed, std::uint64_t index) : state_(seed ^ index) {
    next();  // one avalanche round so (0, 0) does not start at the raw key
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double strictly inside (0, 1); the 0.5 offset keeps Box-Muller's
  /// log argument away from zero, bounding normal deviates by ~8.7 sigma.
  double next_unit() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exact uniform rational in [0, 1) with denominator 2^64.
  Rat next_unit_rational() {
    Rat r(Int(next()), Int(1));
    return r / (Rat(Int(1) << 64));
  }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  double next_normal() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fairmatch

#endif  // FAIRMATCH_RNG_HPP_
