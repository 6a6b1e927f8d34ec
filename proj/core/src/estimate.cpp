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

#include "fairmatch/estimate.hpp"

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fairmatch/merit.hpp"
#include "fairmatch/stable.hpp"

namespace fairmatch {

void FairnessCdf::validate(const Instance& inst) const {
  const int n = size();
  if (n != inst.num_individuals() || !inst.is_square()) {
    throw validation_error("fairness CDF shape does not match the instance");
  }
  for (int x = 0; x < n; ++x) {
    Rat prev = 0;
    for (int k = 1; k <= n; ++k) {
      if (at(x, k) < prev) {
        throw validation_error("fairness CDF row " + std::to_string(x) +
                               " is not monotone at k=" + std::to_string(k));
      }
      prev = at(x, k);
    }
    if (at(x, n) != 1) {
      throw validation_error("fairness CDF row " + std::to_string(x) +
                             " does not end at 1");
    }
    if (at(x, 1) < 0) {
      throw validation_error("fairness CDF row " + std::to_string(x) +
                             " has a negative entry");
    }
  }
  for (int y = 0; y < n; ++y) {
    Rat colsum = 0;
    for (int x = 0; x < n; ++x) {
      const int k = inst.rank_of(x, y);
      colsum += at(x, k) - at(x, k - 1);
    }
    if (colsum != 1) {
      throw validation_error("fairness PDF column " + std::to_string(y) +
                             " sums to " + rational_to_fraction(colsum) +
                             ", expected 1");
    }
  }
}

FairnessCdf exact_fairness_cdf(const Instance& inst) {
  const int n = inst.num_individuals();
  FairnessCdf out;
  out.kind = FairnessCdf::Kind::kExact;
  out.l.assign(n, std::vector<Rat>(n, Rat(0)));

  for (const auto& [prob, sample] : enumerate_scenarios(inst.merits)) {
    const Matching m = fair_matching_for_sample(inst, sample);
    for (int x = 0; x < n; ++x) {
      const int achieved = inst.rank_of(x, m.assignment[x]);
      out.l[x][achieved - 1] += prob;  // PDF mass, cumulated below
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int k = 1; k < n; ++k) out.l[x][k] += out.l[x][k - 1];
  }
  return out;
}

std::uint64_t required_samples(const Rat& epsilon, const Rat& kappa, int n) {
  if (epsilon <= 0) throw validation_error("epsilon must be positive");
  if (kappa <= 0) throw validation_error("kappa must be positive");
  if (n < 2) throw validation_error("required_samples needs n >= 2");
  const double eps = static_cast<double>(epsilon);
  const double kap = static_cast<double>(kappa);
  const double m = (kap + 1.0) * std::log(2.0 * n) / (2.0 * eps * eps);
  return static_cast<std::uint64_t>(std::ceil(m));
}

FairnessCdf estimate_fairness_cdf(const Instance& inst, std::uint64_t m,
                                  std::uint64_t seed, unsigned threads) {
  const int n = inst.num_individuals();
  if (m == 0) throw validation_error("sample count must be >= 1");
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  if (static_cast<std::uint64_t>(threads) > m) {
    threads = static_cast<unsigned>(m);
  }

  // rank_counts[x][k-1] = number of samples where x got exactly rank k.
  // Each worker owns an index range; the merge below is a plain sum, so the
  // result does not depend on the worker count.
  std::vector<std::vector<std::vector<std::uint64_t>>> partial(
      threads, std::vector<std::vector<std::uint64_t>>(
                   n, std::vector<std::uint64_t>(n, 0)));

  auto work = [&](unsigned t) {
    const std::uint64_t lo = m * t / threads;
    const std::uint64_t hi = m * (t + 1) / threads;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const MeritSample sample = sample_merits(inst.merits, seed, i);
      const Matching match = fair_matching_for_sample(inst, sample);
      for (int x = 0; x < n; ++x) {
        ++partial[t][x][inst.rank_of(x, match.assignment[x]) - 1];
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  FairnessCdf out;
  out.kind = FairnessCdf::Kind::kEstimated;
  out.sample_count = m;
  out.l.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    std::uint64_t cumulative = 0;
    for (int k = 0; k < n; ++k) {
      for (unsigned t = 0; t < threads; ++t) cumulative += partial[t][x][k];
      out.l[x][k] = Rat(Int(cumulative), Int(m));
    }
  }
  return out;
}

FairnessCdf adjust_cdf(const FairnessCdf& lhat, const Rat& epsilon) {
  if (epsilon <= 0) throw validation_error("epsilon must be positive");
  const int n = lhat.size();
  const Rat denom = Rat(n) * epsilon + 1;

  FairnessCdf out;
  out.kind = FairnessCdf::Kind::kAdjusted;
  out.sample_count = lhat.sample_count;
  out.epsilon = epsilon;
  out.kappa = lhat.kappa;
  out.l.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    for (int k = 1; k <= n; ++k) {
      out.l[x][k - 1] = (lhat.at(x, k) + Rat(k) * epsilon) / denom;
    }
  }
  return out;
}

DoublyStochastic cdf_to_pdf(const FairnessCdf& l, const Instance& inst) {
  l.validate(inst);
  const int n = l.size();
  DoublyStochastic out;
  out.p.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int k = inst.rank_of(x, y);
      out.p[x][y] = l.at(x, k) - l.at(x, k - 1);
    }
  }
  return out;
}

void write_fairness_cdf(const FairnessCdf& l, std::ostream& sink) {
  nlohmann::ordered_json doc;
  switch (l.kind) {
    case FairnessCdf::Kind::kExact:
      doc["kind"] = "exact";
      break;
    case FairnessCdf::Kind::kEstimated:
      doc["kind"] = "estimated";
      break;
    case FairnessCdf::Kind::kAdjusted:
      doc["kind"] = "adjusted";
      break;
  }
  if (l.sample_count) doc["sample_count"] = *l.sample_count;
  if (l.epsilon) doc["epsilon"] = rational_to_fraction(*l.epsilon);
  if (l.kappa) doc["kappa"] = rational_to_fraction(*l.kappa);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& row : l.l) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(rational_to_fraction(v));
    entries.push_back(std::move(r));
  }
  doc["entries"] = std::move(entries);
  sink << doc.dump(2) << "\n";
}

FairnessCdf parse_fairness_cdf(std::istream& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("malformed JSON: ") + e.what());
  }
  FairnessCdf out;
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "exact") {
    out.kind = FairnessCdf::Kind::kExact;
  } else if (kind == "estimated") {
    out.kind = FairnessCdf::Kind::kEstimated;
  } else if (kind == "adjusted") {
    out.kind = FairnessCdf::Kind::kAdjusted;
  } else {
    throw validation_error("unknown fairness CDF kind '" + kind + "'");
  }
  if (doc.contains("sample_count")) {
    out.sample_count = doc["sample_count"].get<std::uint64_t>();
  }
  if (doc.contains("epsilon")) {
    out.epsilon = parse_rational(doc["epsilon"].get<std::string>());
  }
  if (doc.contains("kappa")) {
    out.kappa = parse_rational(doc["kappa"].get<std::string>());
  }
  for (const auto& row : doc.at("entries")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
    out.l.push_back(std::move(r));
  }
  return out;
}

}  // namespace fairmatch
