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

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fairmatch {

using json = nlohmann::ordered_json;

namespace {

Rat rational_from_json(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(Int(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Rat(Int(v.get<std::uint64_t>()));
    if (v.is_number_float()) {
      // Re-parse nlohmann's shortest round-trip rendering so that a literal
      // like 0.9 means the decimal 9/10, not the nearest double.
      return parse_rational(v.dump());
    }
  } catch (const validation_error& e) {
    throw validation_error(path + ": " + e.what());
  }
  throw validation_error(path + ": expected a number or numeric string");
}

RatMatrix matrix_from_json(const json& v, const std::string& path) {
  if (!v.is_array()) throw validation_error(path + ": expected an array");
  RatMatrix m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& row = v[i];
    const std::string rpath = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw validation_error(rpath + ": expected an array");
    std::vector<Rat> out;
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(rational_from_json(row[j], rpath + "[" + std::to_string(j) + "]"));
    }
    m.push_back(std::move(out));
  }
  return m;
}

void require_shape(const RatMatrix& m, int rows, int cols, const std::string& path) {
  if (static_cast<int>(m.size()) != rows) {
    throw validation_error(path + ": expected " + std::to_string(rows) + " rows, got " +
                           std::to_string(m.size()));
  }
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != cols) {
      throw validation_error(path + ": expected " + std::to_string(cols) +
                             " columns in every row");
    }
  }
}

MeritDistribution merits_from_json(const json& v, int n_x, int n_y,
                                   const std::vector<std::string>& individuals,
                                   const std::vector<std::string>& resources) {
  if (!v.is_object() || !v.contains("type")) {
    throw validation_error("merits: expected an object with a \"type\" field");
  }
  const std::string type = v["type"].get<std::string>();
  if (type == "discrete_mixture") {
    DiscreteMixture mix;
    if (!v.contains("scenarios") || !v["scenarios"].is_array() || v["scenarios"].empty()) {
      throw validation_error("merits.scenarios: expected a non-empty array");
    }
    Rat total = 0;
    for (std::size_t i = 0; i < v["scenarios"].size(); ++i) {
      const json& s = v["scenarios"][i];
      const std::string path = "merits.scenarios[" + std::to_string(i) + "]";
      DiscreteMixture::Scenario scen;
      scen.prob = rational_from_json(s.at("prob"), path + ".prob");
      if (scen.prob <= 0 || scen.prob > 1) {
        throw validation_error(path + ".prob: must be in (0, 1]");
      }
      scen.merits = matrix_from_json(s.at("matrix"), path + ".matrix");
      require_shape(scen.merits, n_x, n_y, path + ".matrix");
      total += scen.prob;
      mix.scenarios.push_back(std::move(scen));
    }
    if (total != 1) {
      throw validation_error("merits.scenarios: probabilities sum to " +
                             rational_to_fraction(total) + ", expected 1");
    }
    return mix;
  }
  if (type == "independent") {
    IndependentParametric ind;
    ind.entries.assign(n_x, std::vector<PairDist>(n_y, PointDist{Rat(0)}));
    std::vector<std::vector<bool>> seen(n_x, std::vector<bool>(n_y, false));
    std::map<std::string, int> xid, yid;
    for (int i = 0; i < n_x; ++i) xid[individuals[i]] = i;
    for (int j = 0; j < n_y; ++j) yid[resources[j]] = j;
    for (std::size_t i = 0; i < v.at("entries").size(); ++i) {
      const json& e = v["entries"][i];
      const std::string path = "merits.entries[" + std::to_string(i) + "]";
      const std::string xs = e.at("x").get<std::string>();
      const std::string ys = e.at("y").get<std::string>();
      if (!xid.count(xs)) throw validation_error(path + ".x: unknown individual '" + xs + "'");
      if (!yid.count(ys)) throw validation_error(path + ".y: unknown resource '" + ys + "'");
      const int x = xid[xs], y = yid[ys];
      const std::string dist = e.at("dist").get<std::string>();
      if (dist == "normal") {
        NormalDist d{rational_from_json(e.at("mean"), path + ".mean"),
                     rational_from_json(e.at("std"), path + ".std")};
        if (d.std <= 0) throw validation_error(path + ".std: must be > 0");
        ind.entries[x][y] = d;
      } else if (dist == "uniform") {
        UniformDist d{rational_from_json(e.at("lo"), path + ".lo"),
                      rational_from_json(e.at("hi"), path + ".hi")};
        if (d.hi <= d.lo) throw validation_error(path + ": requires hi > lo");
        ind.entries[x][y] = d;
      } else if (dist == "point") {
        ind.entries[x][y] = PointDist{rational_from_json(e.at("value"), path + ".value")};
      } else {
        throw validation_error(path + ".dist: unknown distribution '" + dist + "'");
      }
      seen[x][y] = true;
    }
    for (int x = 0; x < n_x; ++x) {
      for (int y = 0; y < n_y; ++y) {
        if (!seen[x][y]) {
          throw validation_error("merits.entries: missing entry for (" + individuals[x] +
                                 ", " + resources[y] + ")");
        }
      }
    }
    return ind;
  }
  throw validation_error("merits.type: unknown type '" + type + "'");
}

json matrix_to_json(const RatMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_to_fraction(v));
    out.push_back(std::move(r));
  }
  return out;
}

json audit_to_json(const AuditReport& report) {
  json a;
  a["phi"] = rational_to_fraction(report.phi);
  a["utility"] = rational_to_fraction(report.utility);
  a["min_fairness_ratio"] =
      report.min_ratio_infinite ? json("inf") : json(rational_to_fraction(report.min_ratio));
  a["fair"] = report.fair;
  json ratios = json::array();
  for (const auto& e : report.entries) {
    json r;
    r["x"] = e.x;
    r["k"] = e.k;
    r["cumulative"] = rational_to_fraction(e.cumulative);
    r["target"] = rational_to_fraction(e.target);
    r["ratio"] = e.ratio_infinite ? json("inf") : json(rational_to_fraction(e.ratio));
    ratios.push_back(std::move(r));
  }
  a["ratios"] = std::move(ratios);
  return a;
}

AuditReport audit_from_json(const json& a) {
  AuditReport report;
  report.phi = parse_rational(a.at("phi").get<std::string>());
  report.utility = parse_rational(a.at("utility").get<std::string>());
  if (a.at("min_fairness_ratio").is_string() && a["min_fairness_ratio"] == "inf") {
    report.min_ratio_infinite = true;
  } else {
    report.min_ratio = parse_rational(a.at("min_fairness_ratio").get<std::string>());
  }
  report.fair = a.at("fair").get<bool>();
  for (const auto& r : a.at("ratios")) {
    AuditReport::Entry e;
    e.x = r.at("x").get<int>();
    e.k = r.at("k").get<int>();
    e.cumulative = parse_rational(r.at("cumulative").get<std::string>());
    e.target = parse_rational(r.at("target").get<std::string>());
    if (r.at("ratio").is_string() && r["ratio"] == "inf") {
      e.ratio_infinite = true;
    } else {
      e.ratio = parse_rational(r.at("ratio").get<std::string>());
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace

bool IndependentParametric::all_point() const {
  for (const auto& row : entries) {
    for (const auto& d : row) {
      if (!std::holds_alternative<PointDist>(d)) return false;
    }
  }
  return true;
}

void Instance::rebuild_rank_index() {
  const int n_x = num_individuals();
  const int n_y = num_resources();
  rank_.assign(n_x, std::vector<int>(n_y, 0));
  for (int x = 0; x < n_x; ++x) {
    for (int k = 0; k < static_cast<int>(preferences[x].size()); ++k) {
      rank_[x][preferences[x][k]] = k + 1;
    }
  }
}

std::vector<std::string> Instance::validate() const {
  const int n_x = num_individuals();
  const int n_y = num_resources();
  if (n_x == 0 || n_y == 0) throw validation_error("instance must be non-empty");
  if (static_cast<int>(preferences.size()) != n_x) {
    throw validation_error("preferences: expected one list per individual");
  }
  for (int x = 0; x < n_x; ++x) {
    std::vector<bool> seen(n_y, false);
    if (static_cast<int>(preferences[x].size()) != n_y) {
      throw validation_error("preferences[" + individuals[x] + "]: not a permutation");
    }
    for (int y : preferences[x]) {
      if (y < 0 || y >= n_y || seen[y]) {
        throw validation_error("preferences[" + individuals[x] + "]: not a permutation");
      }
      seen[y] = true;
    }
  }
  require_shape(utility, n_x, n_y, "utility");
  for (int x = 0; x < n_x; ++x) {
    for (int y = 0; y < n_y; ++y) {
      if (utility[x][y] < 0) {
        throw validation_error("utility[" + std::to_string(x) + "][" + std::to_string(y) +
                               "]: negative utility");
      }
    }
  }

  std::vector<std::string> warnings;
  if (const auto* mix = std::get_if<DiscreteMixture>(&merits)) {
    for (std::size_t s = 0; s < mix->scenarios.size(); ++s) {
      require_shape(mix->scenarios[s].merits, n_x, n_y,
                    "merits.scenarios[" + std::to_string(s) + "].matrix");
      const int real_x = real_individuals > 0 ? real_individuals : n_x;
      for (int y = 0; y < n_y; ++y) {
        std::set<Rat> column;
        bool tie = false;
        for (int x = 0; x < real_x; ++x) {
          if (!column.insert(mix->scenarios[s].merits[x][y]).second) tie = true;
        }
        if (tie) {
          warnings.push_back("scenario " + std::to_string(s) + ", resource " + resources[y] +
                             ": tied merits among real individuals "
                             "(deterministic index tie-break applies)");
        }
      }
    }
  } else {
    const auto& ind = std::get<IndependentParametric>(merits);
    if (static_cast<int>(ind.entries.size()) != n_x ||
        static_cast<int>(ind.entries[0].size()) != n_y) {
      throw validation_error("merits.entries: shape mismatch");
    }
  }
  return warnings;
}

bool Matching::is_bijection() const {
  const int n = size();
  std::vector<bool> hit(n, false);
  for (int y : assignment) {
    if (y < 0 || y >= n || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<int> Matching::inverse() const {
  std::vector<int> inv(size(), -1);
  for (int x = 0; x < size(); ++x) inv[assignment[x]] = x;
  return inv;
}

bool DoublyStochastic::is_valid() const {
  const int n = size();
  if (n == 0) return false;
  std::vector<Rat> colsum(n, Rat(0));
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(p[x].size()) != n) return false;
    Rat rowsum = 0;
    for (int y = 0; y < n; ++y) {
      if (p[x][y] < 0 || p[x][y] > 1) return false;
      rowsum += p[x][y];
      colsum[y] += p[x][y];
    }
    if (rowsum != 1) return false;
  }
  return std::all_of(colsum.begin(), colsum.end(), [](const Rat& c) { return c == 1; });
}

DoublyStochastic DoublyStochastic::from_matching(const Matching& m) {
  const int n = m.size();
  DoublyStochastic out;
  out.p.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int x = 0; x < n; ++x) out.p[x][m.assignment[x]] = 1;
  return out;
}

Rat MatchingLottery::total_weight() const {
  Rat total = 0;
  for (const auto& c : components) total += c.weight;
  return total;
}

DoublyStochastic MatchingLottery::marginals() const {
  const int n = components.empty() ? 0 : components.front().matching.size();
  DoublyStochastic out;
  out.p.assign(n, std::vector<Rat>(n, Rat(0)));
  for (const auto& c : components) {
    for (int x = 0; x < n; ++x) out.p[x][c.matching.assignment[x]] += c.weight;
  }
  return out;
}

void write_instance(const Instance& inst, std::ostream& sink) {
  json doc;
  doc["individuals"] = inst.individuals;
  doc["resources"] = inst.resources;
  json prefs;
  for (int x = 0; x < inst.num_individuals(); ++x) {
    json list = json::array();
    for (int y : inst.preferences[x]) list.push_back(inst.resources[y]);
    prefs[inst.individuals[x]] = std::move(list);
  }
  doc["preferences"] = std::move(prefs);

  json merits;
  if (const auto* mix = std::get_if<DiscreteMixture>(&inst.merits)) {
    merits["type"] = "discrete_mixture";
    json scenarios = json::array();
    for (const auto& s : mix->scenarios) {
      json scen;
      scen["prob"] = rational_to_fraction(s.prob);
      scen["matrix"] = matrix_to_json(s.merits);
      scenarios.push_back(std::move(scen));
    }
    merits["scenarios"] = std::move(scenarios);
  } else {
    const auto& ind = std::get<IndependentParametric>(inst.merits);
    merits["type"] = "independent";
    json entries = json::array();
    for (int x = 0; x < inst.num_individuals(); ++x) {
      for (int y = 0; y < inst.num_resources(); ++y) {
        json e;
        e["x"] = inst.individuals[x];
        e["y"] = inst.resources[y];
        if (const auto* pt = std::get_if<PointDist>(&ind.entries[x][y])) {
          e["dist"] = "point";
          e["value"] = rational_to_fraction(pt->value);
        } else if (const auto* un = std::get_if<UniformDist>(&ind.entries[x][y])) {
          e["dist"] = "uniform";
          e["lo"] = rational_to_fraction(un->lo);
          e["hi"] = rational_to_fraction(un->hi);
        } else {
          const auto& nd = std::get<NormalDist>(ind.entries[x][y]);
          e["dist"] = "normal";
          e["mean"] = rational_to_fraction(nd.mean);
          e["std"] = rational_to_fraction(nd.std);
        }
        entries.push_back(std::move(e));
      }
    }
    merits["entries"] = std::move(entries);
  }
  doc["merits"] = std::move(merits);
  doc["utility"] = matrix_to_json(inst.utility);

  sink << doc.dump(2) << "\n";
  if (!sink) throw std::runtime_error("I/O failure while writing instance");
}

Instance parse_instance(std::istream& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed JSON: ") + e.what());
  }

  Instance inst;
  try {
    inst.individuals = doc.at("individuals").get<std::vector<std::string>>();
    inst.resources = doc.at("resources").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw validation_error(std::string("individuals/resources: ") + e.what());
  }
  const int n_x = inst.num_individuals();
  const int n_y = inst.num_resources();
  inst.real_individuals = n_x;
  inst.real_resources = n_y;

  std::map<std::string, int> yid;
  for (int j = 0; j < n_y; ++j) {
    if (!yid.emplace(inst.resources[j], j).second) {
      throw validation_error("resources: duplicate identifier '" + inst.resources[j] + "'");
    }
  }
  {
    std::set<std::string> ids(inst.individuals.begin(), inst.individuals.end());
    if (static_cast<int>(ids.size()) != n_x) {
      throw validation_error("individuals: duplicate identifier");
    }
  }

  const json& prefs = doc.at("preferences");
  inst.preferences.assign(n_x, {});
  for (int x = 0; x < n_x; ++x) {
    const std::string& name = inst.individuals[x];
    if (!prefs.contains(name)) {
      throw validation_error("preferences: missing list for '" + name + "'");
    }
    for (const auto& r : prefs[name]) {
      const std::string rs = r.get<std::string>();
      if (!yid.count(rs)) {
        throw validation_error("preferences[" + name + "]: unknown resource '" + rs + "'");
      }
      inst.preferences[x].push_back(yid[rs]);
    }
  }

  inst.merits = merits_from_json(doc.at("merits"), n_x, n_y, inst.individuals, inst.resources);
  inst.utility = matrix_from_json(doc.at("utility"), "utility");
  require_shape(inst.utility, n_x, n_y, "utility");

  inst.rebuild_rank_index();
  inst.validate();
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

namespace {

// Strictly below every real merit value that the sampler can produce: exact
// support minimum for discrete/point entries, lo for uniform, and
// mean - 12*std for normals (the Box-Muller draw is bounded by ~8.7 sigma).
Rat virtual_merit_floor(const MeritDistribution& merits) {
  bool first = true;
  Rat lo = 0;
  auto fold = [&](const Rat& v) {
    if (first || v < lo) lo = v;
    first = false;
  };
  if (const auto* mix = std::get_if<DiscreteMixture>(&merits)) {
    for (const auto& s : mix->scenarios) {
      for (const auto& row : s.merits) {
        for (const auto& v : row) fold(v);
      }
    }
  } else {
    for (const auto& row : std::get<IndependentParametric>(merits).entries) {
      for (const auto& d : row) {
        if (const auto* pt = std::get_if<PointDist>(&d)) {
          fold(pt->value);
        } else if (const auto* un = std::get_if<UniformDist>(&d)) {
          fold(un->lo);
        } else {
          const auto& nd = std::get<NormalDist>(d);
          fold(nd.mean - 12 * nd.std);
        }
      }
    }
  }
  return lo - 1;
}

}  // namespace

Instance pad_instance(const Instance& inst) {
  const int n_x = inst.num_individuals();
  const int n_y = inst.num_resources();
  if (n_x == n_y) return inst;

  Instance out = inst;
  const int n = std::max(n_x, n_y);
  const Rat floor = virtual_merit_floor(inst.merits);

  if (n_y < n) {
    for (int j = n_y; j < n; ++j) {
      out.resources.push_back("__virtual_resource_" + std::to_string(j - n_y + 1));
    }
    // Real individuals rank virtual resources last, in input order.
    for (int x = 0; x < n_x; ++x) {
      for (int j = n_y; j < n; ++j) out.preferences[x].push_back(j);
    }
    for (auto& row : out.utility) row.resize(n, Rat(0));
  }
  if (n_x < n) {
    for (int i = n_x; i < n; ++i) {
      out.individuals.push_back("__virtual_individual_" + std::to_string(i - n_x + 1));
      // Virtual individuals rank resources in input order.
      std::vector<int> prefs(n);
      for (int j = 0; j < static_cast<int>(out.resources.size()); ++j) prefs[j] = j;
      out.preferences.push_back(std::move(prefs));
      out.utility.emplace_back(out.resources.size(), Rat(0));
    }
  }

  const int new_x = static_cast<int>(out.individuals.size());
  const int new_y = static_cast<int>(out.resources.size());
  if (auto* mix = std::get_if<DiscreteMixture>(&out.merits)) {
    for (auto& s : mix->scenarios) {
      for (auto& row : s.merits) row.resize(new_y, floor);
      while (static_cast<int>(s.merits.size()) < new_x) {
        s.merits.emplace_back(new_y, floor);
      }
    }
  } else {
    auto& ind = std::get<IndependentParametric>(out.merits);
    for (auto& row : ind.entries) row.resize(new_y, PairDist(PointDist{floor}));
    while (static_cast<int>(ind.entries.size()) < new_x) {
      ind.entries.emplace_back(new_y, PairDist(PointDist{floor}));
    }
  }

  out.rebuild_rank_index();
  out.validate();
  return out;
}

void write_solution(const Solution& sol, std::ostream& sink) {
  const DoublyStochastic reconstructed = sol.lottery.marginals();
  if (reconstructed.p != sol.marginals.p) {
    throw validation_error("solution inconsistent: lottery does not reconstruct marginals");
  }
  if (sol.lottery.total_weight() != 1) {
    throw validation_error("solution inconsistent: lottery weights do not sum to 1");
  }

  json doc;
  doc["individuals"] = sol.individuals;
  doc["resources"] = sol.resources;
  doc["marginals"] = matrix_to_json(sol.marginals.p);
  json lottery = json::array();
  for (const auto& c : sol.lottery.components) {
    json comp;
    comp["weight"] = rational_to_fraction(c.weight);
    json m;
    for (int x = 0; x < c.matching.size(); ++x) {
      m[sol.individuals[x]] = sol.resources[c.matching.assignment[x]];
    }
    comp["matching"] = std::move(m);
    lottery.push_back(std::move(comp));
  }
  doc["lottery"] = std::move(lottery);
  doc["utility"] = rational_to_fraction(sol.utility);
  doc["audit"] = audit_to_json(sol.audit);

  sink << doc.dump(2) << "\n";
  if (!sink) throw std::runtime_error("I/O failure while writing solution");
}

Solution parse_solution(std::istream& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed JSON: ") + e.what());
  }

  Solution sol;
  sol.individuals = doc.at("individuals").get<std::vector<std::string>>();
  sol.resources = doc.at("resources").get<std::vector<std::string>>();
  std::map<std::string, int> xid, yid;
  for (std::size_t i = 0; i < sol.individuals.size(); ++i) xid[sol.individuals[i]] = i;
  for (std::size_t j = 0; j < sol.resources.size(); ++j) yid[sol.resources[j]] = j;

  for (const auto& row : doc.at("marginals")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
    sol.marginals.p.push_back(std::move(r));
  }
  for (const auto& comp : doc.at("lottery")) {
    MatchingLottery::Component c;
    c.weight = parse_rational(comp.at("weight").get<std::string>());
    c.matching.assignment.assign(sol.individuals.size(), -1);
    for (const auto& [ind, res] : comp.at("matching").items()) {
      if (!xid.count(ind) || !yid.count(res.get<std::string>())) {
        throw validation_error("lottery matching references unknown identifier");
      }
      c.matching.assignment[xid[ind]] = yid[res.get<std::string>()];
    }
    if (!c.matching.is_bijection()) {
      throw validation_error("lottery component is not a bijection");
    }
    sol.lottery.components.push_back(std::move(c));
  }
  sol.utility = parse_rational(doc.at("utility").get<std::string>());
  sol.audit = audit_from_json(doc.at("audit"));

  if (sol.lottery.marginals().p != sol.marginals.p) {
    throw validation_error("solution inconsistent: lottery does not reconstruct marginals");
  }
  return sol;
}

}  // namespace fairmatch
