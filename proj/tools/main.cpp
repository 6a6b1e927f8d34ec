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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairmatch/audit.hpp"
#include "fairmatch/baselines.hpp"
#include "fairmatch/bvn.hpp"
#include "fairmatch/estimate.hpp"
#include "fairmatch/flowlp.hpp"
#include "fairmatch/gen.hpp"
#include "fairmatch/model.hpp"

namespace {

using namespace fairmatch;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUnsupported = 2;

struct SolveFlags {
  std::string instance_path;
  std::string phi = "1";
  std::string epsilon = "1/10";
  std::string kappa = "1";
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  // 0: use required_samples
  std::string mode = "exact-oracle";
  bool compact_network = false;
  std::string out;
};

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw validation_error("cannot open output file '" + path + "'");
  return file;
}

/// Shared estimate/solve pipeline for `solve` and `sweep`.
FairnessCdf pipeline_cdf(const Instance& inst, const SolveFlags& flags) {
  if (flags.mode == "exact-oracle") {
    return exact_fairness_cdf(inst);
  }
  if (flags.mode != "sampled") {
    throw validation_error("mode must be 'exact-oracle' or 'sampled'");
  }
  const Rat epsilon = parse_rational(flags.epsilon);
  const Rat kappa = parse_rational(flags.kappa);
  const std::uint64_t m =
      flags.samples > 0
          ? flags.samples
          : required_samples(epsilon / 2, kappa, inst.num_individuals());
  FairnessCdf lhat = estimate_fairness_cdf(inst, m, flags.seed);
  lhat.kappa = kappa;
  return adjust_cdf(lhat, epsilon);
}

int cmd_solve(const SolveFlags& flags) {
  const Instance inst = pad_instance(parse_instance_file(flags.instance_path));
  const Rat phi = parse_rational(flags.phi);
  const FairnessCdf l = pipeline_cdf(inst, flags);

  const FairLpResult lp = solve_fair_lp(inst, l, phi, flags.compact_network);
  Solution sol;
  sol.marginals = lp.marginals;
  sol.lottery = decompose(lp.marginals);
  sol.utility = lp.utility;
  sol.audit = fairness_report(lp.marginals, l, inst, phi);
  sol.individuals = inst.individuals;
  sol.resources = inst.resources;

  std::ofstream file;
  write_solution(sol, open_sink(flags.out, file));
  return kExitOk;
}

int cmd_sweep(const SolveFlags& flags, const std::string& grid) {
  const Instance inst = pad_instance(parse_instance_file(flags.instance_path));
  const FairnessCdf l = pipeline_cdf(inst, flags);

  std::vector<Rat> phis;
  {
    std::istringstream spec(grid);
    std::string start, stop, step;
    if (!std::getline(spec, start, ':') || !std::getline(spec, stop, ':') ||
        !std::getline(spec, step)) {
      throw validation_error("grid must be 'start:stop:step'");
    }
    const Rat lo = parse_rational(start);
    const Rat hi = parse_rational(stop);
    const Rat inc = parse_rational(step);
    if (inc <= 0 && lo != hi) throw validation_error("grid step must be positive");
    for (Rat phi = lo; phi <= hi; phi += inc) {
      phis.push_back(phi);
      if (inc == 0) break;
    }
  }

  std::ofstream file;
  std::ostream& csv = open_sink(flags.out, file);
  csv << "phi,lp_utility,mix_utility,min_fairness_ratio\n";
  for (const Rat& phi : phis) {
    const FairLpResult lp = solve_fair_lp(inst, l, phi, flags.compact_network);
    const auto [mix, mix_utility] = mix_marginals(inst, l, phi);
    const AuditReport audit = fairness_report(lp.marginals, l, inst, phi);
    csv << rational_to_decimal(phi) << "," << rational_to_decimal(lp.utility) << ","
        << rational_to_decimal(mix_utility) << ","
        << (audit.min_ratio_infinite ? "inf" : rational_to_decimal(audit.min_ratio))
        << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& instance_path) {
  const Instance inst = pad_instance(parse_instance_file(instance_path));
  write_fairness_cdf(exact_fairness_cdf(inst), std::cout);
  return kExitOk;
}

int cmd_sample(const std::string& solution_path, std::uint64_t count,
               std::uint64_t seed) {
  std::ifstream in(solution_path);
  if (!in) throw validation_error("cannot open solution file '" + solution_path + "'");
  const Solution sol = parse_solution(in);

  for (std::uint64_t i = 0; i < count; ++i) {
    const Matching m = draw_matching(sol.lottery, seed, i);
    nlohmann::ordered_json line;
    for (int x = 0; x < m.size(); ++x) {
      line[sol.individuals[x]] = sol.resources[m.assignment[x]];
    }
    std::cout << line.dump() << "\n";
  }
  return kExitOk;
}

int cmd_gen(int n, int scenarios, const std::string& dist, std::uint64_t seed,
            const std::string& mean_lo, const std::string& mean_hi,
            const std::string& std_dev, const std::string& out) {
  Instance inst;
  if (dist == "mixture") {
    inst = gen_mixture(n, scenarios, seed);
  } else if (dist == "normal") {
    inst = gen_normal(n, parse_rational(mean_lo), parse_rational(mean_hi),
                      parse_rational(std_dev), seed);
  } else {
    throw validation_error("dist must be 'mixture' or 'normal'");
  }
  std::ofstream file;
  write_instance(inst, open_sink(out, file));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair utility-maximizing lotteries over bipartite matchings "
               "under merit uncertainty"};
  app.require_subcommand(1);

  SolveFlags flags;
  std::string grid = "0:1:1/10";
  std::string solution_path;
  std::uint64_t sample_count = 1;
  int gen_n = 3, gen_scenarios = 2;
  std::string gen_dist = "mixture", gen_mean_lo = "1", gen_mean_hi = "10",
              gen_std = "3";

  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("instance", flags.instance_path, "Instance JSON file")->required();
    cmd->add_option("--phi", flags.phi, "Fairness level in [0,1] (rational or decimal)");
    cmd->add_option("--epsilon", flags.epsilon, "Estimation accuracy (sampled mode)");
    cmd->add_option("--kappa", flags.kappa, "Confidence exponent (default 1)");
    cmd->add_option("--seed", flags.seed, "RNG seed (default 0)");
    cmd->add_option("--samples", flags.samples,
                    "Override the DKW-derived sample count");
    cmd->add_option("--mode", flags.mode, "exact-oracle | sampled");
    cmd->add_flag("--compact-network", flags.compact_network,
                  "Use the O(n^2)-arc chain encoding");
    cmd->add_option("--out", flags.out, "Output path (default stdout)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve the fairness-constrained LP");
  add_shared(solve);

  CLI::App* sweep = app.add_subcommand("sweep", "Utility/fairness sweep over phi");
  add_shared(sweep);
  sweep->add_option("--grid", grid, "phi grid 'start:stop:step'");

  CLI::App* oracle = app.add_subcommand("oracle", "Print the exact fairness CDF");
  std::string oracle_path;
  oracle->add_option("instance", oracle_path, "Instance JSON file")->required();

  CLI::App* sample = app.add_subcommand("sample", "Draw matchings from a solution lottery");
  sample->add_option("solution", solution_path, "Solution JSON file")->required();
  sample->add_option("--count", sample_count, "Number of draws");
  std::uint64_t sample_seed = 0;
  sample->add_option("--seed", sample_seed, "RNG seed");

  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  gen->add_option("--n", gen_n, "Instance size");
  gen->add_option("--scenarios", gen_scenarios, "Mixture scenario count");
  gen->add_option("--dist", gen_dist, "mixture | normal");
  std::uint64_t gen_seed = 0;
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--mean-lo", gen_mean_lo, "Normal mean range low");
  gen->add_option("--mean-hi", gen_mean_hi, "Normal mean range high");
  gen->add_option("--std", gen_std, "Normal std (default 3)");
  std::string gen_out;
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(flags);
    if (sweep->parsed()) return cmd_sweep(flags, grid);
    if (oracle->parsed()) return cmd_oracle(oracle_path);
    if (sample->parsed()) return cmd_sample(solution_path, sample_count, sample_seed);
    if (gen->parsed()) {
      return cmd_gen(gen_n, gen_scenarios, gen_dist, gen_seed, gen_mean_lo,
                     gen_mean_hi, gen_std, gen_out);
    }
  } catch (const unsupported_distribution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
