// Copyright 2026 The persuade Authors
//
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

#include "persuasion/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "persuasion/json_io.hpp"

namespace persuasion {

namespace {

struct CommonOptions {
  std::string game_path;
  std::string prior_override;
  std::string format = "human";
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_prior = true) {
  cmd->add_option("game", opts->game_path, "path to the game document (JSON)")->required();
  if (with_prior) {
    cmd->add_option("--prior", opts->prior_override,
                    "prior override: comma-separated rationals; a single value p for "
                    "two-state games means (1-p, p)");
  }
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"human", "json"}));
  cmd->add_option("--jobs", opts->jobs, "worker threads for parallel stages")
      ->check(CLI::PositiveNumber);
}

Belief parse_prior_override(const GameSpec& game, const std::string& text) {
  std::vector<Rat> entries;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) entries.push_back(parse_rational(token));
  if (entries.size() == 1 && game.num_states() == 2) {
    return Belief{{1 - entries[0], entries[0]}};
  }
  if (static_cast<int>(entries.size()) != game.num_states()) {
    throw ValidationError("prior: got " + std::to_string(entries.size()) +
                          " entries, expected " + std::to_string(game.num_states()));
  }
  Belief prior{entries};
  validate_belief(game, prior);
  return prior;
}

struct Loaded {
  GameSpec game;
  Belief prior;
};

Loaded load(const CommonOptions& opts) {
  Loaded loaded{load_game_file(opts.game_path), {}};
  loaded.prior = opts.prior_override.empty() ? loaded.game.prior_belief()
                                             : parse_prior_override(loaded.game, opts.prior_override);
  return loaded;
}

std::string show(const Rat& r) {
  return to_fraction_string(r) + " (~" + to_decimal_string(r, 6) + ")";
}

void print_policy(std::ostream& out, const GameSpec& game, const InformationPolicy& policy,
                  const std::string& indent) {
  for (const auto& [belief, weight] : policy.support) {
    out << indent << "weight " << show(weight) << " on (";
    for (int s = 0; s < game.num_states(); ++s) {
      if (s) out << ", ";
      out << game.states[s].label << "=" << to_fraction_string(belief.probs[s]);
    }
    out << ")\n";
  }
}

void print_interval(std::ostream& out, const GameSpec& game, const PayoffInterval& interval) {
  out << "equilibrium sender payoffs: [" << show(interval.lo) << ", " << show(interval.hi)
      << "]\n";
  out << "lower end attained: " << (interval.lo_attained ? "yes" : "no") << "\n";
  if (!interval.lo_attained) {
    out << "  witness shortfall epsilon = " << show(interval.lo_epsilon)
        << " (interior pull delta = " << to_fraction_string(interval.lo_pull_delta) << ")\n";
  }
  out << "adversarial-optimal witness:\n";
  print_policy(out, game, interval.lo_witness, "  ");
  out << "favorable-optimal witness:\n";
  print_policy(out, game, interval.hi_witness, "  ");
}

int cmd_interval(const CommonOptions& opts, std::ostream& out) {
  Loaded loaded = load(opts);
  PayoffInterval interval = equilibrium_interval(loaded.game, loaded.prior, opts.jobs);
  if (opts.format == "json") {
    out << interval_to_json(loaded.game, interval).dump(2) << "\n";
  } else {
    print_interval(out, loaded.game, interval);
  }
  return 0;
}

int cmd_analyze(const CommonOptions& opts, std::ostream& out) {
  Loaded loaded = load(opts);
  UniquenessVerdict verdict = analyze(loaded.game, loaded.prior, opts.jobs);
  if (opts.format == "json") {
    out << verdict_to_json(loaded.game, verdict).dump(2) << "\n";
  } else {
    out << "verdict: " << to_string(verdict.verdict) << " (test: "
        << to_string(verdict.winning_test) << ")\n";
    print_interval(out, loaded.game, verdict.interval);
  }
  return 0;
}

int cmd_check(const std::string& target, const CommonOptions& opts, std::ostream& out) {
  Loaded loaded = load(opts);
  const GameSpec& game = loaded.game;
  Json doc;
  std::ostringstream human;
  if (target == "pubr") {
    Theorem1Result result = theorem1_verdict(game, loaded.prior);
    doc = theorem1_to_json(game, result);
    human << "pubr theorem applies: " << (result.applies ? "yes" : "no") << "\n";
    human << "strong variant holds on D: " << (result.strong_holds ? "yes" : "no") << "\n";
    human << "potentially unique actions:";
    for (int a : result.potentially_unique) human << " " << game.actions[a].label;
    human << "\nD (support of the optimal favorable policy): " << result.D.size()
          << " beliefs, " << result.failing_points.size() << " failing\n";
  } else if (target == "generic") {
    GenericityReport report = genericity_check(game, opts.jobs);
    doc = genericity_to_json(game, report);
    human << "in_U_R: " << (report.in_U_R ? "true" : "false") << "\n";
    for (std::size_t idx : report.failing_indices) {
      const auto& entry = report.phi_values[idx];
      human << "  phi = 0 at action " << game.actions[entry.action].label << ", states {";
      for (std::size_t i = 0; i < entry.state_subset.size(); ++i) {
        if (i) human << ", ";
        human << game.states[entry.state_subset[i]].label;
      }
      human << "}\n";
    }
  } else if (target == "ordered") {
    OrderedReport report = ordered_check(game, loaded.prior);
    doc = ordered_to_json(game, report);
    human << "is_ordered: " << to_string(report.is_ordered) << "\n"
          << "increasing_differences: " << (report.increasing_differences ? "true" : "false")
          << "\n"
          << "quasi_condition: " << to_string(report.quasi) << "\n"
          << "boundary_condition: " << (report.boundary_condition ? "true" : "false") << "\n"
          << "theorem2_applies: " << (report.theorem2_applies ? "true" : "false") << "\n";
    if (!report.note.empty()) human << "note: " << report.note << "\n";
  } else if (target == "global") {
    GlobalUniquenessResult result = global_uniqueness_report(game, opts.jobs);
    doc = global_to_json(game, result);
    human << "global uniqueness (w-hat >= v everywhere): " << (result.holds ? "yes" : "no")
          << "\n";
    if (result.failing_vertex) {
      human << "  fails at " << to_fraction_string(result.failing_vertex->probs) << ": v = "
            << show(result.failing_upper) << " > w-hat = " << show(result.failing_cavw) << "\n";
    }
  } else {  // ties
    NoTiesResult result = no_relevant_ties_report(game, opts.jobs);
    doc = no_ties_to_json(game, result);
    human << "no relevant ties: " << (result.holds ? "yes" : "no") << "\n";
    if (result.failing_vertex) {
      human << "  sender payoffs differ across a tie at "
            << to_fraction_string(result.failing_vertex->probs) << "\n";
    }
  }
  if (opts.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << human.str();
  }
  return 0;
}

int cmd_witness(const CommonOptions& opts, const std::string& target_text, std::ostream& out) {
  Loaded loaded = load(opts);
  Rat target = parse_rational(target_text);
  EquilibriumWitness witness = equilibrium_witness(loaded.game, loaded.prior, target);
  if (opts.format == "json") {
    out << witness_to_json(loaded.game, witness).dump(2) << "\n";
  } else {
    out << "target " << show(witness.target) << " realized with lambda = "
        << show(witness.lambda) << ", zeta = " << show(witness.zeta) << "\n";
    out << "policy p_lambda:\n";
    print_policy(out, loaded.game, witness.policy, "  ");
  }
  return 0;
}

int cmd_credibility(const CommonOptions& opts, const std::string& chi_list,
                    const std::string& eps_text, std::ostream& out) {
  Loaded loaded = load(opts);
  std::vector<Rat> grid;
  if (!chi_list.empty()) {
    std::stringstream stream(chi_list);
    std::string token;
    while (std::getline(stream, token, ',')) grid.push_back(parse_rational(token));
  }
  Rat eps = parse_rational(eps_text);
  CredibilityReport report =
      robustness_verdict(loaded.game, loaded.prior, std::move(grid), eps, opts.jobs);
  if (opts.format == "json") {
    out << credibility_to_json(loaded.game, report).dump(2) << "\n";
  } else {
    out << "chi, certified lower bound\n";
    for (std::size_t i = 0; i < report.chi_grid.size(); ++i) {
      out << "  " << to_fraction_string(report.chi_grid[i]) << ", "
          << show(report.lower_bounds[i]) << "\n";
    }
    out << "limit as chi -> 1: " << show(report.limit_at_one) << "\n";
    out << "min w over the simplex: " << show(report.min_w) << "\n";
    out << "strongly robust: " << (report.strongly_robust ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_figure(const CommonOptions& opts, int n, const std::string& out_path,
               const std::string& edge_text, std::ostream& out) {
  Loaded loaded = load(opts);
  std::optional<std::pair<int, int>> edge;
  if (!edge_text.empty()) {
    auto comma = edge_text.find(',');
    if (comma == std::string::npos) {
      throw ValidationError("edge: expected two comma-separated state indices");
    }
    edge = {std::stoi(edge_text.substr(0, comma)), std::stoi(edge_text.substr(comma + 1))};
  }
  std::vector<FigureRow> rows = figure_rows(loaded.game, n, edge, opts.jobs);
  std::string csv = figure_csv(rows);
  if (out_path.empty() || out_path == "-") {
    out << csv;
  } else {
    std::ofstream file(out_path);
    if (!file) throw ValidationError("figure: cannot write \"" + out_path + "\"");
    file << csv;
    out << "wrote " << rows.size() << " rows to " << out_path << "\n";
  }
  return 0;
}

int cmd_oracle(const CommonOptions& opts, int n, std::ostream& out) {
  Loaded loaded = load(opts);
  BruteForceInterval approx = brute_force_interval(loaded.game, loaded.prior, n, opts.jobs);
  PayoffInterval exact = equilibrium_interval(loaded.game, loaded.prior, opts.jobs);
  if (opts.format == "json") {
    out << oracle_to_json(loaded.game, approx, exact, n).dump(2) << "\n";
  } else {
    out << "grid (n=" << n << "): [" << show(approx.lo) << ", " << show(approx.hi) << "]\n";
    out << "exact:        [" << show(exact.lo) << ", " << show(exact.hi) << "]\n";
    out << "gaps: lo " << show(exact.lo - approx.lo) << ", hi " << show(exact.hi - approx.hi)
        << " (bar " << show(approx.error_bar) << ")\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"equilibrium payoff sets for finite persuasion games"};
  app.require_subcommand(1);

  CommonOptions interval_opts, analyze_opts, witness_opts, credibility_opts, figure_opts,
      oracle_opts, check_opts;

  CLI::App* interval_cmd = app.add_subcommand("interval", "exact payoff interval with witnesses");
  add_common(interval_cmd, &interval_opts);

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "uniqueness battery plus exact interval");
  add_common(analyze_cmd, &analyze_opts);

  CLI::App* check_cmd = app.add_subcommand("check", "run one diagnostic");
  std::string check_target;
  check_cmd->add_option("target", check_target, "pubr | generic | ordered | global | ties")
      ->required()
      ->check(CLI::IsMember({"pubr", "generic", "ordered", "global", "ties"}));
  add_common(check_cmd, &check_opts);

  CLI::App* witness_cmd = app.add_subcommand("witness", "equilibrium witness for a target payoff");
  std::string witness_target;
  witness_cmd->add_option("--target", witness_target, "target payoff (rational)")->required();
  add_common(witness_cmd, &witness_opts);

  CLI::App* credibility_cmd =
      app.add_subcommand("credibility", "limited-commitment bounds and robustness verdict");
  std::string chi_list;
  std::string eps_text = "1/1000";
  credibility_cmd->add_option("--chi", chi_list, "comma-separated credibility levels in [0,1]");
  credibility_cmd->add_option("--eps", eps_text, "epsilon of the deviation bound (rational > 0)");
  add_common(credibility_cmd, &credibility_opts);

  CLI::App* figure_cmd = app.add_subcommand("figure", "tabulate v, w and both envelopes");
  int figure_n = 401;
  std::string figure_out, figure_edge;
  figure_cmd->add_option("--n", figure_n, "evenly spaced sample count (>= 2)");
  figure_cmd->add_option("--out", figure_out, "output path ('-' for stdout)");
  figure_cmd->add_option("--edge", figure_edge, "state pair i,j for games with more than 2 states");
  add_common(figure_cmd, &figure_opts);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "grid brute-force interval vs exact");
  int oracle_n = 200;
  oracle_cmd->add_option("--n", oracle_n, "grid resolution (>= 2)");
  add_common(oracle_cmd, &oracle_opts);

  std::vector<const char*> argv;
  argv.push_back("persuade");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*interval_cmd) return cmd_interval(interval_opts, out);
    if (*analyze_cmd) return cmd_analyze(analyze_opts, out);
    if (*check_cmd) return cmd_check(check_target, check_opts, out);
    if (*witness_cmd) return cmd_witness(witness_opts, witness_target, out);
    if (*credibility_cmd) return cmd_credibility(credibility_opts, chi_list, eps_text, out);
    if (*figure_cmd) return cmd_figure(figure_opts, figure_n, figure_out, figure_edge, out);
    if (*oracle_cmd) return cmd_oracle(oracle_opts, oracle_n, out);
    err << "error: no command\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace persuasion
