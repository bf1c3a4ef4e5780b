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

#include "persuasion/credibility.hpp"

#include <stdexcept>

#include "persuasion/geometry.hpp"

namespace persuasion {

namespace {

void require_state_independent(const GameSpec& game) {
  if (!game.sender_payoff_state_independent()) {
    throw ValidationError(
        "u_sender: credibility analysis requires a state-independent sender payoff "
        "(every row constant across states)");
  }
}

}  // namespace

PayoffInterval chi_one_payoff_set(const GameSpec& game, const Belief& prior, int jobs) {
  require_state_independent(game);
  return equilibrium_interval(game, prior, jobs);
}

Rat min_lower_value(const GameSpec& game, int jobs) {
  CellDecomposition decomp = enumerate_cells(game, full_mask(game.num_states()), jobs);
  std::vector<Generator> gens = lower_generators(game, decomp);
  if (gens.empty()) throw std::logic_error("no lower generators");
  Rat best = gens[0].value;
  for (const auto& g : gens) best = std::min(best, g.value);
  return best;
}

Rat credibility_lower_bound(const GameSpec& game, const Belief& prior, const Rat& chi,
                            const Rat& eps, int jobs) {
  require_state_independent(game);
  validate_belief(game, prior);
  if (chi < 0 || chi > 1) {
    throw ValidationError("chi: " + to_fraction_string(chi) + " outside [0,1]");
  }
  if (eps <= 0) throw ValidationError("eps: must be positive");
  Rat what = cav_lower_value(game, prior, jobs);
  Rat min_w = min_lower_value(game, jobs);
  return chi * (what - eps) + (1 - chi) * min_w;
}

CredibilityReport robustness_verdict(const GameSpec& game, const Belief& prior,
                                     std::vector<Rat> chi_grid, Rat eps, int jobs) {
  require_state_independent(game);
  validate_belief(game, prior);
  if (eps <= 0) throw ValidationError("eps: must be positive");
  if (chi_grid.empty()) {
    chi_grid = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(99, 100), Rat(1)};
  }
  for (const auto& chi : chi_grid) {
    if (chi < 0 || chi > 1) {
      throw ValidationError("chi: " + to_fraction_string(chi) + " outside [0,1]");
    }
  }

  CredibilityReport report;
  report.chi_grid = std::move(chi_grid);
  report.epsilon = eps;
  report.chi1_interval = equilibrium_interval(game, prior, jobs);
  report.strongly_robust = report.chi1_interval.width() == 0;
  report.min_w = min_lower_value(game, jobs);
  report.limit_at_one = report.chi1_interval.lo - eps;
  for (const auto& chi : report.chi_grid) {
    report.lower_bounds.push_back(chi * (report.chi1_interval.lo - eps) +
                                  (1 - chi) * report.min_w);
  }
  return report;
}

}  // namespace persuasion
