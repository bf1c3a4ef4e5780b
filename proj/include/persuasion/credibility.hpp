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

#ifndef PERSUASION_CREDIBILITY_HPP_
#define PERSUASION_CREDIBILITY_HPP_

#include <vector>

#include "persuasion/concavify.hpp"
#include "persuasion/game.hpp"

namespace persuasion {

// Limited-commitment analysis. All operations require a state-independent
// sender payoff and reject other games with an explicit message. Exact payoff
// sets for interior credibility levels are not computed; only the certified
// bounds the deviation argument provides.
struct CredibilityReport {
  std::vector<Rat> chi_grid;
  std::vector<Rat> lower_bounds;  // certified lower bound per chi
  Rat epsilon;
  PayoffInterval chi1_interval;
  bool strongly_robust = false;
  Rat min_w;         // min of w over the whole simplex
  Rat limit_at_one;  // limit of the bound as chi -> 1: w-hat(prior) - epsilon
};

// The full-credibility payoff set, identical to the equilibrium payoff set.
PayoffInterval chi_one_payoff_set(const GameSpec& game, const Belief& prior, int jobs = 1);

// chi * (w-hat(prior) - eps) + (1 - chi) * min_w: a certified lower bound on
// every equilibrium sender payoff at credibility chi, from the deviation to
// an eps-optimal adversarial experiment.
Rat credibility_lower_bound(const GameSpec& game, const Belief& prior, const Rat& chi,
                            const Rat& eps, int jobs = 1);

// min of w over the simplex, from the cell-closure lower generators.
Rat min_lower_value(const GameSpec& game, int jobs = 1);

// Populates the bound grid and the strong-robustness verdict
// (strongly_robust iff the full-credibility interval has width zero).
CredibilityReport robustness_verdict(const GameSpec& game, const Belief& prior,
                                     std::vector<Rat> chi_grid = {}, Rat eps = Rat(1, 1000),
                                     int jobs = 1);

}  // namespace persuasion

#endif  // PERSUASION_CREDIBILITY_HPP_
