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

#include "persuasion/game.hpp"

#include <algorithm>
#include <set>

namespace persuasion {

namespace {

Rat dot(const std::vector<Rat>& row, const std::vector<Rat>& mu) {
  Rat acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (mu[i] != 0) acc += row[i] * mu[i];
  }
  return acc;
}

void check_matrix(const std::vector<std::vector<Rat>>& m, int rows, int cols,
                  const std::string& name) {
  if (static_cast<int>(m.size()) != rows) {
    throw ValidationError(name + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(m.size()));
  }
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(m[r].size()) != cols) {
      throw ValidationError(name + ": row " + std::to_string(r) + " has " +
                            std::to_string(m[r].size()) + " entries, expected " +
                            std::to_string(cols));
    }
  }
}

template <typename Info>
void check_labels_and_positions(const std::vector<Info>& items, const std::string& name) {
  std::set<std::string> labels;
  bool any_position = false;
  for (const auto& item : items) {
    if (!labels.insert(item.label).second) {
      throw ValidationError(name + ": duplicate label \"" + item.label + "\"");
    }
    if (item.position) any_position = true;
  }
  if (!any_position) return;
  std::set<Rat> positions;
  for (const auto& item : items) {
    if (!item.position) {
      throw ValidationError(name + ": \"" + item.label +
                            "\" lacks a position while others carry one");
    }
    if (!positions.insert(*item.position).second) {
      throw ValidationError(name + ": duplicate position " + to_fraction_string(*item.position));
    }
  }
}

}  // namespace

Rat GameSpec::sender_payoff(int action, const Belief& mu) const {
  return dot(u_sender[action], mu.probs);
}

Rat GameSpec::receiver_payoff(int action, const Belief& mu) const {
  return dot(u_receiver[action], mu.probs);
}

bool GameSpec::sender_payoff_state_independent() const {
  for (const auto& row : u_sender) {
    for (const auto& entry : row) {
      if (entry != row[0]) return false;
    }
  }
  return true;
}

void GameSpec::validate() const {
  if (num_states() < 2) throw ValidationError("states: need at least 2, got " + std::to_string(num_states()));
  if (num_actions() < 2) throw ValidationError("actions: need at least 2, got " + std::to_string(num_actions()));
  check_labels_and_positions(states, "states");
  check_labels_and_positions(actions, "actions");
  check_matrix(u_sender, num_actions(), num_states(), "u_sender");
  check_matrix(u_receiver, num_actions(), num_states(), "u_receiver");
  if (static_cast<int>(prior.size()) != num_states()) {
    throw ValidationError("prior: has " + std::to_string(prior.size()) + " entries, expected " +
                          std::to_string(num_states()));
  }
  Rat total = 0;
  for (int i = 0; i < num_states(); ++i) {
    if (prior[i] < 0) {
      throw ValidationError("prior: entry for state \"" + states[i].label + "\" is negative");
    }
    total += prior[i];
  }
  if (total != 1) {
    throw ValidationError("prior: sums to " + to_fraction_string(total) + ", expected 1");
  }
}

StateMask full_mask(int num_states) { return StateMask(num_states, 1); }

StateMask support_mask(const std::vector<Rat>& distribution) {
  StateMask mask(distribution.size(), 0);
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (distribution[i] > 0) mask[i] = 1;
  }
  return mask;
}

StateMask support_mask(const Belief& belief) { return support_mask(belief.probs); }

int mask_size(const StateMask& mask) {
  int n = 0;
  for (char c : mask) n += c != 0;
  return n;
}

bool mask_subset(const StateMask& inner, const StateMask& outer) {
  if (inner.size() != outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] && !outer[i]) return false;
  }
  return true;
}

void validate_belief(const GameSpec& game, const Belief& mu) {
  if (static_cast<int>(mu.probs.size()) != game.num_states()) {
    throw ValidationError("belief: has " + std::to_string(mu.probs.size()) +
                          " entries, expected " + std::to_string(game.num_states()));
  }
  Rat total = 0;
  for (const auto& p : mu.probs) {
    if (p < 0) throw ValidationError("belief: negative entry " + to_fraction_string(p));
    total += p;
  }
  if (total != 1) {
    throw ValidationError("belief: sums to " + to_fraction_string(total) + ", expected 1");
  }
}

Belief degenerate_belief(int num_states, int state) {
  Belief mu;
  mu.probs.assign(num_states, Rat(0));
  mu.probs[state] = 1;
  return mu;
}

std::vector<int> best_responses(const GameSpec& game, const Belief& mu) {
  validate_belief(game, mu);
  std::vector<int> best;
  Rat best_value;
  for (int a = 0; a < game.num_actions(); ++a) {
    Rat value = game.receiver_payoff(a, mu);
    if (best.empty() || value > best_value) {
      best_value = value;
      best.assign(1, a);
    } else if (value == best_value) {
      best.push_back(a);
    }
  }
  return best;
}

Rat value_upper(const GameSpec& game, const Belief& mu) {
  std::vector<int> ties = best_responses(game, mu);
  Rat best = game.sender_payoff(ties[0], mu);
  for (std::size_t i = 1; i < ties.size(); ++i) {
    best = std::max(best, game.sender_payoff(ties[i], mu));
  }
  return best;
}

Rat value_lower(const GameSpec& game, const Belief& mu) {
  std::vector<int> ties = best_responses(game, mu);
  Rat worst = game.sender_payoff(ties[0], mu);
  for (std::size_t i = 1; i < ties.size(); ++i) {
    worst = std::min(worst, game.sender_payoff(ties[i], mu));
  }
  return worst;
}

ValueInterval value_interval(const GameSpec& game, const Belief& mu) {
  return ValueInterval{value_lower(game, mu), value_upper(game, mu)};
}

}  // namespace persuasion
