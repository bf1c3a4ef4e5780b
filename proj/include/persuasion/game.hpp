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

#ifndef PERSUASION_GAME_HPP_
#define PERSUASION_GAME_HPP_

#include <optional>
#include <string>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion {

// A point of the belief simplex over the game's states: entries >= 0,
// summing exactly to 1.
struct Belief {
  std::vector<Rat> probs;

  bool operator==(const Belief& other) const { return probs == other.probs; }
  bool operator<(const Belief& other) const { return probs < other.probs; }
};

struct ValueInterval {
  Rat lo;
  Rat hi;
};

struct StateInfo {
  std::string label;
  std::optional<Rat> position;  // only consumed by ordered-model checks
};

struct ActionInfo {
  std::string label;
  std::optional<Rat> position;
};

// A finite persuasion game. Payoff matrices are indexed [action][state] and
// are authoritative for everything; positions are optional metadata.
struct GameSpec {
  std::vector<StateInfo> states;
  std::vector<ActionInfo> actions;
  std::vector<Rat> prior;
  std::vector<std::vector<Rat>> u_sender;
  std::vector<std::vector<Rat>> u_receiver;

  int num_states() const { return static_cast<int>(states.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  Belief prior_belief() const { return Belief{prior}; }

  // Expected sender payoff of `action` under belief `mu`.
  Rat sender_payoff(int action, const Belief& mu) const;
  // Expected receiver payoff of `action` under belief `mu`.
  Rat receiver_payoff(int action, const Belief& mu) const;

  // True when u_sender is constant across states for every action.
  bool sender_payoff_state_independent() const;

  // Throws ValidationError naming the offending field. Checks: >= 2 states
  // and actions, matrix dimensions, prior a probability vector, unique
  // labels, and positions (when any are given) present and distinct.
  void validate() const;
};

// mask[i] == 1 marks state i as allowed; beliefs restricted to the masked
// face of the simplex.
using StateMask = std::vector<char>;

StateMask full_mask(int num_states);
StateMask support_mask(const std::vector<Rat>& distribution);
StateMask support_mask(const Belief& belief);
int mask_size(const StateMask& mask);
bool mask_subset(const StateMask& inner, const StateMask& outer);

// Throws ValidationError unless `mu` matches the game dimension and is a
// probability vector.
void validate_belief(const GameSpec& game, const Belief& mu);

Belief degenerate_belief(int num_states, int state);

// The receiver's exact best-response set A*_R(mu): argmax over actions of the
// expected receiver payoff, computed in rational arithmetic. Never empty.
std::vector<int> best_responses(const GameSpec& game, const Belief& mu);

// v(mu): sender's payoff when the receiver breaks ties favorably (max of the
// expected sender payoff over best responses).
Rat value_upper(const GameSpec& game, const Belief& mu);

// w(mu): adversarial tie-breaking (min over best responses).
Rat value_lower(const GameSpec& game, const Belief& mu);

// V(mu) = [w(mu), v(mu)].
ValueInterval value_interval(const GameSpec& game, const Belief& mu);

}  // namespace persuasion

#endif  // PERSUASION_GAME_HPP_
