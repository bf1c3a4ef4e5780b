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

#ifndef PERSUASION_TESTS_TEST_GAMES_HPP_
#define PERSUASION_TESTS_TEST_GAMES_HPP_

#include "persuasion/game.hpp"

namespace persuasion::testing {

// Prosecutor vs judge with two convict sentences. States: innocent, guilty
// (prior 1/4 guilty). Actions: death (-1), acquit (0), life (1); the sender's
// payoff is the action value, the receiver scores 1 when |action| matches the
// state.
inline GameSpec judge_game() {
  GameSpec g;
  g.states = {{"innocent", Rat(0)}, {"guilty", Rat(1)}};
  g.actions = {{"death", Rat(-1)}, {"acquit", Rat(0)}, {"life", Rat(1)}};
  g.prior = {Rat(3, 4), Rat(1, 4)};
  g.u_sender = {{Rat(-1), Rat(-1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}};
  g.u_receiver = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  g.validate();
  return g;
}

// Binary game where duplicate-free receiver payoffs still fail uniqueness:
// u_sender = -a, u_receiver = a * theta, uniform prior.
inline GameSpec footnote_game() {
  GameSpec g;
  g.states = {{"0", std::nullopt}, {"1", std::nullopt}};
  g.actions = {{"0", std::nullopt}, {"1", std::nullopt}};
  g.prior = {Rat(1, 2), Rat(1, 2)};
  g.u_sender = {{Rat(0), Rat(0)}, {Rat(-1), Rat(-1)}};
  g.u_receiver = {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
  g.validate();
  return g;
}

// Quadratic-loss receiver on three ordered states/actions, sender prefers
// higher actions, uniform prior.
inline GameSpec quadratic_game() {
  GameSpec g;
  g.states = {{"0", Rat(0)}, {"1", Rat(1)}, {"2", Rat(2)}};
  g.actions = {{"0", Rat(0)}, {"1", Rat(1)}, {"2", Rat(2)}};
  g.prior = {Rat(1, 3), Rat(1, 3), Rat(1, 3)};
  g.u_sender.assign(3, {});
  g.u_receiver.assign(3, {});
  for (int a = 0; a < 3; ++a) {
    for (int s = 0; s < 3; ++s) {
      g.u_sender[a].push_back(Rat(a));
      g.u_receiver[a].push_back(Rat(-(a - s) * (a - s)));
    }
  }
  g.validate();
  return g;
}

// Sender indifferent everywhere; uniqueness is trivial.
inline GameSpec constant_sender_game() {
  GameSpec g = judge_game();
  for (auto& row : g.u_sender) {
    for (auto& entry : row) entry = Rat(7);
  }
  return g;
}

inline Belief belief2(const Rat& on_second) {
  return Belief{{1 - on_second, on_second}};
}

}  // namespace persuasion::testing

#endif  // PERSUASION_TESTS_TEST_GAMES_HPP_
