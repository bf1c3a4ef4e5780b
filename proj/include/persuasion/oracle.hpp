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

#ifndef PERSUASION_ORACLE_HPP_
#define PERSUASION_ORACLE_HPP_

#include <cstdint>

#include "persuasion/game.hpp"
#include "persuasion/geometry.hpp"

namespace persuasion {

// Brute-force approximations independent of the cell/generator machinery:
// policies are restricted to the rational grid {k/n} on the prior's support
// face, with v and w evaluated exactly at each grid point (exact tie sets).
// Both oracles are therefore lower bounds for their exact envelopes; the gap
// is at most oracle_gap_constant(game) / n and shrinks (weakly) whenever n
// doubles, because doubling refines the grid.
struct GridSpec {
  int resolution;  // n >= 2
  int dimension;   // number of supported states

  void validate() const;
  // C(n + d - 1, d - 1), guarded at 2e6 points.
  unsigned long long point_count() const;
};

Rat grid_cav(const GameSpec& game, const Belief& prior, int n, GeneratorKind kind, int jobs = 1);

struct BruteForceInterval {
  Rat lo;
  Rat hi;
  Rat error_bar;  // oracle_gap_constant(game) / n
};

BruteForceInterval brute_force_interval(const GameSpec& game, const Belief& prior, int n,
                                        int jobs = 1);

// The documented Lipschitz-style constant: 4 * |Θ| * max |u_sender entry|.
Rat oracle_gap_constant(const GameSpec& game);

// Deterministic seeded game: payoff entries iid uniform on
// {0, 1/denom, ..., denom^2/denom} shifted down by denom/2 (sign-varied),
// uniform prior, labels s0.., a0... Bit-for-bit reproducible in the seed.
GameSpec random_game(std::uint64_t seed, int nstates, int nactions, long denom);

}  // namespace persuasion

#endif  // PERSUASION_ORACLE_HPP_
