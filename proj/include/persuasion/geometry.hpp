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

#ifndef PERSUASION_GEOMETRY_HPP_
#define PERSUASION_GEOMETRY_HPP_

#include <vector>

#include "persuasion/game.hpp"
#include "persuasion/lp.hpp"

namespace persuasion {

// The closed polytope of beliefs whose receiver best-response set contains
// tie_set, with equality of expected receiver payoffs inside tie_set. The
// interior witness has best_responses == tie_set exactly; beliefs with a
// strictly larger tie set lie on the boundary and belong to their own cell.
struct Cell {
  std::vector<int> tie_set;      // sorted action indices
  std::vector<Belief> vertices;  // deduplicated, sorted
  Belief interior_witness;
};

struct CellDecomposition {
  StateMask mask;
  std::vector<Cell> cells;  // sorted by tie_set
};

// Enumerates every realized exact-tie-set cell of the receiver-indifference
// arrangement on the masked face of the simplex. Candidate tie sets are
// tested by a max-min-slack LP; a candidate survives iff the slack against
// all outside actions is strictly positive somewhere (that argmax point is
// the witness). Desk-scale guards: at most 5 masked states, 12 actions.
CellDecomposition enumerate_cells(const GameSpec& game, const StateMask& mask, int jobs = 1);

// Exact vertex set of the feasible region of `region` (its objective is
// ignored), by brute-force active-set enumeration. The region must lie in
// the belief simplex; intended for |Θ| <= 5.
std::vector<Belief> cell_vertices(const LinearProgram& region);

enum class GeneratorKind { Upper, Lower };

// A (vertex, value) pair feeding the concavification LPs. For upper
// generators the value is max over the source tie set of the expected sender
// payoff at the point; for lower generators it is the min, and the point is a
// vertex of the sub-polytope on which piece_action attains that min (the
// closure value of the lower-semicontinuous w from the cell's relative
// interior).
struct Generator {
  Belief point;
  Rat value;
  std::vector<int> source_tie_set;
  GeneratorKind kind;
  int cell_index;    // into CellDecomposition::cells
  int piece_action;  // lower kind only; -1 for upper
};

std::vector<Generator> upper_generators(const GameSpec& game, const CellDecomposition& decomp);
std::vector<Generator> lower_generators(const GameSpec& game, const CellDecomposition& decomp);

// Serializes cells for the optional debug dump.
std::vector<Belief> cell_boundary_beliefs(const CellDecomposition& decomp);

}  // namespace persuasion

#endif  // PERSUASION_GEOMETRY_HPP_
