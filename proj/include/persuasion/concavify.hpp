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

#ifndef PERSUASION_CONCAVIFY_HPP_
#define PERSUASION_CONCAVIFY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "persuasion/game.hpp"
#include "persuasion/geometry.hpp"
#include "persuasion/policy.hpp"

namespace persuasion {

struct TieBreakRule {
  enum class Kind { Favorable, Adversarial, Mixed };
  Kind kind = Kind::Favorable;
  // Mixed: a single scalar, or one entry per support point.
  std::vector<Rat> zeta;

  static TieBreakRule favorable() { return {Kind::Favorable, {}}; }
  static TieBreakRule adversarial() { return {Kind::Adversarial, {}}; }
  static TieBreakRule mixed(Rat z) { return {Kind::Mixed, {std::move(z)}}; }
  static TieBreakRule mixed(std::vector<Rat> z) { return {Kind::Mixed, std::move(z)}; }
};

// Expected sender payoff of the policy: sum of weight * (v, w, or
// (1-zeta) w + zeta v) at each support belief. Mixed zeta must lie in [0,1].
Rat evaluate_policy(const GameSpec& game, const InformationPolicy& policy,
                    const TieBreakRule& rule);

struct CavUpperResult {
  Rat value;                 // v-hat(prior)
  InformationPolicy policy;  // optimal, <= |Θ| support points
};

// v-hat(prior): the concave envelope of v at the prior, as an exact LP over
// upper generators. The returned policy evaluates to the value exactly under
// favorable tie-breaking.
CavUpperResult cav_upper(const GameSpec& game, const Belief& prior, int jobs = 1);
CavUpperResult cav_upper_with(const GameSpec& game, const CellDecomposition& decomp,
                              const Belief& prior);

// Independent cross-check: the standard obedience/recommendation LP over
// state-action mass variables. Equals cav_upper exactly on every instance.
Rat cav_upper_obedience(const GameSpec& game, const Belief& prior);

struct CavLowerResult {
  Rat value;                  // w-hat(prior)
  InformationPolicy witness;  // exactly optimal if attained, else eps-optimal
  bool attained;
  Rat epsilon;     // value - evaluate(witness, adversarial); 0 when attained
  Rat pull_delta;  // interior pull used for the eps-witness; 0 when attained
};

// w-hat(prior): the supremum over information policies of the expected
// adversarial value, as an exact LP over lower generators (cell-closure
// values). `attained` reports whether some policy achieves the supremum
// exactly; when it does not, the witness pulls each offending support point a
// rational step toward its cell's interior witness and the exact shortfall is
// reported in epsilon.
CavLowerResult cav_lower(const GameSpec& game, const Belief& prior, int jobs = 1);
CavLowerResult cav_lower_with(const GameSpec& game, const CellDecomposition& decomp,
                              const Belief& prior);

// Value-only fast path (skips attainment analysis and witnesses).
Rat cav_lower_value(const GameSpec& game, const Belief& prior, int jobs = 1);
Rat cav_lower_value_with(const GameSpec& game, const CellDecomposition& decomp,
                         const Belief& prior);

// The equilibrium sender payoff set [w-hat(prior), v-hat(prior)] with
// attainment metadata for the lower end.
struct PayoffInterval {
  Rat lo;
  Rat hi;
  bool lo_attained = false;
  Rat lo_epsilon;
  Rat lo_pull_delta;
  InformationPolicy lo_witness;
  InformationPolicy hi_witness;

  Rat width() const { return hi - lo; }
};

PayoffInterval equilibrium_interval(const GameSpec& game, const Belief& prior, int jobs = 1);

struct RestrictedCavResult {
  bool feasible = false;  // false when the prior is outside conv(support)
  Rat value;
};

// Best favorable-selection payoff over policies supported on the finite set D.
RestrictedCavResult cav_restricted(const GameSpec& game, const Belief& prior,
                                   const std::vector<Belief>& D);

// True iff the restricted optimum equals v-hat(prior) exactly.
bool check_persuasion_sufficient(const GameSpec& game, const Belief& prior,
                                 const std::vector<Belief>& D);

// An explicit equilibrium achieving sender payoff `target`: the optimal
// favorable policy degraded toward the prior (p_lambda), with the receiver
// mixing adversarial and favorable selections with weight zeta.
struct EquilibriumWitness {
  Rat target;
  Rat lambda;
  InformationPolicy policy;  // p_lambda
  Rat zeta;
  Rat realized_payoff;  // (1-zeta) \int w dp + zeta \int v dp == target
};

// Requires target in [w-hat(prior), v-hat(prior)]. The feasible lambda is
// found by an exact breakpoint scan: tie sets and sender argmins along each
// support segment change at finitely many rational lambdas, and the policy's
// value interval is affine in lambda between consecutive breakpoints.
EquilibriumWitness equilibrium_witness(const GameSpec& game, const Belief& prior,
                                       const Rat& target);

// One row of the |Θ|=2 figure data: pointwise values and both envelopes at
// mu = probability of the second state (or of edge.second for edge slices).
struct FigureRow {
  Rat mu;
  Rat v;
  Rat w;
  Rat cavv;
  Rat cavw;
};

// n >= 2 evenly spaced sample points (step 1/(n-1)) plus every cell-boundary
// belief on the segment. Games with more than two states require `edge`.
std::vector<FigureRow> figure_rows(const GameSpec& game, int n,
                                   std::optional<std::pair<int, int>> edge = std::nullopt,
                                   int jobs = 1);

}  // namespace persuasion

#endif  // PERSUASION_CONCAVIFY_HPP_
