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

#ifndef PERSUASION_DIAGNOSTICS_HPP_
#define PERSUASION_DIAGNOSTICS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "persuasion/concavify.hpp"
#include "persuasion/game.hpp"

namespace persuasion {

// Actions that are the receiver's unique best response at some belief with
// support inside the mask: a is included iff the LP maximizing the minimum
// strict advantage of a over all other actions has a strictly positive
// optimum.
std::vector<int> potentially_unique_actions(const GameSpec& game, const StateMask& mask);

// The potentially-unique-best-response property at mu: the sender's best tied
// payoff is matched by an action that is also potentially uniquely optimal.
// Plain uses the support of the game's prior as the mask; strong uses the
// support of mu itself.
bool pubr_at(const GameSpec& game, const Belief& mu, bool strong);

struct Theorem1Result {
  bool applies = false;
  std::vector<Belief> D;  // support of the optimal favorable policy
  bool strong_holds = false;
  std::vector<int> potentially_unique;     // A^U over the prior's support
  std::vector<std::size_t> failing_points;  // indices into D
  // Points passing because the sender is exactly indifferent across the tie
  // set (v == w there), where selection is irrelevant.
  std::vector<std::size_t> indifferent_points;
};

// Applies the PUBR sufficient condition with D = the support of the optimal
// favorable policy, which is persuasion sufficient by construction.
Theorem1Result theorem1_verdict(const GameSpec& game, const Belief& prior);

struct NoTiesResult {
  bool holds = false;
  std::optional<std::vector<int>> failing_tie_set;
  std::optional<Belief> failing_vertex;
};

// True iff on every cell with two or more tied actions the sender's expected
// payoffs coincide as linear functions (vertex equality suffices).
NoTiesResult no_relevant_ties_report(const GameSpec& game, int jobs = 1);
bool no_relevant_ties(const GameSpec& game);

struct GlobalUniquenessResult {
  bool holds = false;
  std::optional<Belief> failing_vertex;
  Rat failing_upper;  // the cell's upper piece value at the vertex
  Rat failing_cavw;   // w-hat at the vertex
};

// Uniqueness for every prior: w-hat >= v everywhere, checked at cell
// vertices. Sufficient because (upper piece - w-hat) is convex on each cell,
// so its maximum sits at a vertex.
GlobalUniquenessResult global_uniqueness_report(const GameSpec& game, int jobs = 1);
bool global_uniqueness(const GameSpec& game);

struct GenericityReport {
  struct Entry {
    int action;
    std::vector<int> state_subset;
    Rat phi;
  };
  bool in_U_R = false;
  std::vector<Entry> phi_values;           // every (action, nonempty subset) index
  std::vector<std::size_t> failing_indices;  // entries with phi exactly 0
};

// phi(a, subset) = max over beliefs on the subset of the minimum payoff
// advantage of a over every other action; membership in the generic class
// requires every phi to be nonzero exactly.
GenericityReport genericity_check(const GameSpec& game, int jobs = 1);

enum class QuasiCertificate {
  SenderMonotone,
  SenderConvex,
  BinaryActions,
  ReceiverConcave,
  SampledOnly,
  Failed,
};

struct OrderedReport {
  enum class Status { Yes, No, Uncertified };
  Status is_ordered = Status::Uncertified;
  bool has_positions = false;
  bool increasing_differences = false;
  QuasiCertificate quasi = QuasiCertificate::SampledOnly;
  bool boundary_condition = false;
  bool theorem2_applies = false;
  std::optional<Belief> quasi_counterexample;
  std::string note;
};

// Ordered-model checks: strictly increasing differences of u_receiver over
// position-sorted pairs, the per-belief quasiconcavity/quasiconvexity
// condition (certified only through structural sufficient conditions, with a
// sampling fallback that can falsify but never certify), and the boundary
// condition on the prior's extreme states.
OrderedReport ordered_check(const GameSpec& game, const Belief& prior);

struct UniquenessVerdict {
  enum class Verdict { Unique, NonUnique, Inconclusive };
  enum class WinningTest { None, NoTies, PubrTheorem, Ordered, Global, IntervalWidthZero };

  Verdict verdict = Verdict::Inconclusive;
  WinningTest winning_test = WinningTest::None;
  PayoffInterval interval;  // always computed; ground truth
  std::optional<NoTiesResult> no_ties;
  std::optional<Theorem1Result> theorem1;
  std::optional<OrderedReport> ordered;
  std::optional<GlobalUniquenessResult> global;
};

// Runs the battery cheap-first (no-ties, PUBR, ordered, global), stops at the
// first success, and always computes the exact interval last. Every
// sufficient test is cross-validated against the interval on every run.
UniquenessVerdict analyze(const GameSpec& game, const Belief& prior, int jobs = 1);

const char* to_string(UniquenessVerdict::Verdict verdict);
const char* to_string(UniquenessVerdict::WinningTest test);
const char* to_string(QuasiCertificate cert);
const char* to_string(OrderedReport::Status status);

}  // namespace persuasion

#endif  // PERSUASION_DIAGNOSTICS_HPP_
