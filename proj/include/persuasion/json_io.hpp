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

#ifndef PERSUASION_JSON_IO_HPP_
#define PERSUASION_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "persuasion/concavify.hpp"
#include "persuasion/credibility.hpp"
#include "persuasion/diagnostics.hpp"
#include "persuasion/game.hpp"
#include "persuasion/oracle.hpp"

namespace persuasion {

using Json = nlohmann::ordered_json;

// Game documents: {"states": [{"label", "position"?} | "label", ...],
// "actions": likewise, "prior": [rational, ...], "u_sender" and "u_receiver"
// row-major |A| x |Θ|}. Rationals are strings "p", "p/q", or decimals;
// JSON integers are exact; JSON floats go through their shortest
// round-trip decimal representation.
GameSpec game_from_json(const Json& doc);
GameSpec load_game(const std::string& text);
GameSpec load_game_file(const std::string& path);
Json game_to_json(const GameSpec& game);

// Report documents. Every rational is emitted as an exact "p/q" string; the
// sibling "*_approx" fields carry display-only decimals.
Json belief_to_json(const GameSpec& game, const Belief& belief);
Json policy_to_json(const GameSpec& game, const InformationPolicy& policy);
Json interval_to_json(const GameSpec& game, const PayoffInterval& interval);
Json witness_to_json(const GameSpec& game, const EquilibriumWitness& witness);
Json verdict_to_json(const GameSpec& game, const UniquenessVerdict& verdict);
Json theorem1_to_json(const GameSpec& game, const Theorem1Result& result);
Json no_ties_to_json(const GameSpec& game, const NoTiesResult& result);
Json global_to_json(const GameSpec& game, const GlobalUniquenessResult& result);
Json genericity_to_json(const GameSpec& game, const GenericityReport& report);
Json ordered_to_json(const GameSpec& game, const OrderedReport& report);
Json credibility_to_json(const GameSpec& game, const CredibilityReport& report);
Json oracle_to_json(const GameSpec& game, const BruteForceInterval& approx,
                    const PayoffInterval& exact, int n);

// Figure data as comma-separated text: one header line, then per-row exact
// fractions and display decimals.
std::string figure_csv(const std::vector<FigureRow>& rows);

}  // namespace persuasion

#endif  // PERSUASION_JSON_IO_HPP_
