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

#ifndef PERSUASION_POLICY_HPP_
#define PERSUASION_POLICY_HPP_

#include <utility>
#include <vector>

#include "persuasion/game.hpp"

namespace persuasion {

// A finitely supported distribution over beliefs with its barycenter cached.
// Weights are positive and sum exactly to 1; support beliefs are distinct.
struct InformationPolicy {
  std::vector<std::pair<Belief, Rat>> support;
  Belief barycenter;
};

// Merges duplicate beliefs, drops zero weights, validates (positive weights
// summing to 1, all beliefs on the simplex and of equal dimension), and
// computes the barycenter.
InformationPolicy make_policy(std::vector<std::pair<Belief, Rat>> support);

void validate_policy(const GameSpec& game, const InformationPolicy& policy);

// Iterated Caratheodory pivoting: while the support is affinely dependent,
// shift weight along a dependency direction chosen so that
// sum(weight * value) does not decrease, until a weight hits zero exactly.
// Preserves the barycenter exactly; the result has affinely independent
// support, hence at most |Θ| points. point_values must align with
// policy.support.
InformationPolicy reduce_support(const InformationPolicy& policy,
                                 const std::vector<Rat>& point_values);

}  // namespace persuasion

#endif  // PERSUASION_POLICY_HPP_
