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

#include "persuasion/policy.hpp"

#include <map>
#include <stdexcept>

#include "persuasion/linalg.hpp"

namespace persuasion {

InformationPolicy make_policy(std::vector<std::pair<Belief, Rat>> support) {
  std::map<std::vector<Rat>, Rat> merged;
  std::size_t dim = 0;
  for (auto& [belief, weight] : support) {
    if (weight == 0) continue;
    if (weight < 0) throw ValidationError("policy: negative weight");
    if (dim == 0) dim = belief.probs.size();
    if (belief.probs.size() != dim) {
      throw ValidationError("policy: support beliefs of mixed dimension");
    }
    Rat total = 0;
    for (const auto& p : belief.probs) {
      if (p < 0) throw ValidationError("policy: support belief off the simplex");
      total += p;
    }
    if (total != 1) throw ValidationError("policy: support belief off the simplex");
    merged[belief.probs] += weight;
  }
  if (merged.empty()) throw ValidationError("policy: empty support");

  InformationPolicy policy;
  Rat mass = 0;
  policy.barycenter.probs.assign(dim, Rat(0));
  for (auto& [probs, weight] : merged) {
    mass += weight;
    for (std::size_t i = 0; i < dim; ++i) policy.barycenter.probs[i] += weight * probs[i];
    policy.support.push_back({Belief{probs}, weight});
  }
  if (mass != 1) {
    throw ValidationError("policy: weights sum to " + to_fraction_string(mass) + ", expected 1");
  }
  return policy;
}

void validate_policy(const GameSpec& game, const InformationPolicy& policy) {
  if (policy.support.empty()) throw ValidationError("policy: empty support");
  for (const auto& [belief, weight] : policy.support) {
    if (weight <= 0) throw ValidationError("policy: nonpositive weight");
    validate_belief(game, belief);
  }
}

InformationPolicy reduce_support(const InformationPolicy& policy,
                                 const std::vector<Rat>& point_values) {
  if (point_values.size() != policy.support.size()) {
    throw ValidationError("reduce_support: value list length mismatch");
  }
  std::vector<Belief> points;
  std::vector<Rat> weights, values;
  for (std::size_t i = 0; i < policy.support.size(); ++i) {
    points.push_back(policy.support[i].first);
    weights.push_back(policy.support[i].second);
    values.push_back(point_values[i]);
  }

  std::size_t dim = points.empty() ? 0 : points[0].probs.size();
  for (;;) {
    if (points.size() <= 1) break;
    // Columns (mu_i, 1); a kernel vector is an affine dependency.
    linalg::Matrix m(dim + 1, std::vector<Rat>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t r = 0; r < dim; ++r) m[r][i] = points[i].probs[r];
      m[dim][i] = 1;
    }
    auto dep = linalg::kernel_vector(m);
    if (!dep) break;

    std::vector<Rat>& c = *dep;
    Rat rate = 0;
    for (std::size_t i = 0; i < c.size(); ++i) rate += c[i] * values[i];
    if (rate < 0) {
      for (auto& ci : c) ci = -ci;
    }
    // Step until the first weight reaches zero; a negative component exists
    // because the dependency coefficients sum to zero.
    Rat step;
    bool have_step = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= 0) continue;
      Rat limit = weights[i] / -c[i];
      if (!have_step || limit < step) {
        step = limit;
        have_step = true;
      }
    }
    if (!have_step) throw std::logic_error("reduce_support: dependency without negative part");

    std::vector<Belief> next_points;
    std::vector<Rat> next_weights, next_values;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Rat w = weights[i] + step * c[i];
      if (w == 0) continue;
      next_points.push_back(points[i]);
      next_weights.push_back(w);
      next_values.push_back(values[i]);
    }
    points = std::move(next_points);
    weights = std::move(next_weights);
    values = std::move(next_values);
  }

  std::vector<std::pair<Belief, Rat>> support;
  for (std::size_t i = 0; i < points.size(); ++i) support.push_back({points[i], weights[i]});
  return make_policy(std::move(support));
}

}  // namespace persuasion
