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

#include "persuasion/geometry.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "persuasion/linalg.hpp"
#include "persuasion/parallel.hpp"

namespace persuasion {

namespace {

constexpr int kMaxMaskedStates = 5;
constexpr int kMaxActions = 12;

struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
};

// Vertices of {x : eqs hold, ineqs >= rhs} by enumerating active sets. Every
// vertex has an active set of full rank that extends the equality rows, so
// trying all inequality subsets of the complementary size finds them all.
std::vector<std::vector<Rat>> polytope_vertices(int dim,
                                                const std::vector<LinearConstraint>& eqs,
                                                const std::vector<LinearConstraint>& ineqs) {
  linalg::Matrix eq_matrix;
  std::vector<Rat> eq_rhs;
  for (const auto& c : eqs) {
    eq_matrix.push_back(c.coeffs);
    eq_rhs.push_back(c.rhs);
  }
  int base_rank = eqs.empty() ? 0 : linalg::rank(eq_matrix);
  int need = dim - base_rank;
  if (need < 0) need = 0;

  std::set<std::vector<Rat>> found;
  auto feasible = [&](const std::vector<Rat>& x) {
    for (const auto& c : eqs) {
      Rat lhs = 0;
      for (int j = 0; j < dim; ++j) lhs += c.coeffs[j] * x[j];
      if (lhs != c.rhs) return false;
    }
    for (const auto& c : ineqs) {
      Rat lhs = 0;
      for (int j = 0; j < dim; ++j) lhs += c.coeffs[j] * x[j];
      if (lhs < c.rhs) return false;
    }
    return true;
  };

  int m = static_cast<int>(ineqs.size());
  std::vector<int> pick(need);
  auto try_candidate = [&]() {
    linalg::Matrix sys = eq_matrix;
    std::vector<Rat> rhs = eq_rhs;
    for (int idx : pick) {
      sys.push_back(ineqs[idx].coeffs);
      rhs.push_back(ineqs[idx].rhs);
    }
    if (sys.empty()) return;
    auto x = linalg::solve_unique(sys, rhs);
    if (x && feasible(*x)) found.insert(*x);
  };

  if (need == 0) {
    try_candidate();
  } else {
    // Iterative combination enumeration over inequality indices.
    if (m < need) return {};
    for (int i = 0; i < need; ++i) pick[i] = i;
    for (;;) {
      try_candidate();
      int pos = need - 1;
      while (pos >= 0 && pick[pos] == m - need + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < need; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return {found.begin(), found.end()};
}

std::vector<int> masked_states(const StateMask& mask) {
  std::vector<int> states;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) states.push_back(static_cast<int>(i));
  }
  return states;
}

std::vector<Rat> masked_row(const std::vector<Rat>& full, const std::vector<int>& states) {
  std::vector<Rat> out;
  out.reserve(states.size());
  for (int s : states) out.push_back(full[s]);
  return out;
}

Belief unmask_point(const std::vector<Rat>& x, const std::vector<int>& states, int num_states) {
  Belief b;
  b.probs.assign(num_states, Rat(0));
  for (std::size_t i = 0; i < states.size(); ++i) b.probs[states[i]] = x[i];
  return b;
}

// Receiver-payoff difference row u_R(a,.) - u_R(b,.), masked.
std::vector<Rat> diff_row(const GameSpec& game, int a, int b, const std::vector<int>& states) {
  std::vector<Rat> out;
  out.reserve(states.size());
  for (int s : states) out.push_back(game.u_receiver[a][s] - game.u_receiver[b][s]);
  return out;
}

std::optional<Cell> build_cell(const GameSpec& game, const StateMask& mask,
                               const std::vector<int>& states, const std::vector<int>& tie_set) {
  int d = static_cast<int>(states.size());
  int a0 = tie_set[0];
  std::vector<int> outside;
  for (int b = 0; b < game.num_actions(); ++b) {
    if (!std::binary_search(tie_set.begin(), tie_set.end(), b)) outside.push_back(b);
  }

  // Witness LP: max t over the cell with every outside constraint slack >= t.
  LinearProgram lp(d + 1);
  for (int j = 0; j < d; ++j) lp.set_lower(j, Rat(0));
  lp.set_upper(d, Rat(1));
  lp.objective[d] = 1;
  {
    std::vector<Rat> ones(d + 1, Rat(0));
    for (int j = 0; j < d; ++j) ones[j] = 1;
    lp.add_row(ones, LinearProgram::Rel::Eq, Rat(1));
  }
  for (std::size_t i = 1; i < tie_set.size(); ++i) {
    std::vector<Rat> row = diff_row(game, a0, tie_set[i], states);
    row.push_back(Rat(0));
    lp.add_row(std::move(row), LinearProgram::Rel::Eq, Rat(0));
  }
  for (int b : outside) {
    std::vector<Rat> row = diff_row(game, a0, b, states);
    row.push_back(Rat(-1));
    lp.add_row(std::move(row), LinearProgram::Rel::Ge, Rat(0));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal) return std::nullopt;
  if (!outside.empty() && sol.value <= 0) return std::nullopt;

  Cell cell;
  cell.tie_set = tie_set;
  cell.interior_witness =
      unmask_point(std::vector<Rat>(sol.point.begin(), sol.point.begin() + d), states,
                   game.num_states());
  if (best_responses(game, cell.interior_witness) != tie_set) {
    throw std::logic_error("cell witness tie set mismatch");
  }

  std::vector<LinearConstraint> eqs, ineqs;
  {
    std::vector<Rat> ones(d, Rat(1));
    eqs.push_back({ones, Rat(1)});
  }
  for (std::size_t i = 1; i < tie_set.size(); ++i) {
    eqs.push_back({diff_row(game, a0, tie_set[i], states), Rat(0)});
  }
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> unit(d, Rat(0));
    unit[j] = 1;
    ineqs.push_back({unit, Rat(0)});
  }
  for (int b : outside) {
    ineqs.push_back({diff_row(game, a0, b, states), Rat(0)});
  }
  for (const auto& x : polytope_vertices(d, eqs, ineqs)) {
    cell.vertices.push_back(unmask_point(x, states, game.num_states()));
  }
  return cell;
}

}  // namespace

CellDecomposition enumerate_cells(const GameSpec& game, const StateMask& mask, int jobs) {
  if (static_cast<int>(mask.size()) != game.num_states()) {
    throw ValidationError("mask: size does not match state count");
  }
  std::vector<int> states = masked_states(mask);
  if (states.empty()) throw ValidationError("mask: empty support");
  if (static_cast<int>(states.size()) > kMaxMaskedStates) {
    throw ValidationError("desk-scale limit: cell enumeration supports at most " +
                          std::to_string(kMaxMaskedStates) + " states in the support");
  }
  if (game.num_actions() > kMaxActions) {
    throw ValidationError("desk-scale limit: cell enumeration supports at most " +
                          std::to_string(kMaxActions) + " actions");
  }

  int num_subsets = (1 << game.num_actions()) - 1;
  std::vector<std::optional<Cell>> slots(num_subsets);
  parallel_for(num_subsets, jobs, [&](std::size_t idx) {
    unsigned bits = static_cast<unsigned>(idx) + 1;
    std::vector<int> tie_set;
    for (int a = 0; a < game.num_actions(); ++a) {
      if (bits & (1u << a)) tie_set.push_back(a);
    }
    slots[idx] = build_cell(game, mask, states, tie_set);
  });

  CellDecomposition decomp;
  decomp.mask = mask;
  for (auto& slot : slots) {
    if (slot) decomp.cells.push_back(std::move(*slot));
  }
  std::sort(decomp.cells.begin(), decomp.cells.end(),
            [](const Cell& a, const Cell& b) { return a.tie_set < b.tie_set; });
  return decomp;
}

std::vector<Belief> cell_vertices(const LinearProgram& region) {
  int d = region.num_vars;
  if (d > kMaxMaskedStates) {
    throw ValidationError("desk-scale limit: vertex enumeration supports at most " +
                          std::to_string(kMaxMaskedStates) + " states");
  }
  std::vector<LinearConstraint> eqs, ineqs;
  for (const auto& row : region.rows) {
    switch (row.rel) {
      case LinearProgram::Rel::Eq:
        eqs.push_back({row.coeffs, row.rhs});
        break;
      case LinearProgram::Rel::Ge:
        ineqs.push_back({row.coeffs, row.rhs});
        break;
      case LinearProgram::Rel::Le: {
        std::vector<Rat> neg(row.coeffs);
        for (auto& c : neg) c = -c;
        ineqs.push_back({neg, -row.rhs});
        break;
      }
    }
  }
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> unit(d, Rat(0));
    unit[j] = 1;
    if (region.lower[j]) ineqs.push_back({unit, *region.lower[j]});
    if (region.upper[j]) {
      std::vector<Rat> neg(d, Rat(0));
      neg[j] = -1;
      ineqs.push_back({neg, -*region.upper[j]});
    }
  }

  std::vector<Belief> out;
  for (const auto& x : polytope_vertices(d, eqs, ineqs)) {
    Rat total = 0;
    for (const auto& v : x) {
      if (v < 0) throw ValidationError("cell_vertices: region leaves the simplex");
      total += v;
    }
    if (total != 1) throw ValidationError("cell_vertices: region leaves the simplex");
    out.push_back(Belief{x});
  }
  return out;
}

std::vector<Generator> upper_generators(const GameSpec& game, const CellDecomposition& decomp) {
  std::vector<Generator> gens;
  std::set<std::pair<std::vector<Rat>, Rat>> seen;
  for (std::size_t c = 0; c < decomp.cells.size(); ++c) {
    const Cell& cell = decomp.cells[c];
    for (const auto& vertex : cell.vertices) {
      Rat value = game.sender_payoff(cell.tie_set[0], vertex);
      for (std::size_t i = 1; i < cell.tie_set.size(); ++i) {
        value = std::max(value, game.sender_payoff(cell.tie_set[i], vertex));
      }
      if (!seen.insert({vertex.probs, value}).second) continue;
      gens.push_back(Generator{vertex, value, cell.tie_set, GeneratorKind::Upper,
                               static_cast<int>(c), -1});
    }
  }
  return gens;
}

std::vector<Generator> lower_generators(const GameSpec& game, const CellDecomposition& decomp) {
  std::vector<int> states = masked_states(decomp.mask);
  int d = static_cast<int>(states.size());
  std::vector<Generator> gens;
  std::set<std::pair<std::vector<Rat>, Rat>> seen;

  for (std::size_t c = 0; c < decomp.cells.size(); ++c) {
    const Cell& cell = decomp.cells[c];
    int a0 = cell.tie_set[0];
    std::vector<int> outside;
    for (int b = 0; b < game.num_actions(); ++b) {
      if (!std::binary_search(cell.tie_set.begin(), cell.tie_set.end(), b)) outside.push_back(b);
    }

    std::vector<LinearConstraint> eqs, base_ineqs;
    {
      std::vector<Rat> ones(d, Rat(1));
      eqs.push_back({ones, Rat(1)});
    }
    for (std::size_t i = 1; i < cell.tie_set.size(); ++i) {
      eqs.push_back({diff_row(game, a0, cell.tie_set[i], states), Rat(0)});
    }
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> unit(d, Rat(0));
      unit[j] = 1;
      base_ineqs.push_back({unit, Rat(0)});
    }
    for (int b : outside) {
      base_ineqs.push_back({diff_row(game, a0, b, states), Rat(0)});
    }

    // w restricted to the cell is the min over the tie set of the expected
    // sender payoff: a concave piecewise-linear function. It is linear on the
    // sub-polytope where one action attains the min, so generators come from
    // those pieces, not the cell itself (the min can switch inside the cell).
    for (int a : cell.tie_set) {
      std::vector<LinearConstraint> ineqs = base_ineqs;
      for (int other : cell.tie_set) {
        if (other == a) continue;
        std::vector<Rat> row;
        row.reserve(d);
        for (int s : states) row.push_back(game.u_sender[other][s] - game.u_sender[a][s]);
        ineqs.push_back({row, Rat(0)});
      }
      for (const auto& x : polytope_vertices(d, eqs, ineqs)) {
        Belief point = unmask_point(x, states, game.num_states());
        Rat value = game.sender_payoff(a, point);
        if (!seen.insert({point.probs, value}).second) continue;
        gens.push_back(Generator{point, value, cell.tie_set, GeneratorKind::Lower,
                                 static_cast<int>(c), a});
      }
    }
  }
  return gens;
}

std::vector<Belief> cell_boundary_beliefs(const CellDecomposition& decomp) {
  std::set<std::vector<Rat>> seen;
  std::vector<Belief> out;
  for (const auto& cell : decomp.cells) {
    for (const auto& vertex : cell.vertices) {
      if (seen.insert(vertex.probs).second) out.push_back(vertex);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace persuasion
