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

#include "persuasion/concavify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "persuasion/lp.hpp"
#include "persuasion/parallel.hpp"

namespace persuasion {

namespace {

std::vector<int> masked_states(const StateMask& mask) {
  std::vector<int> states;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) states.push_back(static_cast<int>(i));
  }
  return states;
}

void require_matching_mask(const CellDecomposition& decomp, const Belief& prior) {
  if (decomp.mask != support_mask(prior)) {
    throw ValidationError("decomposition mask does not match the prior's support");
  }
}

struct GeneratorLpResult {
  bool feasible = false;
  Rat value;
  std::vector<std::pair<Belief, Rat>> support;  // lambda > 0
  std::vector<Rat> support_values;
};

// max sum(lambda * value) s.t. sum(lambda * point) = prior, lambda >= 0.
// The mass constraint sum(lambda) = 1 is implied but kept explicit.
GeneratorLpResult solve_generator_lp(const std::vector<Belief>& points,
                                     const std::vector<Rat>& values, const Belief& prior,
                                     const std::vector<int>& states) {
  int n = static_cast<int>(points.size());
  LinearProgram lp(n);
  for (int j = 0; j < n; ++j) {
    lp.set_lower(j, Rat(0));
    lp.objective[j] = values[j];
  }
  for (int s : states) {
    std::vector<Rat> row(n);
    for (int j = 0; j < n; ++j) row[j] = points[j].probs[s];
    lp.add_row(std::move(row), LinearProgram::Rel::Eq, prior.probs[s]);
  }
  lp.add_row(std::vector<Rat>(n, Rat(1)), LinearProgram::Rel::Eq, Rat(1));

  LpSolution sol = solve_lp(lp);
  GeneratorLpResult out;
  if (sol.status != LpSolution::Status::Optimal) return out;
  out.feasible = true;
  out.value = sol.value;
  for (int j = 0; j < n; ++j) {
    if (sol.point[j] > 0) {
      out.support.push_back({points[j], sol.point[j]});
      out.support_values.push_back(values[j]);
    }
  }
  return out;
}

InformationPolicy reduced_policy(const GeneratorLpResult& lp_result) {
  InformationPolicy policy = make_policy(lp_result.support);
  // A basic solution has distinct points already; align values by lookup.
  std::map<std::vector<Rat>, Rat> value_of;
  for (std::size_t i = 0; i < lp_result.support.size(); ++i) {
    value_of[lp_result.support[i].first.probs] = lp_result.support_values[i];
  }
  std::vector<Rat> values;
  for (const auto& [belief, weight] : policy.support) values.push_back(value_of.at(belief.probs));
  return reduce_support(policy, values);
}

// ---------------------------------------------------------------------------
// Attainment of the lower supremum.
//
// A finite-support policy achieves sum(weight * w) with each support point
// carrying the w-value of its own exact-tie-set region. Writing z_P for the
// weight-scaled point mass assigned to piece P = (cell, sender-worst action),
// the supremum is attained iff masses z_P exist with sum z_P = prior,
// sum u_S(a_P) . z_P = w-hat(prior), each z_P in the piece's cone with the
// cell's outside-action constraints strictly slack whenever z_P != 0. The
// per-piece "zero or strictly interior" disjunction is searched exactly, with
// an LP relaxation pruning the search tree.
// ---------------------------------------------------------------------------

struct Piece {
  int cell_index;
  int action;
  std::vector<std::vector<Rat>> tie_eqs;     // rows == 0
  std::vector<std::vector<Rat>> outside_ge;  // rows >= 0; >= t when used
  std::vector<std::vector<Rat>> argmin_ge;   // rows >= 0
  std::vector<Rat> value_row;                // masked u_S(action)
};

struct AttainmentSearch {
  const GameSpec* game;
  std::vector<int> states;
  std::vector<Rat> prior_masked;
  Rat target;
  std::vector<Piece> pieces;
  int nodes = 0;

  static constexpr int kNodeCap = 20000;

  enum : char { kUndecided = 0, kUsed = 1, kUnused = 2 };

  // Relaxation: undecided pieces keep weak constraints; used pieces get the
  // common strictness variable t; unused pieces are dropped. Maximizes t.
  std::optional<LpSolution> relax(const std::vector<char>& status,
                                  std::vector<int>* var_base) const {
    int d = static_cast<int>(states.size());
    std::vector<int> base(pieces.size(), -1);
    int nvars = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (status[p] == kUnused) continue;
      base[p] = nvars;
      nvars += d;
    }
    int t_var = nvars;
    LinearProgram lp(nvars + 1);
    for (int j = 0; j < nvars; ++j) lp.set_lower(j, Rat(0));
    lp.set_upper(t_var, Rat(1));
    lp.objective[t_var] = 1;

    for (int i = 0; i < d; ++i) {
      std::vector<Rat> row(nvars + 1, Rat(0));
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (base[p] >= 0) row[base[p] + i] = 1;
      }
      lp.add_row(std::move(row), LinearProgram::Rel::Eq, prior_masked[i]);
    }
    {
      std::vector<Rat> row(nvars + 1, Rat(0));
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (base[p] < 0) continue;
        for (int i = 0; i < d; ++i) row[base[p] + i] = pieces[p].value_row[i];
      }
      lp.add_row(std::move(row), LinearProgram::Rel::Eq, target);
    }
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (base[p] < 0) continue;
      auto block_row = [&](const std::vector<Rat>& coeffs, const Rat& t_coeff) {
        std::vector<Rat> row(nvars + 1, Rat(0));
        for (int i = 0; i < d; ++i) row[base[p] + i] = coeffs[i];
        row[t_var] = t_coeff;
        return row;
      };
      for (const auto& r : pieces[p].tie_eqs) {
        lp.add_row(block_row(r, Rat(0)), LinearProgram::Rel::Eq, Rat(0));
      }
      Rat strict_coeff = status[p] == kUsed ? Rat(-1) : Rat(0);
      for (const auto& r : pieces[p].outside_ge) {
        lp.add_row(block_row(r, strict_coeff), LinearProgram::Rel::Ge, Rat(0));
      }
      for (const auto& r : pieces[p].argmin_ge) {
        lp.add_row(block_row(r, Rat(0)), LinearProgram::Rel::Ge, Rat(0));
      }
      if (status[p] == kUsed) {
        lp.add_row(block_row(std::vector<Rat>(d, Rat(1)), Rat(-1)), LinearProgram::Rel::Ge,
                   Rat(0));
      }
    }

    LpSolution sol = solve_lp(lp);
    if (sol.status != LpSolution::Status::Optimal) return std::nullopt;
    if (var_base) *var_base = base;
    return sol;
  }

  bool search(std::vector<char>& status, std::vector<std::pair<Belief, Rat>>* witness) {
    if (++nodes > kNodeCap) {
      throw std::logic_error("attainment search exceeded the desk-scale node cap");
    }
    std::vector<int> base;
    auto sol = relax(status, &base);
    if (!sol || sol->value <= 0) return false;

    int undecided = -1;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (status[p] == kUndecided) {
        undecided = static_cast<int>(p);
        break;
      }
    }
    if (undecided < 0) {
      int d = static_cast<int>(states.size());
      witness->clear();
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (status[p] != kUsed) continue;
        Rat mass = 0;
        for (int i = 0; i < d; ++i) mass += sol->point[base[p] + i];
        Belief point;
        point.probs.assign(game->num_states(), Rat(0));
        for (int i = 0; i < d; ++i) point.probs[states[i]] = sol->point[base[p] + i] / mass;
        witness->push_back({std::move(point), mass});
      }
      return true;
    }

    Rat mass = 0;
    if (base[undecided] >= 0) {
      for (std::size_t i = 0; i < states.size(); ++i) mass += sol->point[base[undecided] + i];
    }
    char first = mass > 0 ? kUsed : kUnused;
    char second = first == kUsed ? kUnused : kUsed;
    for (char choice : {first, second}) {
      status[undecided] = choice;
      if (search(status, witness)) {
        status[undecided] = kUndecided;
        return true;
      }
    }
    status[undecided] = kUndecided;
    return false;
  }
};

std::vector<Piece> build_pieces(const GameSpec& game, const CellDecomposition& decomp,
                                const std::vector<int>& states) {
  std::vector<Piece> pieces;
  for (std::size_t c = 0; c < decomp.cells.size(); ++c) {
    const Cell& cell = decomp.cells[c];
    int a0 = cell.tie_set[0];
    std::vector<std::vector<Rat>> tie_eqs, outside_ge;
    for (std::size_t i = 1; i < cell.tie_set.size(); ++i) {
      std::vector<Rat> row;
      for (int s : states) {
        row.push_back(game.u_receiver[a0][s] - game.u_receiver[cell.tie_set[i]][s]);
      }
      tie_eqs.push_back(std::move(row));
    }
    for (int b = 0; b < game.num_actions(); ++b) {
      if (std::binary_search(cell.tie_set.begin(), cell.tie_set.end(), b)) continue;
      std::vector<Rat> row;
      for (int s : states) row.push_back(game.u_receiver[a0][s] - game.u_receiver[b][s]);
      outside_ge.push_back(std::move(row));
    }
    for (int a : cell.tie_set) {
      Piece piece;
      piece.cell_index = static_cast<int>(c);
      piece.action = a;
      piece.tie_eqs = tie_eqs;
      piece.outside_ge = outside_ge;
      for (int other : cell.tie_set) {
        if (other == a) continue;
        std::vector<Rat> row;
        for (int s : states) row.push_back(game.u_sender[other][s] - game.u_sender[a][s]);
        piece.argmin_ge.push_back(std::move(row));
      }
      for (int s : states) piece.value_row.push_back(game.u_sender[a][s]);
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

struct LowerEngine {
  const GameSpec& game;
  const CellDecomposition& decomp;
  std::vector<int> states;
  std::vector<Generator> gens;

  LowerEngine(const GameSpec& g, const CellDecomposition& d)
      : game(g), decomp(d), states(masked_states(d.mask)), gens(lower_generators(g, d)) {}

  GeneratorLpResult value_lp(const Belief& prior) const {
    std::vector<Belief> points;
    std::vector<Rat> values;
    for (const auto& g : gens) {
      points.push_back(g.point);
      values.push_back(g.value);
    }
    GeneratorLpResult result = solve_generator_lp(points, values, prior, states);
    if (!result.feasible) throw std::logic_error("lower generator LP infeasible");
    return result;
  }

  bool attainment(const Belief& prior, const Rat& target,
                  std::vector<std::pair<Belief, Rat>>* witness) const {
    AttainmentSearch search;
    search.game = &game;
    search.states = states;
    for (int s : states) search.prior_masked.push_back(prior.probs[s]);
    search.target = target;
    search.pieces = build_pieces(game, decomp, states);

    // Pieces that cannot carry mass on the optimal face are dropped before
    // branching.
    std::vector<Piece> kept;
    for (std::size_t p = 0; p < search.pieces.size(); ++p) {
      if (max_mass(search, static_cast<int>(p)) > 0) kept.push_back(search.pieces[p]);
    }
    search.pieces = std::move(kept);
    std::vector<char> open(search.pieces.size(), AttainmentSearch::kUndecided);
    return search.search(open, witness);
  }

 private:
  // Max mass assignable to piece `target_piece` subject to the weak system.
  static Rat max_mass(const AttainmentSearch& s, int target_piece) {
    int d = static_cast<int>(s.states.size());
    int nvars = static_cast<int>(s.pieces.size()) * d;
    LinearProgram lp(nvars);
    for (int j = 0; j < nvars; ++j) lp.set_lower(j, Rat(0));
    for (int i = 0; i < d; ++i) lp.objective[target_piece * d + i] = 1;
    for (int i = 0; i < d; ++i) {
      std::vector<Rat> row(nvars, Rat(0));
      for (std::size_t p = 0; p < s.pieces.size(); ++p) row[p * d + i] = 1;
      lp.add_row(std::move(row), LinearProgram::Rel::Eq, s.prior_masked[i]);
    }
    {
      std::vector<Rat> row(nvars, Rat(0));
      for (std::size_t p = 0; p < s.pieces.size(); ++p) {
        for (int i = 0; i < d; ++i) row[p * d + i] = s.pieces[p].value_row[i];
      }
      lp.add_row(std::move(row), LinearProgram::Rel::Eq, s.target);
    }
    for (std::size_t p = 0; p < s.pieces.size(); ++p) {
      auto block_row = [&](const std::vector<Rat>& coeffs) {
        std::vector<Rat> row(nvars, Rat(0));
        for (int i = 0; i < d; ++i) row[p * d + i] = coeffs[i];
        return row;
      };
      for (const auto& r : s.pieces[p].tie_eqs) {
        lp.add_row(block_row(r), LinearProgram::Rel::Eq, Rat(0));
      }
      for (const auto& r : s.pieces[p].outside_ge) {
        lp.add_row(block_row(r), LinearProgram::Rel::Ge, Rat(0));
      }
      for (const auto& r : s.pieces[p].argmin_ge) {
        lp.add_row(block_row(r), LinearProgram::Rel::Ge, Rat(0));
      }
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpSolution::Status::Optimal) {
      throw std::logic_error("attainment base system infeasible");
    }
    return sol.value;
  }
};

Rat exact_w(const GameSpec& game, const Belief& point) { return value_lower(game, point); }

}  // namespace

Rat evaluate_policy(const GameSpec& game, const InformationPolicy& policy,
                    const TieBreakRule& rule) {
  validate_policy(game, policy);
  if (rule.kind == TieBreakRule::Kind::Mixed) {
    if (rule.zeta.size() != 1 && rule.zeta.size() != policy.support.size()) {
      throw ValidationError("mixed rule: zeta must be a scalar or one entry per support point");
    }
    for (const auto& z : rule.zeta) {
      if (z < 0 || z > 1) {
        throw ValidationError("mixed rule: zeta " + to_fraction_string(z) + " outside [0,1]");
      }
    }
  }
  Rat total = 0;
  for (std::size_t i = 0; i < policy.support.size(); ++i) {
    const auto& [belief, weight] = policy.support[i];
    switch (rule.kind) {
      case TieBreakRule::Kind::Favorable:
        total += weight * value_upper(game, belief);
        break;
      case TieBreakRule::Kind::Adversarial:
        total += weight * value_lower(game, belief);
        break;
      case TieBreakRule::Kind::Mixed: {
        const Rat& z = rule.zeta.size() == 1 ? rule.zeta[0] : rule.zeta[i];
        total += weight * ((1 - z) * value_lower(game, belief) + z * value_upper(game, belief));
        break;
      }
    }
  }
  return total;
}

CavUpperResult cav_upper_with(const GameSpec& game, const CellDecomposition& decomp,
                              const Belief& prior) {
  require_matching_mask(decomp, prior);
  std::vector<Generator> gens = upper_generators(game, decomp);
  std::vector<Belief> points;
  std::vector<Rat> values;
  for (const auto& g : gens) {
    points.push_back(g.point);
    values.push_back(g.value);
  }
  GeneratorLpResult lp = solve_generator_lp(points, values, prior, masked_states(decomp.mask));
  if (!lp.feasible) throw std::logic_error("upper generator LP infeasible");

  CavUpperResult result;
  result.value = lp.value;
  result.policy = reduced_policy(lp);
  if (evaluate_policy(game, result.policy, TieBreakRule::favorable()) != result.value) {
    throw std::logic_error("upper witness does not evaluate to the optimum");
  }
  return result;
}

CavUpperResult cav_upper(const GameSpec& game, const Belief& prior, int jobs) {
  validate_belief(game, prior);
  CellDecomposition decomp = enumerate_cells(game, support_mask(prior), jobs);
  return cav_upper_with(game, decomp, prior);
}

Rat cav_upper_obedience(const GameSpec& game, const Belief& prior) {
  validate_belief(game, prior);
  std::vector<int> states = masked_states(support_mask(prior));
  int d = static_cast<int>(states.size());
  int na = game.num_actions();
  int n = na * d;  // x(a, theta) for masked theta

  LinearProgram lp(n);
  for (int j = 0; j < n; ++j) lp.set_lower(j, Rat(0));
  for (int a = 0; a < na; ++a) {
    for (int i = 0; i < d; ++i) lp.objective[a * d + i] = game.u_sender[a][states[i]];
  }
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> row(n, Rat(0));
    for (int a = 0; a < na; ++a) row[a * d + i] = 1;
    lp.add_row(std::move(row), LinearProgram::Rel::Eq, prior.probs[states[i]]);
  }
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < na; ++b) {
      if (a == b) continue;
      std::vector<Rat> row(n, Rat(0));
      for (int i = 0; i < d; ++i) {
        row[a * d + i] = game.u_receiver[a][states[i]] - game.u_receiver[b][states[i]];
      }
      lp.add_row(std::move(row), LinearProgram::Rel::Ge, Rat(0));
    }
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal) {
    throw std::logic_error("obedience LP not optimal");
  }
  return sol.value;
}

Rat cav_lower_value_with(const GameSpec& game, const CellDecomposition& decomp,
                         const Belief& prior) {
  require_matching_mask(decomp, prior);
  LowerEngine engine(game, decomp);
  return engine.value_lp(prior).value;
}

Rat cav_lower_value(const GameSpec& game, const Belief& prior, int jobs) {
  validate_belief(game, prior);
  CellDecomposition decomp = enumerate_cells(game, support_mask(prior), jobs);
  return cav_lower_value_with(game, decomp, prior);
}

CavLowerResult cav_lower_with(const GameSpec& game, const CellDecomposition& decomp,
                              const Belief& prior) {
  require_matching_mask(decomp, prior);
  LowerEngine engine(game, decomp);
  GeneratorLpResult lp = engine.value_lp(prior);

  CavLowerResult result;
  result.value = lp.value;

  std::vector<std::pair<Belief, Rat>> attained_support;
  if (engine.attainment(prior, lp.value, &attained_support)) {
    result.attained = true;
    result.epsilon = 0;
    result.pull_delta = 0;
    InformationPolicy witness = make_policy(attained_support);
    std::vector<Rat> values;
    for (const auto& [belief, weight] : witness.support) {
      values.push_back(exact_w(game, belief));
    }
    result.witness = reduce_support(witness, values);
    if (evaluate_policy(game, result.witness, TieBreakRule::adversarial()) != result.value) {
      throw std::logic_error("attained lower witness does not evaluate to the optimum");
    }
    return result;
  }

  // Not attained: pull every generator whose closure value overstates the
  // pointwise w toward its cell's interior witness, where the tie set is the
  // cell's own and w is exact. Halve the pull until the prior stays inside
  // the hull of the adjusted generator set.
  result.attained = false;
  Rat delta(1, 1024);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::map<std::vector<Rat>, Rat> adjusted;  // point -> exact w
    for (const auto& g : engine.gens) {
      Rat w_here = exact_w(game, g.point);
      if (w_here == g.value) {
        adjusted.emplace(g.point.probs, g.value);
        continue;
      }
      const Cell& cell = decomp.cells[g.cell_index];
      Belief pulled;
      pulled.probs.resize(game.num_states());
      for (int s = 0; s < game.num_states(); ++s) {
        pulled.probs[s] =
            g.point.probs[s] + delta * (cell.interior_witness.probs[s] - g.point.probs[s]);
      }
      if (best_responses(game, pulled) != cell.tie_set) {
        throw std::logic_error("pulled point left its cell's relative interior");
      }
      adjusted.emplace(pulled.probs, exact_w(game, pulled));
    }
    std::vector<Belief> points;
    std::vector<Rat> values;
    for (const auto& [probs, value] : adjusted) {
      points.push_back(Belief{probs});
      values.push_back(value);
    }
    GeneratorLpResult pulled_lp =
        solve_generator_lp(points, values, prior, masked_states(decomp.mask));
    if (!pulled_lp.feasible) {
      delta /= 2;
      continue;
    }
    result.pull_delta = delta;
    result.epsilon = result.value - pulled_lp.value;
    if (result.epsilon <= 0) {
      throw std::logic_error("pulled witness contradicts non-attainment");
    }
    result.witness = reduced_policy(pulled_lp);
    if (evaluate_policy(game, result.witness, TieBreakRule::adversarial()) != pulled_lp.value) {
      throw std::logic_error("pulled lower witness does not evaluate exactly");
    }
    return result;
  }
  throw std::logic_error("pull step underflow while building the lower witness");
}

CavLowerResult cav_lower(const GameSpec& game, const Belief& prior, int jobs) {
  validate_belief(game, prior);
  CellDecomposition decomp = enumerate_cells(game, support_mask(prior), jobs);
  return cav_lower_with(game, decomp, prior);
}

PayoffInterval equilibrium_interval(const GameSpec& game, const Belief& prior, int jobs) {
  validate_belief(game, prior);
  CellDecomposition decomp = enumerate_cells(game, support_mask(prior), jobs);
  CavUpperResult upper = cav_upper_with(game, decomp, prior);
  CavLowerResult lower = cav_lower_with(game, decomp, prior);
  if (lower.value > upper.value) {
    throw std::logic_error("lower envelope exceeds upper envelope");
  }
  PayoffInterval interval;
  interval.lo = lower.value;
  interval.hi = upper.value;
  interval.lo_attained = lower.attained;
  interval.lo_epsilon = lower.epsilon;
  interval.lo_pull_delta = lower.pull_delta;
  interval.lo_witness = lower.witness;
  interval.hi_witness = upper.policy;
  return interval;
}

RestrictedCavResult cav_restricted(const GameSpec& game, const Belief& prior,
                                   const std::vector<Belief>& D) {
  validate_belief(game, prior);
  if (D.empty()) throw ValidationError("cav_restricted: D must be nonempty");
  std::vector<Rat> values;
  for (const auto& mu : D) {
    validate_belief(game, mu);
    values.push_back(value_upper(game, mu));
  }
  std::vector<int> all_states;
  for (int s = 0; s < game.num_states(); ++s) all_states.push_back(s);
  GeneratorLpResult lp = solve_generator_lp(D, values, prior, all_states);
  RestrictedCavResult out;
  out.feasible = lp.feasible;
  if (lp.feasible) out.value = lp.value;
  return out;
}

bool check_persuasion_sufficient(const GameSpec& game, const Belief& prior,
                                 const std::vector<Belief>& D) {
  RestrictedCavResult restricted = cav_restricted(game, prior, D);
  if (!restricted.feasible) return false;
  return restricted.value == cav_upper(game, prior).value;
}

namespace {

// Value interval of p_lambda at a given lambda, evaluated pointwise exactly.
std::pair<Rat, Rat> policy_interval_at(const GameSpec& game, const InformationPolicy& base,
                                       const Belief& prior, const Rat& lambda) {
  Rat lo = 0, hi = 0;
  for (const auto& [belief, weight] : base.support) {
    Belief moved;
    moved.probs.resize(game.num_states());
    for (int s = 0; s < game.num_states(); ++s) {
      moved.probs[s] = lambda * belief.probs[s] + (1 - lambda) * prior.probs[s];
    }
    lo += weight * value_lower(game, moved);
    hi += weight * value_upper(game, moved);
  }
  return {lo, hi};
}

}  // namespace

EquilibriumWitness equilibrium_witness(const GameSpec& game, const Belief& prior,
                                       const Rat& target) {
  PayoffInterval interval = equilibrium_interval(game, prior);
  if (target < interval.lo || target > interval.hi) {
    throw ValidationError("witness target " + to_fraction_string(target) +
                          " outside the equilibrium payoff set [" +
                          to_fraction_string(interval.lo) + ", " +
                          to_fraction_string(interval.hi) + "]");
  }
  const InformationPolicy& p1 = interval.hi_witness;

  // Breakpoints: lambdas where some support segment crosses a receiver
  // indifference hyperplane or a sender argmin/argmax switch. Between
  // consecutive breakpoints both value ends are affine in lambda.
  std::set<Rat> breakpoints{Rat(0), Rat(1)};
  auto add_roots = [&](const std::vector<std::vector<Rat>>& payoff, const Belief& point) {
    int n = static_cast<int>(payoff.size());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        Rat c0 = 0, c1 = 0;
        for (int s = 0; s < game.num_states(); ++s) {
          Rat diff = payoff[a][s] - payoff[b][s];
          c0 += diff * prior.probs[s];
          c1 += diff * point.probs[s];
        }
        if (c0 == c1) continue;
        Rat root = c0 / (c0 - c1);
        if (root > 0 && root < 1) breakpoints.insert(root);
      }
    }
  };
  for (const auto& [belief, weight] : p1.support) {
    add_roots(game.u_receiver, belief);
    add_roots(game.u_sender, belief);
  }

  std::vector<Rat> sorted(breakpoints.begin(), breakpoints.end());
  std::optional<Rat> chosen;

  for (const Rat& lambda : sorted) {
    auto [lo, hi] = policy_interval_at(game, p1, prior, lambda);
    if (lo <= target && target <= hi) {
      chosen = lambda;
      break;
    }
  }
  if (!chosen) {
    for (std::size_t k = 0; k + 1 < sorted.size() && !chosen; ++k) {
      const Rat& a = sorted[k];
      const Rat& b = sorted[k + 1];
      Rat third = (b - a) / 3;
      Rat la = a + third, lb = a + 2 * third;
      auto [lo_a, hi_a] = policy_interval_at(game, p1, prior, la);
      auto [lo_b, hi_b] = policy_interval_at(game, p1, prior, lb);
      // Affine interpolation on the open interval (a, b).
      Rat lo_slope = (lo_b - lo_a) / (lb - la);
      Rat hi_slope = (hi_b - hi_a) / (lb - la);
      // Feasible lambda range for lo(lambda) <= target <= hi(lambda).
      Rat range_lo = a, range_hi = b;
      auto clamp_with = [&](const Rat& value_at_la, const Rat& slope, bool is_lower) -> bool {
        // constraint: value_at_la + slope * (lambda - la) {<=,>=} target
        Rat offset = target - value_at_la;
        if (slope == 0) {
          return is_lower ? value_at_la <= target : value_at_la >= target;
        }
        Rat bound = la + offset / slope;
        bool upcross = (slope > 0);
        if (is_lower == upcross) {
          // feasibility to the left of bound
          range_hi = std::min(range_hi, bound);
        } else {
          range_lo = std::max(range_lo, bound);
        }
        return true;
      };
      if (!clamp_with(lo_a, lo_slope, true)) continue;
      if (!clamp_with(hi_a, hi_slope, false)) continue;
      if (range_lo > range_hi) continue;
      Rat pick;
      if (range_lo == range_hi) {
        if (range_lo <= a || range_lo >= b) continue;
        pick = range_lo;
      } else {
        Rat inner_lo = std::max(range_lo, a);
        Rat inner_hi = std::min(range_hi, b);
        pick = (inner_lo + inner_hi) / 2;
        if (pick <= a || pick >= b) continue;
      }
      auto [lo_p, hi_p] = policy_interval_at(game, p1, prior, pick);
      if (lo_p <= target && target <= hi_p) chosen = pick;
    }
  }
  if (!chosen) {
    throw std::logic_error("no lambda found for a target inside the payoff set");
  }

  auto [lo, hi] = policy_interval_at(game, p1, prior, *chosen);
  Rat zeta = 0;
  if (hi != lo) zeta = (target - lo) / (hi - lo);

  std::vector<std::pair<Belief, Rat>> moved_support;
  for (const auto& [belief, weight] : p1.support) {
    Belief moved;
    moved.probs.resize(game.num_states());
    for (int s = 0; s < game.num_states(); ++s) {
      moved.probs[s] = *chosen * belief.probs[s] + (1 - *chosen) * prior.probs[s];
    }
    moved_support.push_back({std::move(moved), weight});
  }

  EquilibriumWitness witness;
  witness.target = target;
  witness.lambda = *chosen;
  witness.policy = make_policy(std::move(moved_support));
  witness.zeta = zeta;
  witness.realized_payoff = (1 - zeta) * lo + zeta * hi;
  if (witness.realized_payoff != target) {
    throw std::logic_error("witness does not realize the target exactly");
  }
  if (evaluate_policy(game, witness.policy, TieBreakRule::mixed(zeta)) != target) {
    throw std::logic_error("witness policy evaluation mismatch");
  }
  return witness;
}

std::vector<FigureRow> figure_rows(const GameSpec& game, int n,
                                   std::optional<std::pair<int, int>> edge, int jobs) {
  if (n < 2) throw ValidationError("figure: need at least 2 sample points");
  int lo_state, hi_state;
  if (game.num_states() == 2) {
    lo_state = 0;
    hi_state = 1;
    if (edge && (edge->first != 0 || edge->second != 1)) {
      throw ValidationError("figure: two-state games only have the edge 0,1");
    }
  } else {
    if (!edge) {
      throw ValidationError("figure: games with more than two states require an edge");
    }
    lo_state = edge->first;
    hi_state = edge->second;
    if (lo_state < 0 || hi_state < 0 || lo_state >= game.num_states() ||
        hi_state >= game.num_states() || lo_state == hi_state) {
      throw ValidationError("figure: edge state indices invalid");
    }
  }

  StateMask edge_mask(game.num_states(), 0);
  edge_mask[lo_state] = 1;
  edge_mask[hi_state] = 1;
  CellDecomposition interior = enumerate_cells(game, edge_mask, jobs);
  StateMask lo_mask(game.num_states(), 0), hi_mask(game.num_states(), 0);
  lo_mask[lo_state] = 1;
  hi_mask[hi_state] = 1;
  CellDecomposition at_lo = enumerate_cells(game, lo_mask, 1);
  CellDecomposition at_hi = enumerate_cells(game, hi_mask, 1);

  std::set<Rat> sample_set;
  for (int k = 0; k < n; ++k) sample_set.insert(make_frac(k, n - 1));
  for (const auto& vertex : cell_boundary_beliefs(interior)) {
    sample_set.insert(vertex.probs[hi_state]);
  }
  std::vector<Rat> samples(sample_set.begin(), sample_set.end());

  std::vector<FigureRow> rows(samples.size());
  parallel_for(samples.size(), jobs, [&](std::size_t i) {
    const Rat& mu = samples[i];
    Belief belief;
    belief.probs.assign(game.num_states(), Rat(0));
    belief.probs[lo_state] = 1 - mu;
    belief.probs[hi_state] = mu;
    const CellDecomposition& decomp = mu == 0 ? at_lo : (mu == 1 ? at_hi : interior);
    FigureRow row;
    row.mu = mu;
    row.v = value_upper(game, belief);
    row.w = value_lower(game, belief);
    row.cavv = cav_upper_with(game, decomp, belief).value;
    row.cavw = cav_lower_value_with(game, decomp, belief);
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace persuasion
