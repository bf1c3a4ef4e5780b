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

#include "persuasion/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace persuasion {

namespace {

using Rel = LinearProgram::Rel;
using Sense = LinearProgram::Sense;

enum class ColKind { Structural, Slack, Artificial };

// Internal standard form: maximize c'p subject to Np = b (after slack
// insertion and row sign normalization), p >= 0. Variables with a finite
// lower bound are shifted; variables without one are split into a  p - q
// pair. Finite upper bounds become extra rows so their duals are ordinary row
// duals.
struct Tableau {
  int n_internal = 0;            // structural internal columns
  std::vector<int> col_of_var;   // first internal column of original var
  std::vector<bool> var_split;   // true when original var uses a p - q pair
  std::vector<Rat> shift;        // lower bound applied to original var (0 if none)

  std::vector<std::vector<Rat>> body;  // m x total_cols
  std::vector<Rat> rhs;                // m
  std::vector<Rat> objrow;             // total_cols, stores z_j - c_j
  Rat objval;                          // current objective value

  std::vector<int> basis;       // column basic in each row
  std::vector<ColKind> kind;    // per column
  std::vector<int> col_row;     // owning row for slack/artificial columns
  std::vector<Rat> slack_sign;  // +1/-1 for slack columns (post-normalization)
  std::vector<bool> flipped;    // row sign-normalized?
  std::vector<bool> barred;     // column may not enter

  int rows() const { return static_cast<int>(rhs.size()); }
  int cols() const { return static_cast<int>(objrow.size()); }
};

struct InternalRow {
  std::vector<Rat> coeffs;  // over internal structural columns
  Rel rel;
  Rat rhs;
};

// Expands the user program into internal rows over nonnegative variables.
// Row order: user rows, then upper-bound rows (variable order).
void build_internal(const LinearProgram& lp, std::vector<InternalRow>* out_rows,
                    std::vector<Rat>* out_obj, Tableau* t) {
  t->col_of_var.assign(lp.num_vars, 0);
  t->var_split.assign(lp.num_vars, false);
  t->shift.assign(lp.num_vars, Rat(0));
  int col = 0;
  for (int j = 0; j < lp.num_vars; ++j) {
    t->col_of_var[j] = col;
    if (lp.lower[j]) {
      t->shift[j] = *lp.lower[j];
      col += 1;
    } else {
      t->var_split[j] = true;
      col += 2;
    }
  }
  t->n_internal = col;

  bool maximize = lp.sense == Sense::Maximize;
  out_obj->assign(t->n_internal, Rat(0));
  for (int j = 0; j < lp.num_vars; ++j) {
    Rat c = maximize ? lp.objective[j] : -lp.objective[j];
    int cj = t->col_of_var[j];
    (*out_obj)[cj] += c;
    if (t->var_split[j]) (*out_obj)[cj + 1] -= c;
  }

  auto expand = [&](const std::vector<Rat>& coeffs, Rel rel, const Rat& rhs) {
    InternalRow row;
    row.coeffs.assign(t->n_internal, Rat(0));
    Rat adjusted = rhs;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (coeffs[j] == 0) continue;
      int cj = t->col_of_var[j];
      row.coeffs[cj] += coeffs[j];
      if (t->var_split[j]) {
        row.coeffs[cj + 1] -= coeffs[j];
      } else {
        adjusted -= coeffs[j] * t->shift[j];
      }
    }
    row.rel = rel;
    row.rhs = adjusted;
    out_rows->push_back(std::move(row));
  };

  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.coeffs.size()) != lp.num_vars) {
      throw ValidationError("lp: row coefficient count does not match variable count");
    }
    expand(row.coeffs, row.rel, row.rhs);
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Rat> coeffs(lp.num_vars, Rat(0));
    coeffs[j] = 1;
    expand(coeffs, Rel::Le, *lp.upper[j]);
  }
}

void pivot(Tableau& t, int row, int col) {
  Rat inv = 1 / t.body[row][col];
  for (auto& entry : t.body[row]) entry *= inv;
  t.rhs[row] *= inv;
  t.body[row][col] = 1;  // exact, but keep canonical
  for (int i = 0; i < t.rows(); ++i) {
    if (i == row) continue;
    Rat factor = t.body[i][col];
    if (factor == 0) continue;
    for (int j = 0; j < t.cols(); ++j) {
      if (t.body[row][j] != 0) t.body[i][j] -= factor * t.body[row][j];
    }
    t.body[i][col] = 0;
    t.rhs[i] -= factor * t.rhs[row];
  }
  Rat factor = t.objrow[col];
  if (factor != 0) {
    for (int j = 0; j < t.cols(); ++j) {
      if (t.body[row][j] != 0) t.objrow[j] -= factor * t.body[row][j];
    }
    t.objrow[col] = 0;
    t.objval -= factor * t.rhs[row];
  }
  t.basis[row] = col;
}

// Bland: entering column is the lowest-index eligible column with a negative
// reduced cost; leaving row is the ratio-test minimum, ties broken by lowest
// basic column index. Returns false when no entering column exists (optimal).
// Throws Unbounded via the bool* flag.
bool simplex_step(Tableau& t, bool* unbounded) {
  int entering = -1;
  for (int j = 0; j < t.cols(); ++j) {
    if (t.barred[j]) continue;
    if (t.objrow[j] < 0) {
      entering = j;
      break;
    }
  }
  if (entering < 0) return false;

  int leaving = -1;
  Rat best_ratio;
  for (int i = 0; i < t.rows(); ++i) {
    if (t.body[i][entering] <= 0) continue;
    Rat ratio = t.rhs[i] / t.body[i][entering];
    if (leaving < 0 || ratio < best_ratio ||
        (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
      leaving = i;
      best_ratio = ratio;
    }
  }
  if (leaving < 0) {
    *unbounded = true;
    return false;
  }
  pivot(t, leaving, entering);
  return true;
}

void rebuild_objrow(Tableau& t, const std::vector<Rat>& costs) {
  // objrow[j] = z_j - c_j with z from the current basis.
  t.objrow.assign(t.cols(), Rat(0));
  t.objval = 0;
  for (int j = 0; j < t.cols(); ++j) t.objrow[j] = -costs[j];
  for (int i = 0; i < t.rows(); ++i) {
    Rat cb = costs[t.basis[i]];
    if (cb == 0) continue;
    for (int j = 0; j < t.cols(); ++j) {
      if (t.body[i][j] != 0) t.objrow[j] += cb * t.body[i][j];
    }
    t.objval += cb * t.rhs[i];
  }
}

// Duals of the internal (unnormalized) rows, read from each row's unit
// column. `artificial_cost` is the phase-dependent cost of artificials.
std::vector<Rat> extract_duals(const Tableau& t, const Rat& artificial_cost) {
  std::vector<Rat> y(t.rows(), Rat(0));
  std::vector<bool> seen(t.rows(), false);
  for (int j = 0; j < t.cols(); ++j) {
    int row = t.col_row[j];
    if (row < 0 || seen[row]) continue;
    if (t.kind[j] == ColKind::Slack) {
      y[row] = t.slack_sign[j] * t.objrow[j];
      seen[row] = true;
    } else if (t.kind[j] == ColKind::Artificial) {
      y[row] = t.objrow[j] + artificial_cost;
      seen[row] = true;
    }
  }
  for (int i = 0; i < t.rows(); ++i) {
    if (t.flipped[i]) y[i] = -y[i];
  }
  return y;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  if (lp.num_vars < 1) throw ValidationError("lp: needs at least one variable");
  if (static_cast<int>(lp.objective.size()) != lp.num_vars) {
    throw ValidationError("lp: objective length does not match variable count");
  }

  Tableau t;
  std::vector<InternalRow> internal;
  std::vector<Rat> costs_structural;
  build_internal(lp, &internal, &costs_structural, &t);

  int m = static_cast<int>(internal.size());
  int n = t.n_internal;
  int num_slacks = 0;
  for (const auto& row : internal) {
    if (row.rel != Rel::Eq) ++num_slacks;
  }

  int total = n + num_slacks + m;  // reserve an artificial slot per row
  t.body.assign(m, std::vector<Rat>(total, Rat(0)));
  t.rhs.assign(m, Rat(0));
  t.kind.assign(total, ColKind::Structural);
  t.col_row.assign(total, -1);
  t.slack_sign.assign(total, Rat(0));
  t.flipped.assign(m, false);
  t.barred.assign(total, false);
  t.basis.assign(m, -1);

  int next_slack = n;
  int next_artificial = n + num_slacks;
  int artificial_count = 0;
  for (int i = 0; i < m; ++i) {
    bool flip = internal[i].rhs < 0;
    t.flipped[i] = flip;
    Rat sign = flip ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) t.body[i][j] = sign * internal[i].coeffs[j];
    t.rhs[i] = sign * internal[i].rhs;

    int slack_col = -1;
    if (internal[i].rel != Rel::Eq) {
      slack_col = next_slack++;
      Rat s = internal[i].rel == Rel::Le ? Rat(1) : Rat(-1);
      s *= sign;
      t.body[i][slack_col] = s;
      t.kind[slack_col] = ColKind::Slack;
      t.col_row[slack_col] = i;
      t.slack_sign[slack_col] = s;
    }
    if (slack_col >= 0 && t.slack_sign[slack_col] == 1) {
      t.basis[i] = slack_col;
    } else {
      int art = next_artificial++;
      ++artificial_count;
      t.body[i][art] = 1;
      t.kind[art] = ColKind::Artificial;
      t.col_row[art] = i;
      t.barred[art] = true;  // artificials never enter
      t.basis[i] = art;
    }
  }
  // Trim unused artificial slots.
  total = next_artificial;
  for (auto& row : t.body) row.resize(total);
  t.kind.resize(total);
  t.col_row.resize(total);
  t.slack_sign.resize(total);
  t.barred.resize(total);

  LpSolution sol;

  // Phase 1: maximize -sum(artificials).
  if (artificial_count > 0) {
    std::vector<Rat> phase1_costs(total, Rat(0));
    for (int j = 0; j < total; ++j) {
      if (t.kind[j] == ColKind::Artificial) phase1_costs[j] = -1;
    }
    t.objrow.assign(total, Rat(0));
    rebuild_objrow(t, phase1_costs);
    bool unbounded = false;
    while (simplex_step(t, &unbounded)) {
    }
    assert(!unbounded);  // phase-1 objective is bounded above by 0
    if (t.objval < 0) {
      sol.status = LpSolution::Status::Infeasible;
      sol.dual = extract_duals(t, Rat(-1));
      if (lp.sense == Sense::Minimize) {
        for (auto& y : sol.dual) y = -y;
      }
      return sol;
    }
    // Drive artificials out of the basis; rows that cannot pivot are
    // redundant (all-zero over real columns) and stay inert.
    for (int i = 0; i < m; ++i) {
      if (t.kind[t.basis[i]] != ColKind::Artificial) continue;
      for (int j = 0; j < total; ++j) {
        if (t.kind[j] == ColKind::Artificial) continue;
        if (t.body[i][j] != 0) {
          pivot(t, i, j);
          break;
        }
      }
    }
  } else {
    t.objrow.assign(total, Rat(0));
  }

  // Phase 2.
  std::vector<Rat> phase2_costs(total, Rat(0));
  for (int j = 0; j < n; ++j) phase2_costs[j] = costs_structural[j];
  rebuild_objrow(t, phase2_costs);
  bool unbounded = false;
  while (simplex_step(t, &unbounded)) {
  }
  if (unbounded) {
    sol.status = LpSolution::Status::Unbounded;
    return sol;
  }

  sol.status = LpSolution::Status::Optimal;
  std::vector<Rat> internal_point(n, Rat(0));
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) internal_point[t.basis[i]] = t.rhs[i];
  }
  sol.point.assign(lp.num_vars, Rat(0));
  Rat shift_value = 0;
  bool maximize = lp.sense == Sense::Maximize;
  for (int j = 0; j < lp.num_vars; ++j) {
    int cj = t.col_of_var[j];
    if (t.var_split[j]) {
      sol.point[j] = internal_point[cj] - internal_point[cj + 1];
    } else {
      sol.point[j] = t.shift[j] + internal_point[cj];
      shift_value += (maximize ? lp.objective[j] : -lp.objective[j]) * t.shift[j];
    }
  }
  Rat value_internal = t.objval + shift_value;
  sol.value = maximize ? value_internal : -value_internal;
  sol.dual = extract_duals(t, Rat(0));
  if (!maximize) {
    for (auto& y : sol.dual) y = -y;
  }
  return sol;
}

namespace {

// Reduced cost of original variable j given row duals (user + upper-bound
// rows), in maximization orientation.
Rat reduced_cost(const LinearProgram& lp, const std::vector<Rat>& dual, int j, bool maximize) {
  Rat r = maximize ? lp.objective[j] : -lp.objective[j];
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rows[i].coeffs[j] != 0) r -= dual[i] * lp.rows[i].coeffs[j];
  }
  std::size_t extra = lp.rows.size();
  for (int k = 0; k < lp.num_vars; ++k) {
    if (!lp.upper[k]) continue;
    if (k == j) r -= dual[extra];
    ++extra;
  }
  return r;
}

}  // namespace

bool verify_optimal_certificate(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpSolution::Status::Optimal) return false;
  if (static_cast<int>(sol.point.size()) != lp.num_vars) return false;

  int num_ub = 0;
  for (int j = 0; j < lp.num_vars; ++j) num_ub += lp.upper[j].has_value();
  if (sol.dual.size() != lp.rows.size() + static_cast<std::size_t>(num_ub)) return false;

  bool maximize = lp.sense == Sense::Maximize;
  std::vector<Rat> dual = sol.dual;
  if (!maximize) {
    for (auto& y : dual) y = -y;
  }

  // Primal feasibility and objective value.
  Rat value = 0;
  for (int j = 0; j < lp.num_vars; ++j) {
    value += lp.objective[j] * sol.point[j];
    if (lp.lower[j] && sol.point[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && sol.point[j] > *lp.upper[j]) return false;
  }
  if (value != sol.value) return false;

  // Row feasibility, dual signs, complementary slackness.
  auto check_row = [&](const std::vector<Rat>& coeffs, Rel rel, const Rat& rhs,
                       const Rat& y) -> bool {
    Rat lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += coeffs[j] * sol.point[j];
    switch (rel) {
      case Rel::Le:
        if (lhs > rhs) return false;
        if (y < 0) return false;
        break;
      case Rel::Ge:
        if (lhs < rhs) return false;
        if (y > 0) return false;
        break;
      case Rel::Eq:
        if (lhs != rhs) return false;
        break;
    }
    if (y != 0 && lhs != rhs) return false;
    return true;
  };

  std::size_t idx = 0;
  for (const auto& row : lp.rows) {
    if (!check_row(row.coeffs, row.rel, row.rhs, dual[idx])) return false;
    ++idx;
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.upper[j]) continue;
    std::vector<Rat> coeffs(lp.num_vars, Rat(0));
    coeffs[j] = 1;
    if (!check_row(coeffs, Rel::Le, *lp.upper[j], dual[idx])) return false;
    ++idx;
  }

  // Dual value identity and reduced-cost conditions.
  Rat dual_value = 0;
  idx = 0;
  for (const auto& row : lp.rows) dual_value += dual[idx++] * row.rhs;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.upper[j]) dual_value += dual[idx++] * (*lp.upper[j]);
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    Rat r = reduced_cost(lp, dual, j, maximize);
    if (!lp.lower[j]) {
      if (r != 0) return false;
      continue;
    }
    if (r > 0) return false;                                // dual feasibility
    if (r != 0 && sol.point[j] != *lp.lower[j]) return false;  // slackness
    dual_value += r * (*lp.lower[j]);
  }
  Rat primal_internal = maximize ? sol.value : -sol.value;
  return dual_value == primal_internal;
}

bool verify_farkas_certificate(const LinearProgram& lp, const LpSolution& sol) {
  if (sol.status != LpSolution::Status::Infeasible) return false;
  int num_ub = 0;
  for (int j = 0; j < lp.num_vars; ++j) num_ub += lp.upper[j].has_value();
  if (sol.dual.size() != lp.rows.size() + static_cast<std::size_t>(num_ub)) return false;

  std::vector<Rat> y = sol.dual;
  if (lp.sense == Sense::Minimize) {
    for (auto& v : y) v = -v;
  }

  // Aggregate rows with weights y: relations must point the right way, the
  // combined coefficient of every lower-bounded variable must be
  // nonnegative (zero for free variables), and the aggregated bound must be
  // strictly less than the value forced by the lower bounds.
  std::vector<Rat> combined(lp.num_vars, Rat(0));
  Rat bound = 0;
  std::size_t idx = 0;
  for (const auto& row : lp.rows) {
    const Rat& yi = y[idx++];
    if (row.rel == Rel::Le && yi < 0) return false;
    if (row.rel == Rel::Ge && yi > 0) return false;
    if (yi == 0) continue;
    for (int j = 0; j < lp.num_vars; ++j) combined[j] += yi * row.coeffs[j];
    bound += yi * row.rhs;
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.upper[j]) continue;
    const Rat& yi = y[idx++];
    if (yi < 0) return false;
    combined[j] += yi;
    bound += yi * (*lp.upper[j]);
  }

  Rat forced = 0;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.lower[j]) {
      if (combined[j] != 0) return false;
    } else {
      if (combined[j] < 0) return false;
      forced += combined[j] * (*lp.lower[j]);
    }
  }
  // Any feasible point would satisfy combined . x <= bound, yet
  // combined . x >= forced > bound.
  return forced > bound;
}

}  // namespace persuasion
