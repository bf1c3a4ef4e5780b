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

#include "persuasion/oracle.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "persuasion/lp.hpp"
#include "persuasion/parallel.hpp"

namespace persuasion {

namespace {

constexpr unsigned long long kMaxGridPoints = 2'000'000ull;

unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  unsigned long long result = 1;
  for (unsigned long long i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > 100ull * kMaxGridPoints) return result;  // early out, enough to trip the guard
  }
  return result;
}

std::vector<int> masked_states(const StateMask& mask) {
  std::vector<int> states;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) states.push_back(static_cast<int>(i));
  }
  return states;
}

mpz_class lcm_denominator(const std::vector<std::vector<Rat>>& matrix) {
  mpz_class l = 1;
  for (const auto& row : matrix) {
    for (const auto& entry : row) {
      mpz_class d = entry.get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  }
  return l;
}

// Integer-scaled payoff rows: scaled[a][s] = u[a][s] * scale, exact.
std::vector<std::vector<mpz_class>> scale_matrix(const std::vector<std::vector<Rat>>& matrix,
                                                 const std::vector<int>& states,
                                                 const mpz_class& scale) {
  std::vector<std::vector<mpz_class>> out(matrix.size());
  for (std::size_t a = 0; a < matrix.size(); ++a) {
    for (int s : states) {
      Rat scaled = matrix[a][s] * Rat(scale);
      if (scaled.get_den() != 1) throw std::logic_error("scaling did not clear denominators");
      out[a].push_back(scaled.get_num());
    }
  }
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (resolution < 2) throw ValidationError("grid: resolution must be at least 2");
  if (dimension < 1) throw ValidationError("grid: dimension must be positive");
  if (point_count() > kMaxGridPoints) {
    throw ValidationError("desk-scale limit: grid exceeds " + std::to_string(kMaxGridPoints) +
                          " points");
  }
}

unsigned long long GridSpec::point_count() const {
  return binomial(static_cast<unsigned long long>(resolution) + dimension - 1, dimension - 1);
}

Rat grid_cav(const GameSpec& game, const Belief& prior, int n, GeneratorKind kind, int jobs) {
  validate_belief(game, prior);
  std::vector<int> states = masked_states(support_mask(prior));
  int d = static_cast<int>(states.size());
  GridSpec grid{n, d};
  grid.validate();

  // Enumerate compositions of n into d parts, lexicographically.
  std::vector<std::vector<int>> points;
  points.reserve(static_cast<std::size_t>(grid.point_count()));
  std::vector<int> k(d, 0);
  k[d - 1] = n;
  for (;;) {
    points.push_back(k);
    // next composition
    int i = d - 1;
    while (i > 0 && k[i] == 0) --i;
    if (i == 0) break;
    // move one unit from slot i to slot i-1, reset tail
    ++k[i - 1];
    int rest = k[i] - 1;
    for (int j = i; j < d; ++j) k[j] = 0;
    k[d - 1] = rest;
  }

  mpz_class scale_r = lcm_denominator(game.u_receiver);
  mpz_class scale_s = lcm_denominator(game.u_sender);
  auto ur = scale_matrix(game.u_receiver, states, scale_r);
  auto us = scale_matrix(game.u_sender, states, scale_s);
  int na = game.num_actions();

  // Exact v or w at each grid point, as an integer numerator over scale_s * n.
  std::vector<mpz_class> value_num(points.size());
  parallel_for(points.size(), jobs, [&](std::size_t idx) {
    const std::vector<int>& pt = points[idx];
    std::vector<mpz_class> er(na, 0);
    for (int a = 0; a < na; ++a) {
      for (int i = 0; i < d; ++i) er[a] += ur[a][i] * pt[i];
    }
    mpz_class best = er[0];
    for (int a = 1; a < na; ++a) best = std::max(best, er[a]);
    bool first = true;
    mpz_class value;
    for (int a = 0; a < na; ++a) {
      if (er[a] != best) continue;
      mpz_class es = 0;
      for (int i = 0; i < d; ++i) es += us[a][i] * pt[i];
      if (first) {
        value = es;
        first = false;
      } else if (kind == GeneratorKind::Upper) {
        value = std::max(value, es);
      } else {
        value = std::min(value, es);
      }
    }
    value_num[idx] = value;
  });

  Rat value_den = Rat(scale_s) * n;

  // Cutting-plane evaluation of the envelope at the prior: keep a small
  // active set, solve it exactly, and add the most violated grid point under
  // the optimal affine majorant until none remains.
  std::set<std::size_t> active;
  for (int i = 0; i < d; ++i) {
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      if (points[idx][i] == n) {
        active.insert(idx);
        break;
      }
    }
  }

  for (int round = 0;; ++round) {
    if (round > static_cast<int>(points.size()) + 2) {
      throw std::logic_error("grid envelope evaluation failed to converge");
    }
    std::vector<std::size_t> act(active.begin(), active.end());
    int m = static_cast<int>(act.size());
    LinearProgram lp(m);
    for (int j = 0; j < m; ++j) {
      lp.set_lower(j, Rat(0));
      lp.objective[j] = Rat(value_num[act[j]]) / value_den;
    }
    for (int i = 0; i < d; ++i) {
      std::vector<Rat> row(m);
      for (int j = 0; j < m; ++j) row[j] = make_frac(points[act[j]][i], n);
      lp.add_row(std::move(row), LinearProgram::Rel::Eq, prior.probs[states[i]]);
    }
    lp.add_row(std::vector<Rat>(m, Rat(1)), LinearProgram::Rel::Eq, Rat(1));
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpSolution::Status::Optimal) {
      throw std::logic_error("grid envelope LP not optimal");
    }

    // Affine majorant from the duals: h(mu) = y . mu + t.
    std::vector<Rat> y(sol.dual.begin(), sol.dual.begin() + d);
    Rat t = sol.dual[d];
    mpz_class denom_lcm = t.get_den();
    for (const auto& yi : y) {
      mpz_class dd = yi.get_den();
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), dd.get_mpz_t());
    }
    std::vector<mpz_class> y_scaled(d);
    for (int i = 0; i < d; ++i) {
      Rat v = y[i] * Rat(denom_lcm);
      y_scaled[i] = v.get_num();
    }
    mpz_class t_scaled = (t * Rat(denom_lcm)).get_num();

    // Violation sign of point g: value_num[g] * R - scale_s * (y_scaled . k + n * t_scaled),
    // everything over the common positive denominator scale_s * n * R.
    std::size_t best_idx = points.size();
    mpz_class best_viol = 0;
    mpz_class acc, lhs;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
      acc = t_scaled * n;
      for (int i = 0; i < d; ++i) {
        if (points[idx][i] != 0) acc += y_scaled[i] * points[idx][i];
      }
      lhs = value_num[idx] * denom_lcm - scale_s * acc;
      if (lhs > best_viol) {
        best_viol = lhs;
        best_idx = idx;
      }
    }
    if (best_idx == points.size()) return sol.value;
    if (!active.insert(best_idx).second) {
      throw std::logic_error("grid envelope re-added an active point");
    }
  }
}

BruteForceInterval brute_force_interval(const GameSpec& game, const Belief& prior, int n,
                                        int jobs) {
  BruteForceInterval out;
  out.lo = grid_cav(game, prior, n, GeneratorKind::Lower, jobs);
  out.hi = grid_cav(game, prior, n, GeneratorKind::Upper, jobs);
  out.error_bar = oracle_gap_constant(game) / n;
  return out;
}

Rat oracle_gap_constant(const GameSpec& game) {
  Rat max_abs = 0;
  for (const auto& row : game.u_sender) {
    for (const auto& entry : row) {
      Rat a = entry < 0 ? -entry : entry;
      max_abs = std::max(max_abs, a);
    }
  }
  return 4 * game.num_states() * max_abs;
}

GameSpec random_game(std::uint64_t seed, int nstates, int nactions, long denom) {
  if (nstates < 2 || nstates > 5) {
    throw ValidationError("random_game: states must lie in [2, 5]");
  }
  if (nactions < 2 || nactions > 12) {
    throw ValidationError("random_game: actions must lie in [2, 12]");
  }
  if (denom < 2) throw ValidationError("random_game: denom must be at least 2");

  std::mt19937_64 rng(seed);
  unsigned long long range = static_cast<unsigned long long>(denom) *
                                 static_cast<unsigned long long>(denom) +
                             1ull;
  Rat half = Rat(denom) / 2;
  auto draw = [&]() {
    unsigned long long k = rng() % range;
    return Rat(static_cast<unsigned long>(k)) / denom - half;
  };

  GameSpec game;
  for (int s = 0; s < nstates; ++s) game.states.push_back({"s" + std::to_string(s), std::nullopt});
  for (int a = 0; a < nactions; ++a) game.actions.push_back({"a" + std::to_string(a), std::nullopt});
  game.prior.assign(nstates, Rat(1, nstates));
  game.u_sender.resize(nactions);
  game.u_receiver.resize(nactions);
  for (int a = 0; a < nactions; ++a) {
    for (int s = 0; s < nstates; ++s) game.u_sender[a].push_back(draw());
  }
  for (int a = 0; a < nactions; ++a) {
    for (int s = 0; s < nstates; ++s) game.u_receiver[a].push_back(draw());
  }
  game.validate();
  return game;
}

}  // namespace persuasion
