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

#include "persuasion/diagnostics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
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

// Optimum of: max t s.t. mu on the masked simplex, and action `a` beats every
// other action by at least t.
Rat unique_advantage(const GameSpec& game, const std::vector<int>& states, int a) {
  int d = static_cast<int>(states.size());
  LinearProgram lp(d + 1);
  for (int j = 0; j < d; ++j) lp.set_lower(j, Rat(0));
  lp.set_upper(d, Rat(1));
  lp.objective[d] = 1;
  {
    std::vector<Rat> ones(d + 1, Rat(0));
    for (int j = 0; j < d; ++j) ones[j] = 1;
    lp.add_row(std::move(ones), LinearProgram::Rel::Eq, Rat(1));
  }
  for (int b = 0; b < game.num_actions(); ++b) {
    if (b == a) continue;
    std::vector<Rat> row(d + 1, Rat(0));
    for (int i = 0; i < d; ++i) row[i] = game.u_receiver[a][states[i]] - game.u_receiver[b][states[i]];
    row[d] = -1;
    lp.add_row(std::move(row), LinearProgram::Rel::Ge, Rat(0));
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpSolution::Status::Optimal) {
    throw std::logic_error("unique-advantage LP not optimal");
  }
  return sol.value;
}

bool pubr_with_mask(const GameSpec& game, const Belief& mu, const std::vector<int>& a_unique) {
  std::vector<int> ties = best_responses(game, mu);
  Rat best = game.sender_payoff(ties[0], mu);
  for (std::size_t i = 1; i < ties.size(); ++i) {
    best = std::max(best, game.sender_payoff(ties[i], mu));
  }
  bool any = false;
  Rat best_unique;
  for (int a : ties) {
    if (!std::binary_search(a_unique.begin(), a_unique.end(), a)) continue;
    Rat value = game.sender_payoff(a, mu);
    if (!any || value > best_unique) best_unique = value;
    any = true;
  }
  return any && best_unique == best;
}

}  // namespace

std::vector<int> potentially_unique_actions(const GameSpec& game, const StateMask& mask) {
  std::vector<int> states = masked_states(mask);
  if (states.empty()) throw ValidationError("mask: empty support");
  std::vector<int> result;
  for (int a = 0; a < game.num_actions(); ++a) {
    if (unique_advantage(game, states, a) > 0) result.push_back(a);
  }
  return result;
}

bool pubr_at(const GameSpec& game, const Belief& mu, bool strong) {
  validate_belief(game, mu);
  StateMask mask = strong ? support_mask(mu) : support_mask(game.prior);
  return pubr_with_mask(game, mu, potentially_unique_actions(game, mask));
}

Theorem1Result theorem1_verdict(const GameSpec& game, const Belief& prior) {
  validate_belief(game, prior);
  Theorem1Result result;
  CavUpperResult upper = cav_upper(game, prior);
  for (const auto& [belief, weight] : upper.policy.support) result.D.push_back(belief);
  result.potentially_unique = potentially_unique_actions(game, support_mask(prior));

  result.applies = true;
  result.strong_holds = true;
  for (std::size_t i = 0; i < result.D.size(); ++i) {
    const Belief& mu = result.D[i];
    bool plain = pubr_with_mask(game, mu, result.potentially_unique);
    bool strong = plain && pubr_with_mask(game, mu, potentially_unique_actions(game, support_mask(mu)));
    if (!strong) result.strong_holds = false;
    if (plain) continue;
    // Selection is irrelevant where the sender is indifferent across the tie
    // set; such points cannot break uniqueness.
    if (value_upper(game, mu) == value_lower(game, mu)) {
      result.indifferent_points.push_back(i);
      continue;
    }
    result.failing_points.push_back(i);
    result.applies = false;
  }
  if (!result.applies) result.strong_holds = false;
  return result;
}

NoTiesResult no_relevant_ties_report(const GameSpec& game, int jobs) {
  CellDecomposition decomp = enumerate_cells(game, full_mask(game.num_states()), jobs);
  NoTiesResult result;
  result.holds = true;
  for (const auto& cell : decomp.cells) {
    if (cell.tie_set.size() < 2) continue;
    for (const auto& vertex : cell.vertices) {
      Rat first = game.sender_payoff(cell.tie_set[0], vertex);
      for (std::size_t i = 1; i < cell.tie_set.size(); ++i) {
        if (game.sender_payoff(cell.tie_set[i], vertex) != first) {
          result.holds = false;
          result.failing_tie_set = cell.tie_set;
          result.failing_vertex = vertex;
          return result;
        }
      }
    }
  }
  return result;
}

bool no_relevant_ties(const GameSpec& game) { return no_relevant_ties_report(game).holds; }

GlobalUniquenessResult global_uniqueness_report(const GameSpec& game, int jobs) {
  CellDecomposition decomp = enumerate_cells(game, full_mask(game.num_states()), jobs);

  // Gather every (vertex, upper piece value) pair; cache w-hat per distinct
  // vertex since cells share corners.
  std::vector<std::pair<Belief, Rat>> checks;
  for (const auto& cell : decomp.cells) {
    for (const auto& vertex : cell.vertices) {
      Rat upper = game.sender_payoff(cell.tie_set[0], vertex);
      for (std::size_t i = 1; i < cell.tie_set.size(); ++i) {
        upper = std::max(upper, game.sender_payoff(cell.tie_set[i], vertex));
      }
      checks.push_back({vertex, upper});
    }
  }
  std::map<std::vector<Rat>, Rat> cavw_cache;
  std::map<StateMask, CellDecomposition> decomp_cache;
  std::vector<std::vector<Rat>> distinct;
  for (const auto& [vertex, upper] : checks) {
    if (cavw_cache.emplace(vertex.probs, Rat(0)).second) distinct.push_back(vertex.probs);
  }
  std::vector<StateMask> masks;
  std::set<StateMask> mask_set;
  for (const auto& probs : distinct) {
    StateMask mask = support_mask(probs);
    if (mask_set.insert(mask).second) masks.push_back(mask);
  }
  std::vector<CellDecomposition> mask_decomps(masks.size());
  parallel_for(masks.size(), jobs, [&](std::size_t i) {
    mask_decomps[i] = enumerate_cells(game, masks[i], 1);
  });
  for (std::size_t i = 0; i < masks.size(); ++i) {
    decomp_cache[masks[i]] = std::move(mask_decomps[i]);
  }
  std::vector<Rat> cavw_values(distinct.size());
  parallel_for(distinct.size(), jobs, [&](std::size_t i) {
    Belief vertex{distinct[i]};
    cavw_values[i] = cav_lower_value_with(game, decomp_cache.at(support_mask(vertex)), vertex);
  });
  for (std::size_t i = 0; i < distinct.size(); ++i) cavw_cache[distinct[i]] = cavw_values[i];

  GlobalUniquenessResult result;
  result.holds = true;
  for (const auto& [vertex, upper] : checks) {
    const Rat& cavw = cavw_cache.at(vertex.probs);
    if (cavw < upper) {
      result.holds = false;
      result.failing_vertex = vertex;
      result.failing_upper = upper;
      result.failing_cavw = cavw;
      return result;
    }
  }
  return result;
}

bool global_uniqueness(const GameSpec& game) { return global_uniqueness_report(game).holds; }

GenericityReport genericity_check(const GameSpec& game, int jobs) {
  if (game.num_states() > 5) {
    throw ValidationError("desk-scale limit: genericity check supports at most 5 states");
  }
  int num_subsets = (1 << game.num_states()) - 1;
  GenericityReport report;
  report.phi_values.resize(static_cast<std::size_t>(game.num_actions()) * num_subsets);

  parallel_for(report.phi_values.size(), jobs, [&](std::size_t idx) {
    int a = static_cast<int>(idx) / num_subsets;
    unsigned bits = static_cast<unsigned>(idx % num_subsets) + 1;
    std::vector<int> subset;
    for (int s = 0; s < game.num_states(); ++s) {
      if (bits & (1u << s)) subset.push_back(s);
    }
    GenericityReport::Entry entry;
    entry.action = a;
    entry.state_subset = subset;
    entry.phi = unique_advantage(game, subset, a);
    report.phi_values[idx] = std::move(entry);
  });

  report.in_U_R = true;
  for (std::size_t i = 0; i < report.phi_values.size(); ++i) {
    if (report.phi_values[i].phi == 0) {
      report.failing_indices.push_back(i);
      report.in_U_R = false;
    }
  }
  return report;
}

namespace {

struct PositionOrder {
  std::vector<int> order;  // indices sorted by position
  std::vector<Rat> pos;    // aligned with order
};

template <typename Info>
std::optional<PositionOrder> position_order(const std::vector<Info>& items) {
  PositionOrder out;
  for (const auto& item : items) {
    if (!item.position) return std::nullopt;
  }
  out.order.resize(items.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(),
            [&](int a, int b) { return *items[a].position < *items[b].position; });
  for (int i : out.order) out.pos.push_back(*items[i].position);
  return out;
}

bool strictly_increasing_differences(const GameSpec& game, const PositionOrder& actions,
                                     const PositionOrder& states) {
  int na = static_cast<int>(actions.order.size());
  int ns = static_cast<int>(states.order.size());
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      int a = actions.order[i], ap = actions.order[j];
      for (int k = 0; k < ns; ++k) {
        for (int l = k + 1; l < ns; ++l) {
          int th = states.order[k], thp = states.order[l];
          Rat low = game.u_receiver[ap][th] - game.u_receiver[a][th];
          Rat high = game.u_receiver[ap][thp] - game.u_receiver[a][thp];
          if (!(high > low)) return false;
        }
      }
    }
  }
  return true;
}

// Certificates from the structural sufficient conditions; never guesses.
QuasiCertificate certify_quasi(const GameSpec& game, const PositionOrder& actions) {
  int na = static_cast<int>(actions.order.size());
  if (na == 2) return QuasiCertificate::BinaryActions;

  auto monotone = [&](bool increasing) {
    for (int th = 0; th < game.num_states(); ++th) {
      for (int i = 0; i + 1 < na; ++i) {
        const Rat& lo = game.u_sender[actions.order[i]][th];
        const Rat& hi = game.u_sender[actions.order[i + 1]][th];
        if (increasing ? hi < lo : hi > lo) return false;
      }
    }
    return true;
  };
  if (monotone(true) || monotone(false)) return QuasiCertificate::SenderMonotone;

  // Discrete convexity of u_sender in the action position, per state:
  // slopes over consecutive position gaps nondecreasing.
  bool convex = true;
  for (int th = 0; th < game.num_states() && convex; ++th) {
    for (int i = 0; i + 2 < na; ++i) {
      const Rat& p0 = actions.pos[i];
      const Rat& p1 = actions.pos[i + 1];
      const Rat& p2 = actions.pos[i + 2];
      Rat left = (game.u_sender[actions.order[i + 1]][th] - game.u_sender[actions.order[i]][th]) /
                 (p1 - p0);
      Rat right = (game.u_sender[actions.order[i + 2]][th] - game.u_sender[actions.order[i + 1]][th]) /
                  (p2 - p1);
      if (right < left) {
        convex = false;
        break;
      }
    }
  }
  if (convex) return QuasiCertificate::SenderConvex;

  // Strict concavity of u_receiver in the action position, per state:
  // slopes strictly decreasing.
  bool concave = true;
  for (int th = 0; th < game.num_states() && concave; ++th) {
    for (int i = 0; i + 2 < na; ++i) {
      const Rat& p0 = actions.pos[i];
      const Rat& p1 = actions.pos[i + 1];
      const Rat& p2 = actions.pos[i + 2];
      Rat left = (game.u_receiver[actions.order[i + 1]][th] - game.u_receiver[actions.order[i]][th]) /
                 (p1 - p0);
      Rat right =
          (game.u_receiver[actions.order[i + 2]][th] - game.u_receiver[actions.order[i + 1]][th]) /
          (p2 - p1);
      if (!(right < left)) {
        concave = false;
        break;
      }
    }
  }
  if (concave) return QuasiCertificate::ReceiverConcave;
  return QuasiCertificate::SampledOnly;
}

// The per-belief disjunction of Definition-style quasi conditions, testable
// exactly at a single belief.
bool quasi_holds_at(const GameSpec& game, const PositionOrder& actions, const Belief& mu) {
  int na = static_cast<int>(actions.order.size());
  std::vector<Rat> er(na), es(na);
  for (int i = 0; i < na; ++i) {
    er[i] = game.receiver_payoff(actions.order[i], mu);
    es[i] = game.sender_payoff(actions.order[i], mu);
  }
  bool receiver_quasiconcave = true;
  for (int i = 0; i < na && receiver_quasiconcave; ++i) {
    for (int j = i + 1; j < na && receiver_quasiconcave; ++j) {
      for (int k = j + 1; k < na; ++k) {
        if (!(er[j] > std::min(er[i], er[k]))) {
          receiver_quasiconcave = false;
          break;
        }
      }
    }
  }
  if (receiver_quasiconcave) return true;
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      for (int k = j + 1; k < na; ++k) {
        if (es[j] > std::max(es[i], es[k])) return false;
      }
    }
  }
  return true;
}

}  // namespace

OrderedReport ordered_check(const GameSpec& game, const Belief& prior) {
  validate_belief(game, prior);
  OrderedReport report;

  auto actions = position_order(game.actions);
  auto states = position_order(game.states);
  if (!actions || !states) {
    report.is_ordered = OrderedReport::Status::Uncertified;
    report.note = "states or actions lack numeric positions";
    return report;
  }
  report.has_positions = true;
  report.increasing_differences = strictly_increasing_differences(game, *actions, *states);

  report.quasi = certify_quasi(game, *actions);
  if (report.quasi == QuasiCertificate::SampledOnly) {
    // Sampling can refute the per-belief condition but never certify it.
    std::mt19937_64 rng(0x5eedu);
    for (int trial = 0; trial < 256; ++trial) {
      std::vector<Rat> probs(game.num_states());
      Rat total = 0;
      for (auto& p : probs) {
        p = Rat(static_cast<unsigned long>(rng() % 1000 + 1));
        total += p;
      }
      for (auto& p : probs) p /= total;
      Belief mu{probs};
      if (!quasi_holds_at(game, *actions, mu)) {
        report.quasi = QuasiCertificate::Failed;
        report.quasi_counterexample = mu;
        break;
      }
    }
  }

  // For each extreme state of the prior's support: zero prior mass (vacuous
  // for finite supports) or a unique best response at the degenerate belief.
  std::vector<int> support = masked_states(support_mask(prior));
  int lo_state = support[0], hi_state = support[0];
  for (int s : support) {
    if (*game.states[s].position < *game.states[lo_state].position) lo_state = s;
    if (*game.states[s].position > *game.states[hi_state].position) hi_state = s;
  }
  report.boundary_condition = true;
  for (int s : {lo_state, hi_state}) {
    if (prior.probs[s] == 0) continue;
    if (best_responses(game, degenerate_belief(game.num_states(), s)).size() != 1) {
      report.boundary_condition = false;
    }
  }

  bool certified = report.quasi == QuasiCertificate::SenderMonotone ||
                   report.quasi == QuasiCertificate::SenderConvex ||
                   report.quasi == QuasiCertificate::BinaryActions ||
                   report.quasi == QuasiCertificate::ReceiverConcave;
  report.theorem2_applies = report.increasing_differences && certified && report.boundary_condition;
  if (!report.increasing_differences || report.quasi == QuasiCertificate::Failed) {
    report.is_ordered = OrderedReport::Status::No;
  } else if (certified) {
    report.is_ordered = OrderedReport::Status::Yes;
  } else {
    report.is_ordered = OrderedReport::Status::Uncertified;
    report.note = "per-belief quasi condition sampled only, not certified";
  }
  return report;
}

UniquenessVerdict analyze(const GameSpec& game, const Belief& prior, int jobs) {
  validate_belief(game, prior);
  UniquenessVerdict verdict;

  verdict.no_ties = no_relevant_ties_report(game, jobs);
  if (verdict.no_ties->holds) {
    verdict.winning_test = UniquenessVerdict::WinningTest::NoTies;
  }
  if (verdict.winning_test == UniquenessVerdict::WinningTest::None) {
    verdict.theorem1 = theorem1_verdict(game, prior);
    if (verdict.theorem1->applies) {
      verdict.winning_test = UniquenessVerdict::WinningTest::PubrTheorem;
    }
  }
  if (verdict.winning_test == UniquenessVerdict::WinningTest::None) {
    verdict.ordered = ordered_check(game, prior);
    if (verdict.ordered->theorem2_applies) {
      verdict.winning_test = UniquenessVerdict::WinningTest::Ordered;
    }
  }
  if (verdict.winning_test == UniquenessVerdict::WinningTest::None) {
    verdict.global = global_uniqueness_report(game, jobs);
    if (verdict.global->holds) {
      verdict.winning_test = UniquenessVerdict::WinningTest::Global;
    }
  }

  verdict.interval = equilibrium_interval(game, prior, jobs);
  bool width_zero = verdict.interval.width() == 0;
  if (verdict.winning_test != UniquenessVerdict::WinningTest::None) {
    if (!width_zero) {
      throw std::logic_error("sufficient test reported uniqueness but the interval has width");
    }
    verdict.verdict = UniquenessVerdict::Verdict::Unique;
  } else if (width_zero) {
    verdict.verdict = UniquenessVerdict::Verdict::Unique;
    verdict.winning_test = UniquenessVerdict::WinningTest::IntervalWidthZero;
  } else {
    verdict.verdict = UniquenessVerdict::Verdict::NonUnique;
    verdict.winning_test = UniquenessVerdict::WinningTest::None;
  }
  return verdict;
}

const char* to_string(UniquenessVerdict::Verdict verdict) {
  switch (verdict) {
    case UniquenessVerdict::Verdict::Unique:
      return "unique";
    case UniquenessVerdict::Verdict::NonUnique:
      return "non_unique";
    case UniquenessVerdict::Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

const char* to_string(UniquenessVerdict::WinningTest test) {
  switch (test) {
    case UniquenessVerdict::WinningTest::None:
      return "none";
    case UniquenessVerdict::WinningTest::NoTies:
      return "no_ties";
    case UniquenessVerdict::WinningTest::PubrTheorem:
      return "pubr_theorem";
    case UniquenessVerdict::WinningTest::Ordered:
      return "ordered";
    case UniquenessVerdict::WinningTest::Global:
      return "global";
    case UniquenessVerdict::WinningTest::IntervalWidthZero:
      return "interval_width_zero";
  }
  return "?";
}

const char* to_string(QuasiCertificate cert) {
  switch (cert) {
    case QuasiCertificate::SenderMonotone:
      return "sender_monotone";
    case QuasiCertificate::SenderConvex:
      return "sender_convex";
    case QuasiCertificate::BinaryActions:
      return "binary_actions";
    case QuasiCertificate::ReceiverConcave:
      return "receiver_concave_certified";
    case QuasiCertificate::SampledOnly:
      return "sampled_only";
    case QuasiCertificate::Failed:
      return "failed";
  }
  return "?";
}

const char* to_string(OrderedReport::Status status) {
  switch (status) {
    case OrderedReport::Status::Yes:
      return "yes";
    case OrderedReport::Status::No:
      return "no";
    case OrderedReport::Status::Uncertified:
      return "uncertified";
  }
  return "?";
}

}  // namespace persuasion
