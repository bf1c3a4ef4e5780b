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

#include "persuasion/json_io.hpp"

#include <fstream>
#include <sstream>

namespace persuasion {

namespace {

Rat decimal_with_exponent(const std::string& text) {
  // JSON float round-trips may carry an exponent ("1e-05"); split it off and
  // parse the mantissa with the strict grammar.
  auto epos = text.find_first_of("eE");
  std::string mantissa = text.substr(0, epos);
  long exponent = 0;
  if (epos != std::string::npos) exponent = std::stol(text.substr(epos + 1));
  Rat value = parse_rational(mantissa);
  if (exponent != 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
    if (exponent > 0) {
      value *= Rat(scale);
    } else {
      value /= Rat(scale);
    }
  }
  return value;
}

Rat rat_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) {
    auto parsed = try_parse_rational(j.get<std::string>());
    if (!parsed) {
      throw ValidationError(field + ": malformed rational \"" + j.get<std::string>() + "\"");
    }
    return *parsed;
  }
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())));
  }
  if (j.is_number_float()) return decimal_with_exponent(j.dump());
  throw ValidationError(field + ": expected a rational string or number");
}

std::vector<Rat> rat_vector(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError(field + ": expected an array");
  std::vector<Rat> out;
  for (const auto& entry : j) out.push_back(rat_from_json(entry, field));
  return out;
}

Json rat_to_json(const Rat& r) { return to_fraction_string(r); }

Json rat_list(const std::vector<Rat>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

Json approx_list(const std::vector<Rat>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal_string(v));
  return arr;
}

void put_rat(Json& obj, const std::string& key, const Rat& value) {
  obj[key] = rat_to_json(value);
  obj[key + "_approx"] = to_decimal_string(value);
}

template <typename Info>
void parse_items(const Json& doc, const std::string& field, std::vector<Info>* out) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw ValidationError(field + ": expected an array");
  }
  for (const auto& entry : doc[field]) {
    Info info;
    if (entry.is_string()) {
      info.label = entry.get<std::string>();
    } else if (entry.is_object()) {
      if (!entry.contains("label") || !entry["label"].is_string()) {
        throw ValidationError(field + ": entries need a string label");
      }
      info.label = entry["label"].get<std::string>();
      if (entry.contains("position")) {
        info.position = rat_from_json(entry["position"], field + ".position");
      }
    } else {
      throw ValidationError(field + ": entries must be labels or objects");
    }
    out->push_back(std::move(info));
  }
}

std::vector<std::vector<Rat>> parse_matrix(const Json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw ValidationError(field + ": expected a row-major array of rows");
  }
  std::vector<std::vector<Rat>> out;
  for (const auto& row : doc[field]) out.push_back(rat_vector(row, field));
  return out;
}

}  // namespace

GameSpec game_from_json(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("game: expected a JSON object");
  GameSpec game;
  parse_items(doc, "states", &game.states);
  parse_items(doc, "actions", &game.actions);
  if (!doc.contains("prior")) throw ValidationError("prior: missing");
  game.prior = rat_vector(doc["prior"], "prior");
  game.u_sender = parse_matrix(doc, "u_sender");
  game.u_receiver = parse_matrix(doc, "u_receiver");
  game.validate();
  return game;
}

GameSpec load_game(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ValidationError("game: not valid JSON");
  return game_from_json(doc);
}

GameSpec load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("game: cannot read file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_game(buffer.str());
}

Json game_to_json(const GameSpec& game) {
  Json doc;
  doc["states"] = Json::array();
  for (const auto& s : game.states) {
    Json item;
    item["label"] = s.label;
    if (s.position) item["position"] = to_fraction_string(*s.position);
    doc["states"].push_back(item);
  }
  doc["actions"] = Json::array();
  for (const auto& a : game.actions) {
    Json item;
    item["label"] = a.label;
    if (a.position) item["position"] = to_fraction_string(*a.position);
    doc["actions"].push_back(item);
  }
  doc["prior"] = rat_list(game.prior);
  auto matrix = [](const std::vector<std::vector<Rat>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& entry : row) r.push_back(to_fraction_string(entry));
      rows.push_back(r);
    }
    return rows;
  };
  doc["u_sender"] = matrix(game.u_sender);
  doc["u_receiver"] = matrix(game.u_receiver);
  return doc;
}

Json belief_to_json(const GameSpec& game, const Belief& belief) {
  Json obj;
  obj["probs"] = rat_list(belief.probs);
  obj["probs_approx"] = approx_list(belief.probs);
  Json by_label;
  for (int s = 0; s < game.num_states(); ++s) {
    by_label[game.states[s].label] = to_fraction_string(belief.probs[s]);
  }
  obj["by_state"] = by_label;
  return obj;
}

Json policy_to_json(const GameSpec& game, const InformationPolicy& policy) {
  Json obj;
  obj["support"] = Json::array();
  for (const auto& [belief, weight] : policy.support) {
    Json point;
    point["belief"] = belief_to_json(game, belief);
    put_rat(point, "weight", weight);
    obj["support"].push_back(point);
  }
  obj["barycenter"] = belief_to_json(game, policy.barycenter);
  return obj;
}

Json interval_to_json(const GameSpec& game, const PayoffInterval& interval) {
  Json obj;
  put_rat(obj, "lo", interval.lo);
  put_rat(obj, "hi", interval.hi);
  put_rat(obj, "width", interval.width());
  obj["lo_attained"] = interval.lo_attained;
  if (!interval.lo_attained) {
    put_rat(obj, "lo_epsilon", interval.lo_epsilon);
    put_rat(obj, "lo_pull_delta", interval.lo_pull_delta);
  }
  obj["lo_witness"] = policy_to_json(game, interval.lo_witness);
  obj["hi_witness"] = policy_to_json(game, interval.hi_witness);
  return obj;
}

Json witness_to_json(const GameSpec& game, const EquilibriumWitness& witness) {
  Json obj;
  put_rat(obj, "target", witness.target);
  put_rat(obj, "lambda", witness.lambda);
  put_rat(obj, "zeta", witness.zeta);
  put_rat(obj, "realized_payoff", witness.realized_payoff);
  obj["policy"] = policy_to_json(game, witness.policy);
  return obj;
}

Json theorem1_to_json(const GameSpec& game, const Theorem1Result& result) {
  Json obj;
  obj["applies"] = result.applies;
  obj["strong_holds"] = result.strong_holds;
  Json d = Json::array();
  for (const auto& mu : result.D) d.push_back(belief_to_json(game, mu));
  obj["persuasion_sufficient_D"] = d;
  Json unique = Json::array();
  for (int a : result.potentially_unique) unique.push_back(game.actions[a].label);
  obj["potentially_unique_actions"] = unique;
  obj["failing_points"] = result.failing_points;
  obj["indifferent_points"] = result.indifferent_points;
  return obj;
}

Json no_ties_to_json(const GameSpec& game, const NoTiesResult& result) {
  Json obj;
  obj["holds"] = result.holds;
  if (result.failing_tie_set) {
    Json ties = Json::array();
    for (int a : *result.failing_tie_set) ties.push_back(game.actions[a].label);
    obj["failing_tie_set"] = ties;
  }
  if (result.failing_vertex) obj["failing_vertex"] = belief_to_json(game, *result.failing_vertex);
  return obj;
}

Json global_to_json(const GameSpec& game, const GlobalUniquenessResult& result) {
  Json obj;
  obj["holds"] = result.holds;
  if (result.failing_vertex) {
    obj["failing_vertex"] = belief_to_json(game, *result.failing_vertex);
    put_rat(obj, "failing_v", result.failing_upper);
    put_rat(obj, "failing_cavw", result.failing_cavw);
  }
  return obj;
}

Json genericity_to_json(const GameSpec& game, const GenericityReport& report) {
  Json obj;
  obj["in_U_R"] = report.in_U_R;
  Json entries = Json::array();
  for (const auto& entry : report.phi_values) {
    Json item;
    item["action"] = game.actions[entry.action].label;
    Json subset = Json::array();
    for (int s : entry.state_subset) subset.push_back(game.states[s].label);
    item["state_subset"] = subset;
    put_rat(item, "phi", entry.phi);
    entries.push_back(item);
  }
  obj["phi_values"] = entries;
  Json failing = Json::array();
  for (std::size_t idx : report.failing_indices) {
    const auto& entry = report.phi_values[idx];
    Json item;
    item["action"] = game.actions[entry.action].label;
    Json subset = Json::array();
    for (int s : entry.state_subset) subset.push_back(game.states[s].label);
    item["state_subset"] = subset;
    failing.push_back(item);
  }
  obj["failing_indices"] = failing;
  return obj;
}

Json ordered_to_json(const GameSpec& game, const OrderedReport& report) {
  Json obj;
  obj["is_ordered"] = to_string(report.is_ordered);
  obj["has_positions"] = report.has_positions;
  obj["increasing_differences"] = report.increasing_differences;
  obj["quasi_condition"] = to_string(report.quasi);
  obj["boundary_condition"] = report.boundary_condition;
  obj["theorem2_applies"] = report.theorem2_applies;
  if (report.quasi_counterexample) {
    obj["quasi_counterexample"] = belief_to_json(game, *report.quasi_counterexample);
  }
  if (!report.note.empty()) obj["note"] = report.note;
  return obj;
}

Json verdict_to_json(const GameSpec& game, const UniquenessVerdict& verdict) {
  Json obj;
  obj["verdict"] = to_string(verdict.verdict);
  obj["winning_test"] = to_string(verdict.winning_test);
  obj["interval"] = interval_to_json(game, verdict.interval);
  if (verdict.no_ties) obj["no_relevant_ties"] = no_ties_to_json(game, *verdict.no_ties);
  if (verdict.theorem1) obj["pubr_theorem"] = theorem1_to_json(game, *verdict.theorem1);
  if (verdict.ordered) obj["ordered"] = ordered_to_json(game, *verdict.ordered);
  if (verdict.global) obj["global"] = global_to_json(game, *verdict.global);
  return obj;
}

Json credibility_to_json(const GameSpec& game, const CredibilityReport& report) {
  Json obj;
  Json grid = Json::array();
  for (std::size_t i = 0; i < report.chi_grid.size(); ++i) {
    Json row;
    put_rat(row, "chi", report.chi_grid[i]);
    put_rat(row, "lower_bound", report.lower_bounds[i]);
    grid.push_back(row);
  }
  obj["bounds"] = grid;
  put_rat(obj, "epsilon", report.epsilon);
  put_rat(obj, "min_w", report.min_w);
  put_rat(obj, "limit_at_one", report.limit_at_one);
  obj["strongly_robust"] = report.strongly_robust;
  obj["chi1_interval"] = interval_to_json(game, report.chi1_interval);
  return obj;
}

Json oracle_to_json(const GameSpec& game, const BruteForceInterval& approx,
                    const PayoffInterval& exact, int n) {
  Json obj;
  obj["grid_resolution"] = n;
  put_rat(obj, "grid_lo", approx.lo);
  put_rat(obj, "grid_hi", approx.hi);
  put_rat(obj, "error_bar", approx.error_bar);
  put_rat(obj, "exact_lo", exact.lo);
  put_rat(obj, "exact_hi", exact.hi);
  put_rat(obj, "gap_lo", exact.lo - approx.lo);
  put_rat(obj, "gap_hi", exact.hi - approx.hi);
  return obj;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  out << "mu,v,w,cavv,cavw,mu_approx,v_approx,w_approx,cavv_approx,cavw_approx\n";
  for (const auto& row : rows) {
    out << to_fraction_string(row.mu) << ',' << to_fraction_string(row.v) << ','
        << to_fraction_string(row.w) << ',' << to_fraction_string(row.cavv) << ','
        << to_fraction_string(row.cavw) << ',' << to_decimal_string(row.mu) << ','
        << to_decimal_string(row.v) << ',' << to_decimal_string(row.w) << ','
        << to_decimal_string(row.cavv) << ',' << to_decimal_string(row.cavw) << '\n';
  }
  return out.str();
}

}  // namespace persuasion
