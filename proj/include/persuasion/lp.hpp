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

#ifndef PERSUASION_LP_HPP_
#define PERSUASION_LP_HPP_

#include <optional>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion {

// A dense rational linear program. Variables are free unless bounds are set.
struct LinearProgram {
  enum class Sense { Maximize, Minimize };
  enum class Rel { Le, Eq, Ge };

  struct Row {
    std::vector<Rat> coeffs;
    Rel rel;
    Rat rhs;
  };

  explicit LinearProgram(int num_vars)
      : num_vars(num_vars),
        objective(num_vars, Rat(0)),
        lower(num_vars),
        upper(num_vars) {}

  int num_vars;
  Sense sense = Sense::Maximize;
  std::vector<Rat> objective;
  std::vector<Row> rows;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  void add_row(std::vector<Rat> coeffs, Rel rel, Rat rhs) {
    rows.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
  }
  void set_lower(int var, Rat bound) { lower[var] = std::move(bound); }
  void set_upper(int var, Rat bound) { upper[var] = std::move(bound); }
};

// Dual values are reported per constraint in the order: user rows first, then
// one synthetic row `x_j <= upper_j` for each finite upper bound, in variable
// order. Lower bounds are handled by shifting and surface in the certificate
// identity through reduced costs (see verify_optimal_certificate).
struct LpSolution {
  enum class Status { Optimal, Infeasible, Unbounded };

  Status status = Status::Infeasible;
  Rat value;
  std::vector<Rat> point;  // primal solution (original variables), when optimal
  std::vector<Rat> dual;   // optimal duals, or a Farkas certificate when infeasible
};

// Exact two-phase primal simplex with Bland's rule (terminating, no
// tolerances). All outcomes are statuses; never throws on solvable input.
LpSolution solve_lp(const LinearProgram& lp);

// Exact certificate checks, used by the test suite and available to callers.
//
// Optimal: the point satisfies every row and bound; the dual has the right
// signs (Le rows >= 0, Ge rows <= 0 for maximization; flipped for
// minimization); complementary slackness holds; and
//   value == sum_i dual_i * rhs_i + sum_j reduced_cost_j * lower_j
// with reduced_cost_j == 0 for variables without a finite lower bound.
bool verify_optimal_certificate(const LinearProgram& lp, const LpSolution& sol);

// Infeasible: the Farkas vector aggregates rows (respecting relations and
// bound shifts) into an inequality no point with the given bounds satisfies.
bool verify_farkas_certificate(const LinearProgram& lp, const LpSolution& sol);

}  // namespace persuasion

#endif  // PERSUASION_LP_HPP_
