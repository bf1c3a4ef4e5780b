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

#ifndef PERSUASION_RATIONAL_HPP_
#define PERSUASION_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace persuasion {

// Every quantity that enters a payoff, belief, or verdict is an exact
// rational. Ties and knife-edge equalities carry the substance here, so there
// is no floating-point code path anywhere in the library.
using Rat = mpq_class;

// Thrown for malformed inputs: bad numerals, invalid games, beliefs off the
// simplex, out-of-range arguments. The CLI maps it to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Accepted grammar: [sign] digits, [sign] digits "/" digits (nonzero
// denominator), or [sign] digits "." digits. Decimals convert exactly
// ("0.25" -> 1/4). No exponents, no whitespace.
std::optional<Rat> try_parse_rational(const std::string& text);

// Same grammar; throws ValidationError naming the offending text.
Rat parse_rational(const std::string& text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rat& value);

// Display-only decimal approximation, 20 significant digits by default.
std::string to_decimal_string(const Rat& value, int significant_digits = 20);

double to_double(const Rat& value);

std::string to_fraction_string(const std::vector<Rat>& values);

// The two-argument mpq_class constructor does not canonicalize; every
// variable-denominator fraction must go through here so exact comparisons
// stay valid.
inline Rat make_frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace persuasion

#endif  // PERSUASION_RATIONAL_HPP_
