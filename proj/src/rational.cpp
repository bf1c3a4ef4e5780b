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

#include "persuasion/rational.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace persuasion {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> try_parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) return std::nullopt;

  Rat value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos && dot != std::string::npos) return std::nullopt;

  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(den, 10);
    if (d == 0) return std::nullopt;
    value = Rat(mpz_class(num, 10), d);
  } else if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class numerator = mpz_class(whole, 10) * scale + mpz_class(frac, 10);
    value = Rat(numerator, scale);
  } else {
    if (!all_digits(body)) return std::nullopt;
    value = Rat(mpz_class(body, 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

Rat parse_rational(const std::string& text) {
  auto parsed = try_parse_rational(text);
  if (!parsed) {
    throw ValidationError("malformed rational numeral: \"" + text + "\"");
  }
  return *parsed;
}

std::string to_fraction_string(const Rat& value) {
  Rat canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

std::string to_decimal_string(const Rat& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  // 4 bits per decimal digit plus slack keeps the mpf conversion exact enough
  // for the requested display precision.
  mpf_class approx(value, static_cast<mp_bitcnt_t>(significant_digits) * 4 + 64);
  char* raw = nullptr;
  gmp_asprintf(&raw, "%.*Fg", significant_digits, approx.get_mpf_t());
  std::string out(raw);
  void (*free_fn)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(raw, out.size() + 1);
  return out;
}

double to_double(const Rat& value) { return value.get_d(); }

std::string to_fraction_string(const std::vector<Rat>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ", ";
    out << to_fraction_string(values[i]);
  }
  out << ")";
  return out.str();
}

}  // namespace persuasion
