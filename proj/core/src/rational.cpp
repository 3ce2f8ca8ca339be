// Copyright 2026 The toruspenny Authors
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

#include "toruspenny/rational.hpp"

#include <cctype>

#include "toruspenny/error.hpp"

namespace toruspenny {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidInput: return "invalid-input";
    case Errc::kDegeneratePair: return "degenerate-pair";
    case Errc::kDegenerateConfiguration: return "degenerate-configuration";
    case Errc::kMode: return "mode";
    case Errc::kCatalog: return "catalog";
    case Errc::kSize: return "size";
    case Errc::kConvergence: return "convergence";
    case Errc::kStructure: return "structure";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// BigInt's string constructor reads a leading 0 as an octal prefix.
BigInt decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return digits.empty() ? BigInt(0) : BigInt(std::string(digits));
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(Errc::kInvalidInput,
                "malformed rational '" + std::string(whole) + "'");
  }
  BigInt v = decimal(s);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(Errc::kInvalidInput,
                  "malformed rational '" + std::string(text) + "'");
    }
    BigInt den = decimal(den_text);
    if (den == 0) {
      throw Error(Errc::kInvalidInput,
                  "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
      int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw Error(Errc::kInvalidInput,
                  "malformed rational '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num = decimal(digits);
    BigInt den = boost::multiprecision::pow(BigInt(10),
                                            static_cast<unsigned>(frac_part.size()));
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt floor(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace toruspenny
