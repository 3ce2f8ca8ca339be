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

#ifndef TORUSPENNY_RATIONAL_HPP_
#define TORUSPENNY_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace toruspenny {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", "p" or a plain decimal string such as "-0.25".
// Throws Error(kInvalidInput) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

BigInt floor(const Rational& value);
double to_double(const Rational& value);

}  // namespace toruspenny

#endif  // TORUSPENNY_RATIONAL_HPP_
