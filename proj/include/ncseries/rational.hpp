// Copyright 2026 The ncseries Authors
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

#ifndef NCSERIES_RATIONAL_HPP
#define NCSERIES_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncs {

// Exact coefficients. GMP keeps arithmetic results canonical (lowest terms,
// positive denominator); only string construction needs an explicit
// canonicalize, which parse_rational does.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace ncs

#endif  // NCSERIES_RATIONAL_HPP
