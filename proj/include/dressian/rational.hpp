// Copyright 2026 The Dressian Authors.
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

#ifndef DRESSIAN_RATIONAL_HPP_
#define DRESSIAN_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dressian {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts "p" or "p/q" with an optional leading '-'; q must be nonzero.
// Decimal points and exponents are rejected. Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical form: lowest terms, positive denominator, "p" when q == 1.
std::string to_string(const Rational& value);

}  // namespace dressian

#endif  // DRESSIAN_RATIONAL_HPP_
