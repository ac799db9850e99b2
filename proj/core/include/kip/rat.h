// Copyright 2026 The kip Authors
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

#ifndef KIP_RAT_H_
#define KIP_RAT_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kip {

// Arbitrary-precision integers and canonical rationals. mpq_class keeps every
// value reduced with a positive denominator after each arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. Throws kNonpositiveDivisor when den == 0.
Rat MakeRat(const Int& num, const Int& den);

// q^j by repeated squaring.
Rat RatPow(const Rat& q, unsigned long j);

// ceil(a / d) for a >= 0 and d > 0.
Int CeilDivRat(const Rat& a, const Rat& d);

// floor(a / d) for d > 0.
Int FloorDivRat(const Rat& a, const Rat& d);

Int Floor(const Rat& q);
Int Ceil(const Rat& q);

// Parses "3", "-2", "7/4" or a decimal literal such as "0.125". The
// conversion is exact. Returns nullopt on malformed text or a zero
// denominator.
std::optional<Rat> ParseRat(std::string_view text);

// Parses a non-negative decimal integer literal with no sign or spaces.
std::optional<Int> ParseNonNegativeInt(std::string_view text);

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
std::string ToString(const Rat& q);
std::string ToString(const Int& v);

// Checked narrowing used wherever an exact quantity becomes a DP index.
std::optional<std::uint64_t> ToUint64(const Int& v);

Int Lcm(const Int& a, const Int& b);

}  // namespace kip

#endif  // KIP_RAT_H_
