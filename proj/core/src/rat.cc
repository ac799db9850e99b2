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

#include "kip/rat.h"

#include <cctype>

#include "kip/error.h"

namespace kip {

Rat MakeRat(const Int& num, const Int& den) {
  if (den == 0) {
    throw Error(ErrorCode::kNonpositiveDivisor, "zero denominator");
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat RatPow(const Rat& q, unsigned long j) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), j);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), j);
  // Powers of a reduced fraction stay reduced.
  Rat result;
  mpz_set(result.get_num_mpz_t(), num.get_mpz_t());
  mpz_set(result.get_den_mpz_t(), den.get_mpz_t());
  return result;
}

Int FloorDivRat(const Rat& a, const Rat& d) {
  if (sgn(d) <= 0) {
    throw Error(ErrorCode::kNonpositiveDivisor, "divisor must be positive");
  }
  return Floor(Rat(a / d));
}

Int CeilDivRat(const Rat& a, const Rat& d) {
  if (sgn(d) <= 0) {
    throw Error(ErrorCode::kNonpositiveDivisor, "divisor must be positive");
  }
  return Ceil(Rat(a / d));
}

Int Floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int Ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::optional<Int> ParseNonNegativeInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  }
  return Int(std::string(text), 10);
}

std::optional<Rat> ParseRat(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rat value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = ParseNonNegativeInt(text.substr(0, slash));
    auto den = ParseNonNegativeInt(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    value = MakeRat(*num, *den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    Int whole_part = 0;
    if (!whole.empty()) {
      auto w = ParseNonNegativeInt(whole);
      if (!w) return std::nullopt;
      whole_part = *w;
    }
    Int frac_part = 0;
    Int scale = 1;
    if (!frac.empty()) {
      auto f = ParseNonNegativeInt(frac);
      if (!f) return std::nullopt;
      frac_part = *f;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    }
    value = MakeRat(Int(whole_part * scale + frac_part), scale);
  } else {
    auto v = ParseNonNegativeInt(text);
    if (!v) return std::nullopt;
    value = Rat(*v);
  }
  if (negative) value = -value;
  return value;
}

std::string ToString(const Rat& value) {
  Rat q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ToString(const Int& v) { return v.get_str(); }

std::optional<std::uint64_t> ToUint64(const Int& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    return std::nullopt;
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

Int Lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace kip
