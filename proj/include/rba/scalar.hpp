// Copyright 2026 The rba Authors
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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

namespace rba {

/// Exact rational number, always reduced with a positive denominator.
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is held by GMP. Every arithmetic result is normalized
/// back to the inline form when it fits, so representation is canonical.
class Scalar {
 public:
  Scalar() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Scalar(I v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I> || sizeof(I) < sizeof(std::int64_t)) {
      assign(static_cast<__int128>(v), 1);
    } else {
      assign(static_cast<__int128>(static_cast<unsigned __int128>(v)), 1);
    }
  }
  Scalar(const mpz_class& n);                        // NOLINT(google-explicit-constructor)
  Scalar(const mpz_class& num, const mpz_class& den);  // reduces; den != 0
  Scalar(const mpq_class& q);                        // NOLINT(google-explicit-constructor)

  mpq_class mpq() const;
  mpz_class get_num() const;
  mpz_class get_den() const;
  std::string get_str() const;
  int sgn() const { return big_ ? ::sgn(*big_) : (n_ > 0) - (n_ < 0); }
  bool is_integer() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a big value never fits inline
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  void assign(__int128 n, __int128 d);  // d > 0
  void assign(mpq_class q);

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "n" or "n/d" with an optional leading sign.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

/// 1/k!
Scalar inverse_factorial(unsigned k);

Scalar power(const Scalar& base, unsigned exponent);

}  // namespace rba
