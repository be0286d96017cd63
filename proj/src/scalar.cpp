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

#include "rba/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "rba/error.hpp"

namespace rba {

namespace {

using i128 = __int128;
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

void Scalar::assign(i128 n, i128 d) {
  if (d != 1) {
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  if (fits(n) && fits(d)) {
    n_ = static_cast<std::int64_t>(n);
    d_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  assign(std::move(q));
}

void Scalar::assign(mpq_class q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (n >= -kMax) {
      n_ = n;
      d_ = d;
      big_.reset();
      return;
    }
  }
  n_ = 0;
  d_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

Scalar::Scalar(const mpz_class& n) { assign(mpq_class(n)); }

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(std::move(q));
}

Scalar::Scalar(const mpq_class& q) { assign(q); }

mpq_class Scalar::mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

mpz_class Scalar::get_num() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
mpz_class Scalar::get_den() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

std::string Scalar::get_str() const {
  if (big_) return big_->get_str();
  return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

bool Scalar::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(n_, o.n_, &r) && r >= -kMax) {
        n_ = r;
        return *this;
      }
      assign(static_cast<i128>(n_) + o.n_, 1);
      return *this;
    }
    assign(static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_, static_cast<i128>(d_) * o.d_);
    return *this;
  }
  assign(mpq() + o.mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!big_ && !o.big_) {
    if (d_ == 1 && o.d_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(n_, o.n_, &r) && r >= -kMax) {
        n_ = r;
        return *this;
      }
      assign(static_cast<i128>(n_) * o.n_, 1);
      return *this;
    }
    i128 g1 = gcd128(n_, o.d_), g2 = gcd128(o.n_, d_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    i128 n = static_cast<i128>(n_ / g1) * (o.n_ / g2);
    i128 d = static_cast<i128>(d_ / g2) * (o.d_ / g1);
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
      n_ = static_cast<std::int64_t>(n);
      d_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign(n, d);
    return *this;
  }
  assign(mpq() * o.mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sgn() == 0) throw std::domain_error("division by zero");
  if (!o.big_) {
    Scalar inv;
    inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
    inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
    return *this *= inv;
  }
  assign(mpq() / o.mpq());
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  if (a.big_) {
    r.assign(mpq_class(-*a.big_));
  } else {
    r.n_ = -a.n_;
  }
  return r;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.n_) * b.d_, r = static_cast<i128>(b.n_) * a.d_;
    return l <=> r;
  }
  int c = cmp(a.mpq(), b.mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.get_str(); }

std::string_view errc_code(Errc code) {
  switch (code) {
    case Errc::parse: return "E_PARSE";
    case Errc::type: return "E_TYPE";
    case Errc::arity: return "E_ARITY";
    case Errc::undeclared_generator: return "E_UNDECLARED";
    case Errc::mode_mismatch: return "E_MODE";
    case Errc::carrier: return "E_CARRIER";
    case Errc::missing_coproduct_rule: return "E_COPRODUCT";
    case Errc::not_multiplicative: return "E_MORPHISM";
    case Errc::invalid_argument: return "E_ARGUMENT";
  }
  return "E_UNKNOWN";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  return negative ? -q : q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar inverse_factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return Scalar(mpz_class(1), f);
}

Scalar power(const Scalar& base, unsigned exponent) {
  Scalar r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace rba
