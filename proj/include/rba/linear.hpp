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

#include <map>
#include <utility>

#include "rba/error.hpp"
#include "rba/scalar.hpp"

namespace rba {

/// Whether the base algebra is the free commutative (polynomial) algebra or
/// the free noncommutative (word) algebra on the declared generators.
enum class Mode { commutative, noncommutative };

inline const char* mode_name(Mode m) { return m == Mode::commutative ? "comm" : "noncomm"; }

/// A finite rational combination of basis keys. Zero coefficients are never
/// stored, so two combinations are equal iff their term maps coincide.
template <class Key>
class Linear {
 public:
  using Terms = std::map<Key, Scalar>;
  using key_type = Key;

  Linear() = default;
  explicit Linear(Mode mode) : mode_(mode) {}

  static Linear term(Mode mode, Key key, Scalar coeff = 1) {
    Linear r(mode);
    r.add_term(std::move(key), coeff);
    return r;
  }

  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_term(Key&& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += coeff * other
  void add_scaled(const Linear& other, const Scalar& coeff) {
    adopt_mode(other);
    if (coeff == 0) return;
    if (terms_.empty()) {
      terms_ = other.terms_;
      if (coeff != 1)
        for (auto& [k, c] : terms_) c *= coeff;
      return;
    }
    if (coeff == 1) {
      for (const auto& [k, c] : other.terms_) add_term(k, c);
      return;
    }
    for (const auto& [k, c] : other.terms_) add_term(k, c * coeff);
  }

  Linear& operator+=(const Linear& other) {
    add_scaled(other, 1);
    return *this;
  }
  Linear& operator-=(const Linear& other) {
    add_scaled(other, -1);
    return *this;
  }
  Linear& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
  friend Linear operator-(Linear a) { return a *= Scalar(-1); }
  friend Linear operator*(const Scalar& s, Linear a) { return a *= s; }
  friend Linear operator*(Linear a, const Scalar& s) { return a *= s; }

  /// Zero is equal to zero in either mode.
  friend bool operator==(const Linear& a, const Linear& b) {
    if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  /// Applies a linear map given on basis keys.
  template <class F>
  auto map_basis(F&& f) const {
    using Out = decltype(f(std::declval<const Key&>()));
    Out r(mode_);
    for (const auto& [k, c] : terms_) r.add_scaled(f(k), c);
    return r;
  }

 private:
  void adopt_mode(const Linear& other) {
    if (terms_.empty()) {
      mode_ = other.mode_;
    } else if (!other.terms_.empty() && other.mode_ != mode_) {
      throw Error(Errc::mode_mismatch, "cannot combine commutative and noncommutative elements");
    }
  }

  Mode mode_ = Mode::commutative;
  Terms terms_;
};

template <class Key>
void require_same_mode(const Linear<Key>& a, const Linear<Key>& b) {
  if (!a.is_zero() && !b.is_zero() && a.mode() != b.mode())
    throw Error(Errc::mode_mismatch, "operands live in different base modes");
}

}  // namespace rba
