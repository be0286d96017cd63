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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <algorithm>
#include <span>
#include <vector>

#include "rba/linear.hpp"

namespace rba {

using GenId = std::uint32_t;

/// A basis monomial of the base algebra. Generators are stored as indices
/// into the owning BaseAlgebra; in commutative mode the sequence is kept
/// sorted, so the multiset of exponents is implicit.
class Monomial {
 public:
  Monomial() : gens_{} {}
  explicit Monomial(const std::vector<GenId>& gens) { assign(gens.data(), gens.size()); }
  Monomial(const Monomial& o) { assign(o.data(), o.size_); }
  Monomial(Monomial&& o) noexcept { steal(o); }
  Monomial& operator=(const Monomial& o) {
    if (this != &o) {
      release();
      assign(o.data(), o.size_);
    }
    return *this;
  }
  Monomial& operator=(Monomial&& o) noexcept {
    if (this != &o) {
      release();
      steal(o);
    }
    return *this;
  }
  ~Monomial() { release(); }

  static Monomial generator(GenId g) {
    Monomial m;
    m.size_ = 1;
    m.gens_[0] = g;
    return m;
  }
  static Monomial from_sequence(Mode mode, std::vector<GenId> gens);

  std::span<const GenId> gens() const { return {data(), size_}; }
  std::size_t degree() const { return size_; }
  bool is_unit() const { return size_ == 0; }

  /// Graded lexicographic: lower degree first, then lexicographic on ids.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    const GenId *x = a.data(), *y = b.data();
    for (std::uint32_t i = 0; i < a.size_; ++i)
      if (x[i] != y[i]) return x[i] <=> y[i];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return (a <=> b) == 0; }

 private:
  // Degrees up to kInline live in place; longer monomials use the heap.
  static constexpr std::uint32_t kInline = 7;
  const GenId* data() const { return size_ <= kInline ? gens_ : heap_; }
  void assign(const GenId* p, std::size_t n) {
    size_ = static_cast<std::uint32_t>(n);
    GenId* dst = gens_;
    if (n > kInline) dst = heap_ = new GenId[n];
    std::copy(p, p + n, dst);
  }
  void steal(Monomial& o) {
    size_ = o.size_;
    if (size_ <= kInline) {
      std::copy(o.gens_, o.gens_ + size_, gens_);
    } else {
      heap_ = o.heap_;
    }
    o.size_ = 0;
  }
  void release() {
    if (size_ > kInline) delete[] heap_;
    size_ = 0;
  }

  std::uint32_t size_ = 0;
  union {
    GenId gens_[kInline];
    GenId* heap_;
  };
};

Monomial mono_mul(Mode mode, const Monomial& a, const Monomial& b);

using BaseElement = Linear<Monomial>;
using MonomialPair = std::array<Monomial, 2>;
using BaseTwoLeg = Linear<MonomialPair>;

BaseElement base_mul(const BaseElement& x, const BaseElement& y);
BaseElement base_unit(Mode mode, const Scalar& coeff = 1);

enum class CoproductRule { none, primitive, grouplike };

struct Generator {
  std::string name;
  CoproductRule rule = CoproductRule::none;
  std::string involution;  // empty means self
};

/// Context for a base algebra: mode plus the declared generators, sorted by
/// name so that id order is name order.
class BaseAlgebra {
 public:
  BaseAlgebra(Mode mode, std::vector<Generator> gens);

  /// Declaration syntax: comma separated items "name[=image][:rule]", e.g.
  /// "a=b,b=a,h:primitive,g:grouplike". A one-sided pairing is completed.
  static BaseAlgebra parse_declaration(Mode mode, std::string_view decl);

  Mode mode() const { return mode_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  std::optional<GenId> find(std::string_view name) const;
  GenId id(std::string_view name) const;  // throws undeclared_generator
  const std::string& name(GenId g) const { return gens_.at(g).name; }

  Monomial gen(std::string_view name) const { return Monomial::generator(id(name)); }
  /// Monomial from a generator sequence given by names.
  Monomial monomial(const std::vector<std::string>& names) const;
  BaseElement element(const Monomial& m, const Scalar& coeff = 1) const {
    return BaseElement::term(mode_, m, coeff);
  }

  Monomial involution(const Monomial& m) const;
  BaseElement involution(const BaseElement& x) const;

  BaseTwoLeg coproduct(const Monomial& m) const;
  BaseTwoLeg coproduct(const BaseElement& x) const;
  Scalar counit(const Monomial& m) const;
  Scalar counit(const BaseElement& x) const;
  bool has_coproduct_rules(const Monomial& m) const;

  std::string format(const Monomial& m) const;
  std::string format(const BaseElement& x) const;
  Monomial parse_monomial(std::string_view text) const;

 private:
  void require_rule(GenId g) const;

  Mode mode_;
  std::vector<Generator> gens_;
  std::vector<GenId> pairing_;
};

bool is_reserved_name(std::string_view name);

}  // namespace rba
