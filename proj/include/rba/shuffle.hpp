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
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "rba/tensor.hpp"

namespace rba {

enum class ProductTag { sh, qsh, rsh, lsh };

/// One of the four shuffle-type products. theta is used by qsh only.
struct ProductKind {
  ProductTag tag = ProductTag::sh;
  Scalar theta = 0;

  static ProductKind sh() { return {ProductTag::sh, 0}; }
  static ProductKind qsh(const Scalar& theta) { return {ProductTag::qsh, theta}; }
  static ProductKind rsh() { return {ProductTag::rsh, 0}; }
  static ProductKind lsh() { return {ProductTag::lsh, 0}; }
  static ProductKind parse(std::string_view tag, const Scalar& theta);

  /// "sh", "qsh(1/3)", "rsh", "lsh"
  std::string name() const;
  /// Rota–Baxter weight realised by P_A on this product (0 for sh, theta for qsh).
  friend bool operator==(const ProductKind& a, const ProductKind& b) {
    return a.tag == b.tag && (a.tag != ProductTag::qsh || a.theta == b.theta);
  }
};

/// An (m,n)-shuffle. sigma[k] is the letter placed at position k (0-based);
/// letters 0..m-1 come from the left word, m..m+n-1 from the right word.
struct ShuffleSpec {
  unsigned m = 0;
  unsigned n = 0;
  std::vector<unsigned> sigma;
  /// Chosen positions k (0-based) whose pair (k,k+1) is contracted.
  std::vector<unsigned> contracted;
};

/// All (m,n)-shuffles in lexicographic order of sigma, T empty.
std::vector<ShuffleSpec> enumerate_shuffles(unsigned m, unsigned n);
/// Positions k with a left letter at k and a right letter at k+1.
std::vector<unsigned> admissible_pairs(const ShuffleSpec& spec);
bool is_valid_shuffle(const ShuffleSpec& spec);

/// Contribution of one (sigma, T) to the product of two words.
TensorElement apply_shuffle(const ProductKind& kind, Mode mode, const ShuffleSpec& spec, const Word& u, const Word& v);

TensorElement product_combinatorial(const ProductKind& kind, const TensorElement& x, const TensorElement& y);

/// Memoised recursive evaluation of the product on word pairs. Instances are
/// internally synchronised and may be shared.
class RecursiveProduct {
 public:
  RecursiveProduct(ProductKind kind, Mode mode) : kind_(std::move(kind)), mode_(mode) {}

  const ProductKind& kind() const { return kind_; }
  Mode mode() const { return mode_; }

  TensorElement words(const Word& u, const Word& v) const;
  TensorElement operator()(const TensorElement& x, const TensorElement& y) const;
  /// Extended product on T⁺(A): (a⊗U)(b⊗V) = [a;b]⊗(U•V).
  TensorElement plus(const TensorElement& x, const TensorElement& y) const;

 private:
  const TensorElement& cached(const Word& u, const Word& v) const;

  ProductKind kind_;
  Mode mode_;
  mutable std::mutex mutex_;
  struct PairLess {
    using is_transparent = void;
    using Probe = std::pair<const Word*, const Word*>;
    static std::strong_ordering cmp(const Word& a, const Word& b, const Word& c, const Word& d) {
      auto o = a <=> c;
      return o != 0 ? o : b <=> d;
    }
    bool operator()(const std::pair<Word, Word>& x, const std::pair<Word, Word>& y) const {
      return cmp(x.first, x.second, y.first, y.second) < 0;
    }
    bool operator()(const std::pair<Word, Word>& x, const Probe& y) const {
      return cmp(x.first, x.second, *y.first, *y.second) < 0;
    }
    bool operator()(const Probe& x, const std::pair<Word, Word>& y) const {
      return cmp(*x.first, *x.second, y.first, y.second) < 0;
    }
  };
  mutable std::map<std::pair<Word, Word>, TensorElement, PairLess> memo_;
};

TensorElement product_recursive(const ProductKind& kind, const TensorElement& x, const TensorElement& y);
TensorElement product_plus(const ProductKind& kind, const TensorElement& x, const TensorElement& y);

/// Number of normalised terms for distinct-letter words of lengths m, n.
std::size_t expected_term_count(const ProductKind& kind, unsigned m, unsigned n);

}  // namespace rba
