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
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "rba/base_algebra.hpp"

namespace rba {

/// A tensor word a1|...|an of base monomials. The empty word is 1_K.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Monomial> letters) : letters_(std::move(letters)) {}

  const std::vector<Monomial>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Monomial& operator[](std::size_t i) const { return letters_[i]; }
  const Monomial& front() const { return letters_.front(); }

  /// Nonempty and every letter is the unit monomial, i.e. 1^{⊗n} with n >= 1.
  bool all_units() const;
  /// Sum of letter degrees.
  std::size_t degree() const;

  Word tail() const { return Word({letters_.begin() + 1, letters_.end()}); }
  Word prepend(const Monomial& m) const;
  Word append(const Monomial& m) const;

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Monomial> letters_;
};

Word concat(const Word& a, const Word& b);
Word unit_word(std::size_t n);

using TensorElement = Linear<Word>;
using WordPair = std::array<Word, 2>;
using TwoLeg = Linear<WordPair>;
using WordTriple = std::array<Word, 3>;
using ThreeLeg = Linear<WordTriple>;

inline TensorElement word_element(Mode mode, Word w, const Scalar& c = 1) {
  return TensorElement::term(mode, std::move(w), c);
}
/// The scalar k*1_K.
inline TensorElement scalar_element(Mode mode, const Scalar& k) { return word_element(mode, Word(), k); }
/// The length-1 word (m).
inline TensorElement letter_element(Mode mode, const Monomial& m, const Scalar& c = 1) {
  return word_element(mode, Word({m}), c);
}

/// Expands [x1, ..., xn] multilinearly into words.
TensorElement word_normalize(Mode mode, const std::vector<BaseElement>& slots);
TensorElement linear_combine(Mode mode, const std::vector<std::pair<Scalar, TensorElement>>& parts);
TensorElement tensor_concat(const TensorElement& x, const TensorElement& y);
std::map<std::size_t, TensorElement> grade_decompose(const TensorElement& x);

/// Membership in T⁺(A): every word has length at least one.
bool in_plus(const TensorElement& x);
void require_plus(const TensorElement& x, std::string_view where);

TwoLeg tensor_pair(const TensorElement& x, const TensorElement& y);

/// i_A: BaseElement -> length-1 words.
TensorElement include_letters(const BaseElement& x);
/// Inverse of include_letters on length-1 words; throws carrier otherwise.
BaseElement letters_to_base(const TensorElement& x);

/// Letterwise application of a base monomial map, outer order preserved.
template <class F>
TensorElement map_letters(const TensorElement& x, F&& f) {
  return x.map_basis([&](const Word& w) {
    std::vector<BaseElement> slots;
    slots.reserve(w.length());
    for (const auto& m : w.letters()) slots.push_back(f(m));
    return word_normalize(x.mode(), slots);
  });
}

TensorElement involution_extend(const BaseAlgebra& base, const TensorElement& x);

}  // namespace rba
