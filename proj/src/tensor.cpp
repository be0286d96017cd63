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

#include "rba/tensor.hpp"

#include <algorithm>
#include <string>

namespace rba {

bool Word::all_units() const {
  return !letters_.empty() && std::all_of(letters_.begin(), letters_.end(), [](const Monomial& m) { return m.is_unit(); });
}

std::size_t Word::degree() const {
  std::size_t d = 0;
  for (const auto& m : letters_) d += m.degree();
  return d;
}

Word Word::prepend(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(letters_.size() + 1);
  out.push_back(m);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::append(const Monomial& m) const {
  std::vector<Monomial> out = letters_;
  out.push_back(m);
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Monomial> out;
  out.reserve(a.length() + b.length());
  out.insert(out.end(), a.letters().begin(), a.letters().end());
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word unit_word(std::size_t n) { return Word(std::vector<Monomial>(n)); }

TensorElement word_normalize(Mode mode, const std::vector<BaseElement>& slots) {
  std::vector<std::pair<std::vector<Monomial>, Scalar>> acc{{{}, Scalar(1)}};
  for (const auto& slot : slots) {
    if (!slot.is_zero() && slot.mode() != mode)
      throw Error(Errc::mode_mismatch, "word slot lives in a different base mode");
    std::vector<std::pair<std::vector<Monomial>, Scalar>> next;
    for (const auto& [prefix, c] : acc)
      for (const auto& [m, d] : slot) {
        auto w = prefix;
        w.push_back(m);
        next.emplace_back(std::move(w), c * d);
      }
    acc = std::move(next);
  }
  TensorElement r(mode);
  for (auto& [w, c] : acc) r.add_term(Word(std::move(w)), c);
  return r;
}

TensorElement linear_combine(Mode mode, const std::vector<std::pair<Scalar, TensorElement>>& parts) {
  TensorElement r(mode);
  for (const auto& [c, x] : parts) r.add_scaled(x, c);
  return r;
}

TensorElement tensor_concat(const TensorElement& x, const TensorElement& y) {
  require_same_mode(x, y);
  TensorElement r(x.is_zero() ? y.mode() : x.mode());
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) r.add_term(concat(u, v), c * d);
  return r;
}

std::map<std::size_t, TensorElement> grade_decompose(const TensorElement& x) {
  std::map<std::size_t, TensorElement> parts;
  for (const auto& [w, c] : x) {
    auto [it, _] = parts.try_emplace(w.length(), x.mode());
    it->second.add_term(w, c);
  }
  return parts;
}

bool in_plus(const TensorElement& x) {
  return std::all_of(x.begin(), x.end(), [](const auto& t) { return t.first.length() >= 1; });
}

void require_plus(const TensorElement& x, std::string_view where) {
  if (!in_plus(x))
    throw Error(Errc::carrier, std::string(where) + ": argument contains the empty word 1_K, outside T⁺(A)");
}

TwoLeg tensor_pair(const TensorElement& x, const TensorElement& y) {
  require_same_mode(x, y);
  TwoLeg r(x.is_zero() ? y.mode() : x.mode());
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) r.add_term({u, v}, c * d);
  return r;
}

TensorElement include_letters(const BaseElement& x) {
  TensorElement r(x.mode());
  for (const auto& [m, c] : x) r.add_term(Word({m}), c);
  return r;
}

BaseElement letters_to_base(const TensorElement& x) {
  BaseElement r(x.mode());
  for (const auto& [w, c] : x) {
    if (w.length() != 1) throw Error(Errc::carrier, "expected a combination of length-1 words");
    r.add_term(w.front(), c);
  }
  return r;
}

TensorElement involution_extend(const BaseAlgebra& base, const TensorElement& x) {
  return map_letters(x, [&](const Monomial& m) { return base.element(base.involution(m)); });
}

}  // namespace rba
