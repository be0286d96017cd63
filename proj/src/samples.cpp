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

#include "rba/samples.hpp"

#include <algorithm>

namespace rba {

namespace {

void multisets(GenId n, unsigned d, GenId from, std::vector<GenId>& cur, std::vector<Monomial>& out) {
  out.emplace_back(cur);
  if (cur.size() == d) return;
  for (GenId g = from; g < n; ++g) {
    cur.push_back(g);
    multisets(n, d, g, cur, out);
    cur.pop_back();
  }
}

void sequences(GenId n, unsigned d, std::vector<GenId>& cur, std::vector<Monomial>& out) {
  out.emplace_back(cur);
  if (cur.size() == d) return;
  for (GenId g = 0; g < n; ++g) {
    cur.push_back(g);
    sequences(n, d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(const BaseAlgebra& base, unsigned d) {
  std::vector<Monomial> out;
  std::vector<GenId> cur;
  auto n = static_cast<GenId>(base.size());
  if (base.mode() == Mode::commutative) {
    multisets(n, d, 0, cur, out);
  } else {
    sequences(n, d, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_over(const std::vector<Monomial>& letters, unsigned min_len, unsigned max_len) {
  std::vector<Word> out;
  std::vector<std::vector<Monomial>> layer{{}};
  for (unsigned len = 0; len <= max_len; ++len) {
    if (len >= min_len)
      for (const auto& w : layer) out.emplace_back(w);
    if (len == max_len) break;
    std::vector<std::vector<Monomial>> next;
    for (const auto& w : layer)
      for (const auto& m : letters) {
        auto u = w;
        u.push_back(m);
        next.push_back(std::move(u));
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<TensorElement> as_elements(Mode mode, const std::vector<Word>& words) {
  std::vector<TensorElement> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(word_element(mode, w));
  return out;
}

Scalar SampleRng::small_rational() {
  long num = static_cast<long>(below(6)) - 3;
  if (num >= 0) ++num;  // skip zero: values in {-3,-2,-1,1,2,3}
  auto den = static_cast<unsigned long>(below(3) + 1);
  Scalar q{mpz_class(num), mpz_class(den)};
  return q;
}

TensorElement random_element(SampleRng& rng, Mode mode, const std::vector<Monomial>& letters, unsigned min_len,
                             unsigned max_len, unsigned max_terms) {
  TensorElement x(mode);
  auto terms = 1 + rng.below(max_terms);
  for (std::uint64_t t = 0; t < terms; ++t) {
    auto len = min_len + rng.below(max_len - min_len + 1);
    std::vector<Monomial> w;
    for (std::uint64_t i = 0; i < len; ++i) w.push_back(letters[rng.below(letters.size())]);
    x.add_term(Word(std::move(w)), t == 0 ? Scalar(1) : rng.small_rational());
  }
  if (x.is_zero()) x.add_term(Word(std::vector<Monomial>(min_len, letters.front())), 1);
  return x;
}

std::vector<TensorElement> random_pool(SampleRng& rng, Mode mode, const std::vector<Monomial>& letters, unsigned min_len,
                                       unsigned max_len, std::size_t count, unsigned max_terms) {
  std::vector<TensorElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_element(rng, mode, letters, min_len, max_len, max_terms));
  return out;
}

}  // namespace rba
