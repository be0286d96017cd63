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

#include <gtest/gtest.h>

#include <thread>

#include "rba/samples.hpp"
#include "rba/shuffle.hpp"
#include "support.hpp"

using namespace rba;
using rba::testing::S;
using rba::testing::T;

namespace {

// Reference product built from a different description: every term picks
// k slots and two increasing embeddings of the factors whose images cover
// all k slots. A slot hit by both factors is a contraction.
TensorElement oracle_words(const ProductKind& kind, Mode mode, const Word& u, const Word& v) {
  const unsigned m = u.length(), n = v.length();
  TensorElement r(mode);
  for (unsigned k = std::max(m, n); k <= m + n; ++k) {
    if (k < m + n && kind.tag == ProductTag::sh) continue;
    for (unsigned long fu = 0; fu < (1ul << k); ++fu) {
      if (static_cast<unsigned>(__builtin_popcountl(fu)) != m) continue;
      for (unsigned long fv = 0; fv < (1ul << k); ++fv) {
        if (static_cast<unsigned>(__builtin_popcountl(fv)) != n || (fu | fv) != (1ul << k) - 1) continue;
        std::vector<Monomial> out;
        Scalar c = 1;
        unsigned i = 0, j = 0;
        for (unsigned s = 0; s < k; ++s) {
          bool inu = fu >> s & 1, inv = fv >> s & 1;
          if (inu && inv) {
            Monomial ab = mono_mul(mode, u[i++], v[j++]);
            switch (kind.tag) {
              case ProductTag::qsh: c *= kind.theta; out.push_back(ab); break;
              case ProductTag::rsh: c *= -1; out.push_back(Monomial()); out.push_back(ab); break;
              case ProductTag::lsh: c *= -1; out.push_back(ab); out.push_back(Monomial()); break;
              case ProductTag::sh: break;
            }
          } else {
            out.push_back(inu ? u[i++] : v[j++]);
          }
        }
        r.add_term(Word(out), c);
      }
    }
  }
  return r;
}

TensorElement oracle(const ProductKind& kind, const TensorElement& x, const TensorElement& y) {
  TensorElement r(x.is_zero() ? y.mode() : x.mode());
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) r.add_scaled(oracle_words(kind, r.mode(), u, v), c * d);
  return r;
}

std::vector<ProductKind> all_kinds() {
  return {ProductKind::sh(), ProductKind::qsh(1), ProductKind::qsh(Scalar(mpz_class(-2), mpz_class(3))), ProductKind::rsh(),
          ProductKind::lsh()};
}

unsigned long binom(unsigned n, unsigned k) {
  unsigned long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Shuffles, Counts) {
  EXPECT_EQ(enumerate_shuffles(1, 2).size(), 3u);
  EXPECT_EQ(enumerate_shuffles(3, 0).size(), 1u);
  EXPECT_EQ(enumerate_shuffles(2, 2).size(), 6u);
  for (unsigned m = 0; m <= 5; ++m)
    for (unsigned n = 0; n <= 5; ++n) {
      auto all = enumerate_shuffles(m, n);
      ASSERT_EQ(all.size(), binom(m + n, m));
      for (const auto& s : all) ASSERT_TRUE(is_valid_shuffle(s));
    }
}

TEST(Shuffles, AdmissiblePairs) {
  ShuffleSpec first{1, 2, {0, 1, 2}, {}};  // a1 b1 b2
  EXPECT_EQ(admissible_pairs(first), std::vector<unsigned>{0});
  ShuffleSpec last{1, 2, {1, 2, 0}, {}};  // b1 b2 a1
  EXPECT_TRUE(admissible_pairs(last).empty());
  for (unsigned m = 1; m <= 4; ++m) {
    ShuffleSpec id{m, 3, {}, {}};
    for (unsigned i = 0; i < m + 3; ++i) id.sigma.push_back(i);
    EXPECT_EQ(admissible_pairs(id), std::vector<unsigned>{m - 1});
  }
  ShuffleSpec bad{2, 1, {1, 0, 2}, {}};
  EXPECT_FALSE(is_valid_shuffle(bad));
  ShuffleSpec bad_t{1, 2, {1, 2, 0}, {0}};
  EXPECT_FALSE(is_valid_shuffle(bad_t));
}

TEST(Products, WorkedExamples) {
  auto A = rba::testing::comm("a1,b1,b2");
  auto a = T(A, "(a1)"), bb = T(A, "(b1|b2)");
  auto sh = T(A, "(a1|b1|b2) + (b1|a1|b2) + (b1|b2|a1)");
  EXPECT_EQ(product_recursive(ProductKind::sh(), a, bb), sh);
  EXPECT_EQ(product_recursive(ProductKind::qsh(2), a, bb), sh + T(A, "2*(a1*b1|b2) + 2*(b1|a1*b2)"));
  EXPECT_EQ(product_recursive(ProductKind::rsh(), a, bb), sh - T(A, "(1|a1*b1|b2) + (b1|1|a1*b2)"));
  EXPECT_EQ(product_recursive(ProductKind::lsh(), a, bb), sh - T(A, "(a1*b1|1|b2) + (b1|a1*b2|1)"));
  for (const auto& k : {ProductKind::qsh(2), ProductKind::rsh(), ProductKind::lsh()})
    EXPECT_EQ(product_recursive(k, a, bb).size(), 5u) << k.name();
}

TEST(Products, SmallExamples) {
  auto A = rba::testing::comm("a,b,c,d,x,y");
  EXPECT_EQ(product_recursive(ProductKind::rsh(), T(A, "(a|b)"), T(A, "(c|d)")).size(), 13u);
  EXPECT_EQ(product_recursive(ProductKind::lsh(), T(A, "(a)"), T(A, "(b)")), T(A, "(a|b) + (b|a) - (a*b|1)"));
  EXPECT_EQ(product_recursive(ProductKind::rsh(), T(A, "(a)"), T(A, "(b)")), T(A, "(a|b) + (b|a) - (1|a*b)"));
  auto U = T(A, "(a|b) - 3*(c)");
  for (const auto& k : all_kinds()) {
    EXPECT_EQ(product_recursive(k, U, T(A, "1_K")), U);
    EXPECT_EQ(product_recursive(k, T(A, "1_K"), U), U);
    EXPECT_EQ(product_recursive(k, U, T(A, "5")), Scalar(5) * U);
    EXPECT_EQ(product_plus(k, T(A, "(a)"), T(A, "(b)")), T(A, "(a*b)"));
    EXPECT_EQ(product_plus(k, T(A, "(1)"), U), U);
    EXPECT_EQ(product_plus(k, U, T(A, "(1)")), U);
  }
  EXPECT_EQ(product_plus(ProductKind::lsh(), T(A, "(a|x)"), T(A, "(b|y)")),
            T(A, "(a*b|x|y) + (a*b|y|x) - (a*b|x*y|1)"));
  EXPECT_THROW(product_plus(ProductKind::lsh(), T(A, "1_K"), T(A, "(a)")), Error);
}

TEST(Products, MatchReferenceOnAllShortWordPairs) {
  for (Mode mode : {Mode::commutative, Mode::noncommutative}) {
    auto A = BaseAlgebra::parse_declaration(mode, "a,b");
    auto words = words_over({Monomial(), A.gen("a"), A.gen("b"), A.parse_monomial("a*b")}, 0, 3);
    for (const auto& k : all_kinds())
      for (const auto& u : words)
        for (const auto& v : words) {
          if (u.length() + v.length() > 4) continue;
          auto x = word_element(mode, u), y = word_element(mode, v);
          auto ref = oracle(k, x, y);
          ASSERT_EQ(product_recursive(k, x, y), ref) << k.name() << " " << S(A, x) << " * " << S(A, y);
          ASSERT_EQ(product_combinatorial(k, x, y), ref) << k.name();
        }
  }
}

TEST(Products, TermCountsForDistinctLetters) {
  auto A = rba::testing::comm("a1,a2,a3,b1,b2,b3");
  std::vector<Monomial> as{A.gen("a1"), A.gen("a2"), A.gen("a3")}, bs{A.gen("b1"), A.gen("b2"), A.gen("b3")};
  for (const auto& k : all_kinds())
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n) {
        Word u({as.begin(), as.begin() + m}), v({bs.begin(), bs.begin() + n});
        auto p = product_recursive(k, word_element(A.mode(), u), word_element(A.mode(), v));
        ASSERT_EQ(p.size(), expected_term_count(k, m, n)) << k.name() << " " << m << "," << n;
      }
  EXPECT_EQ(expected_term_count(ProductKind::rsh(), 2, 2), 13u);
  EXPECT_EQ(expected_term_count(ProductKind::qsh(0), 2, 2), 6u);
}

TEST(Products, AlgebraLawsOnRandomElements) {
  for (Mode mode : {Mode::commutative, Mode::noncommutative}) {
    auto A = BaseAlgebra::parse_declaration(mode, "a,b");
    auto letters = monomials_up_to(A, 1);
    SampleRng rng(42);
    for (const auto& k : all_kinds()) {
      RecursiveProduct mul(k, mode);
      for (int i = 0; i < 40; ++i) {
        auto x = random_element(rng, mode, letters, 0, 2), y = random_element(rng, mode, letters, 0, 2),
             z = random_element(rng, mode, letters, 0, 2);
        ASSERT_EQ(mul(mul(x, y), z), mul(x, mul(y, z))) << k.name();
        if (mode == Mode::commutative) ASSERT_EQ(mul(x, y), mul(y, x)) << k.name();
        auto px = random_element(rng, mode, letters, 1, 2), py = random_element(rng, mode, letters, 1, 2),
             pz = random_element(rng, mode, letters, 1, 2);
        ASSERT_EQ(mul.plus(mul.plus(px, py), pz), mul.plus(px, mul.plus(py, pz))) << k.name();
      }
    }
  }
}

TEST(Products, RandomMultiTermAgreement) {
  auto A = rba::testing::noncomm("a,b");
  auto letters = monomials_up_to(A, 2);
  SampleRng rng(42);
  for (const auto& k : all_kinds())
    for (int i = 0; i < 30; ++i) {
      auto x = random_element(rng, A.mode(), letters, 0, 3, 3), y = random_element(rng, A.mode(), letters, 0, 3, 3);
      ASSERT_EQ(product_recursive(k, x, y), product_combinatorial(k, x, y));
    }
}

TEST(Products, SharedMemoIsStable) {
  auto A = rba::testing::comm("a,b,c");
  RecursiveProduct mul(ProductKind::lsh(), A.mode());
  auto x = T(A, "(a|b|c) + 2*(c|1)"), y = T(A, "(b|a) - (c|c|a)");
  auto first = mul(x, y);
  std::vector<TensorElement> results(4);
  std::vector<std::thread> pool;
  for (auto& r : results) pool.emplace_back([&] { r = mul(x, y); });
  for (auto& t : pool) t.join();
  for (const auto& r : results) EXPECT_EQ(r, first);
  EXPECT_EQ(mul(x, y), oracle(ProductKind::lsh(), x, y));
}

TEST(Products, KindNames) {
  EXPECT_EQ(ProductKind::qsh(Scalar(mpz_class(1), mpz_class(3))).name(), "qsh(1/3)");
  EXPECT_EQ(ProductKind::parse("lsh", 0), ProductKind::lsh());
  EXPECT_EQ(ProductKind::parse("qsh", 2), ProductKind::qsh(2));
  EXPECT_THROW(ProductKind::parse("xsh", 0), Error);
}
