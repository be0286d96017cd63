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

#include "rba/dendriform.hpp"
#include "rba/samples.hpp"
#include "support.hpp"

using namespace rba;
using rba::testing::S;
using rba::testing::T;

namespace {

std::vector<TensorElement> short_words(const BaseAlgebra& A, bool with_unit, unsigned max_len) {
  std::vector<Monomial> letters{A.gen("a"), A.gen("b")};
  if (with_unit) letters.insert(letters.begin(), Monomial());
  if (A.mode() == Mode::commutative) letters.push_back(A.parse_monomial("a*b"));
  return as_elements(A.mode(), words_over(letters, 1, max_len));
}

std::vector<std::vector<TensorElement>> bounded_triples(const std::vector<TensorElement>& pool, std::size_t total) {
  auto len = [](const TensorElement& x) { return x.begin()->first.length(); };
  std::vector<std::vector<TensorElement>> out;
  for (const auto& t : all_tuples(pool, 3))
    if (len(t[0]) + len(t[1]) + len(t[2]) <= total) out.push_back(t);
  return out;
}

}  // namespace

TEST(Tridendriform, PlusLshExamples) {
  auto A = rba::testing::comm("a,b");
  auto td = Tridendriform::plus_lsh(A.mode());
  EXPECT_EQ(td.prec(T(A, "(a)"), T(A, "(b)")), T(A, "(a|b)"));
  EXPECT_EQ(td.succ(T(A, "(a)"), T(A, "(b)")), T(A, "(b|a)"));
  EXPECT_EQ(td.dot(T(A, "(a)"), T(A, "(b)")), T(A, "-(a*b|1)"));
  EXPECT_EQ(td.star(T(A, "(a)"), T(A, "(b)")), td.ambient().mul(T(A, "(a)"), T(A, "(1|b)")) +
                                                    td.ambient().mul(T(A, "(1|a)"), T(A, "(b)")) - T(A, "(a*b|1)"));
  EXPECT_THROW(td.prec(T(A, "1_K"), T(A, "(a)")), Error);
}

TEST(Tridendriform, QoneExamples) {
  auto A = rba::testing::comm("a,b");
  auto td = Tridendriform::qone(A.mode());
  EXPECT_EQ(td.prec(T(A, "(a)"), T(A, "(b)")), T(A, "(a|b)"));
  EXPECT_EQ(td.succ(T(A, "(a)"), T(A, "(b)")), T(A, "(b|a)"));
  EXPECT_EQ(td.dot(T(A, "(a)"), T(A, "(b)")), T(A, "(a*b)"));
  try {
    td.dot(T(A, "(a|1)"), T(A, "(b)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::carrier);
  }
}

TEST(Tridendriform, AxiomsHold) {
  for (auto mk : {&Tridendriform::plus_lsh, &Tridendriform::qone}) {
    auto A = rba::testing::comm("a,b");
    auto td = mk(A.mode());
    auto pool = short_words(A, td.carrier() == Carrier::plus_lsh, 2);
    auto reps = check_tridend_axioms(td, bounded_triples(pool, 4), all_tuples(pool, 2), "test",
                                     [&](const TensorElement& x) { return S(A, x); });
    EXPECT_EQ(reps.size(), 9u);
    for (const auto& r : reps) EXPECT_TRUE(r.pass) << carrier_name(td.carrier()) << " " << r.identity;
  }
  auto N = rba::testing::noncomm("a,b");
  auto td = Tridendriform::qone(N.mode());
  auto pool = short_words(N, false, 2);
  auto reps = check_tridend_axioms(td, bounded_triples(pool, 4), all_tuples(pool, 2), "test",
                                   [&](const TensorElement& x) { return S(N, x); });
  EXPECT_EQ(reps.size(), 7u);
  for (const auto& r : reps) EXPECT_TRUE(r.pass) << r.identity;
}

TEST(Tridendriform, FlippedDotFails) {
  auto A = rba::testing::comm("a,b");
  auto td = Tridendriform::plus_lsh(A.mode()).with_flipped_dot();
  auto pool = short_words(A, true, 1);
  auto reps = check_tridend_axioms(td, all_tuples(pool, 3), all_tuples(pool, 2), "test",
                                   [&](const TensorElement& x) { return S(A, x); });
  bool some_failure = false;
  for (const auto& r : reps)
    if (!r.pass) {
      some_failure = true;
      EXPECT_TRUE(r.counterexample.has_value());
    }
  EXPECT_TRUE(some_failure);
}

TEST(Tridendriform, StarIsTheUnderlyingProduct) {
  auto A = rba::testing::comm("a,b");
  auto plus = Tridendriform::plus_lsh(A.mode());
  auto qone = Tridendriform::qone(A.mode());
  auto amb = plus.ambient();
  auto P1 = T(A, "(1|1)");
  for (const auto& x : short_words(A, true, 2))
    for (const auto& y : short_words(A, true, 2)) {
      // x *_P y = P(x)y + xP(y) - x P(1) y
      auto starP = amb.mul(shift_right(x), y) + amb.mul(x, shift_right(y)) - amb.mul(amb.mul(x, P1), y);
      ASSERT_EQ(plus.star(x, y), starP);
    }
  for (const auto& x : short_words(A, false, 2))
    for (const auto& y : short_words(A, false, 2))
      ASSERT_EQ(qone.star(x, y), product_recursive(ProductKind::qsh(1), x, y));
}

TEST(Omega, Examples) {
  auto A = rba::testing::comm("v1,v2,v3");
  EXPECT_EQ(omega(T(A, "(v1)")), T(A, "(v1)"));
  EXPECT_EQ(omega(T(A, "(v1*v2)")), T(A, "-(v1*v2|1)"));
  EXPECT_EQ(omega(T(A, "(v1*v2|v3)")), T(A, "-(v1*v2|1|v3)"));
  EXPECT_EQ(omega(T(A, "(v1^3)")), T(A, "(v1^3|1|1)"));
  EXPECT_THROW(omega(T(A, "(1|v1)")), Error);
}

TEST(Omega, IsATridendriformMorphism) {
  auto A = rba::testing::comm("a,b");
  auto qone = Tridendriform::qone(A.mode());
  auto plus = Tridendriform::plus_lsh(A.mode());
  auto pool = short_words(A, false, 2);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (x.begin()->first.degree() + y.begin()->first.degree() > 4) continue;
      for (TriOp op : {TriOp::prec, TriOp::succ, TriOp::dot})
        ASSERT_EQ(omega(qone.apply(op, x, y)), plus.apply(op, omega(x), omega(y)))
            << triop_name(op) << " " << S(A, x) << " " << S(A, y);
    }
}

TEST(Omega, DecomposeRoundTrip) {
  auto A = rba::testing::comm("a,b,c");
  auto qone = Tridendriform::qone(A.mode());
  auto w = parse_word(A, "(a*b|c|a)");
  EXPECT_EQ(serialize_tree(A, *omega_decompose(w)), "prec(dot([a]; [b]); prec([c]; [a]))");
  EXPECT_EQ(serialize_tree(A, *omega_decompose(parse_word(A, "(a|b)"))), "prec([a]; [b])");
  std::vector<Monomial> letters;
  for (const auto& m : monomials_up_to(A, 3))
    if (!m.is_unit()) letters.push_back(m);
  for (const auto& u : words_over(letters, 1, 3)) {
    if (u.degree() > 5) continue;
    ASSERT_EQ(evaluate_tree(qone, *omega_decompose(u)), word_element(A.mode(), u)) << format_word(A, u);
  }
  EXPECT_THROW(omega_decompose(Word()), Error);
  EXPECT_THROW(omega_decompose(parse_word(A, "(a|1)")), Error);
}

TEST(Involution, ReversesDendriformProducts) {
  auto N = BaseAlgebra::parse_declaration(Mode::noncommutative, "a=b,b,c");
  auto qone = Tridendriform::qone(N.mode());
  std::vector<Monomial> letters{N.gen("a"), N.gen("c"), N.parse_monomial("a*c")};
  auto pool = as_elements(N.mode(), words_over(letters, 1, 2));
  auto dag = [&](const TensorElement& x) { return involution_extend(N, x); };
  for (const auto& x : pool)
    for (const auto& y : pool) {
      ASSERT_EQ(dag(qone.prec(x, y)), qone.succ(dag(y), dag(x)));
      ASSERT_EQ(dag(qone.dot(x, y)), qone.dot(dag(y), dag(x)));
    }
}
