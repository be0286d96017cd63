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

#include "rba/bialgebra.hpp"

#include <map>

#include "rba/io.hpp"
#include "rba/linalg.hpp"
#include "rba/samples.hpp"

namespace rba {

namespace {

void require_commutative(Mode mode, const char* what) {
  if (mode != Mode::commutative) throw Error(Errc::mode_mismatch, std::string(what) + " needs a commutative base");
}

const Monomial& right_letter(const WordPair& p) {
  if (p[1].length() != 1) throw Error(Errc::carrier, "comodule elements need a length-1 right leg");
  return p[1].front();
}

}  // namespace

TwoLeg delta_case1(const BaseAlgebra& H, const TensorElement& x) {
  require_commutative(H.mode(), "the case-1 coproduct");
  require_plus(x, "delta");
  const Mode mode = H.mode();
  TwoLeg r(mode);
  for (const auto& [w, c] : x) {
    // Letterwise Sweedler expansion: first legs form the word, second legs multiply.
    std::vector<std::pair<std::pair<std::vector<Monomial>, Monomial>, Scalar>> acc{{{{}, Monomial()}, Scalar(1)}};
    for (const auto& h : w.letters()) {
      auto dh = H.coproduct(h);
      decltype(acc) next;
      for (const auto& [state, s] : acc)
        for (const auto& [legs, d] : dh) {
          auto first = state.first;
          first.push_back(legs[0]);
          next.push_back({{std::move(first), mono_mul(mode, state.second, legs[1])}, s * d});
        }
      acc = std::move(next);
    }
    for (auto& [state, s] : acc) r.add_term({Word(std::move(state.first)), Word({state.second})}, c * s);
  }
  return r;
}

Scalar counit_case1(const BaseAlgebra& H, const ProductKind& kind, const TensorElement& x) {
  require_plus(x, "eps");
  Scalar r = 0;
  for (const auto& [w, c] : x) {
    Scalar e = c;
    for (const auto& h : w.letters()) e *= H.counit(h);
    if (kind.tag == ProductTag::qsh) e *= power(Scalar(-kind.theta), static_cast<unsigned>(w.length() - 1));
    r += e;
  }
  return r;
}

ThreeLeg delta_case1_left(const BaseAlgebra& H, const TwoLeg& x) {
  ThreeLeg r(x.mode());
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : delta_case1(H, word_element(x.mode(), p[0]))) r.add_term({q[0], q[1], p[1]}, c * d);
  return r;
}

ThreeLeg delta_case1_right(const BaseAlgebra& H, const TwoLeg& x) {
  ThreeLeg r(x.mode());
  for (const auto& [p, c] : x)
    for (const auto& [legs, d] : H.coproduct(right_letter(p))) r.add_term({p[0], Word({legs[0]}), Word({legs[1]})}, c * d);
  return r;
}

TensorElement counit_right_case1(const BaseAlgebra& H, const TwoLeg& x) {
  TensorElement r(x.mode());
  for (const auto& [p, c] : x) r.add_term(p[0], c * H.counit(right_letter(p)));
  return r;
}

TensorElement counit_left_case1(const BaseAlgebra& H, const ProductKind& kind, const TwoLeg& x) {
  TensorElement r(x.mode());
  for (const auto& [p, c] : x) r.add_term(p[1], c * counit_case1(H, kind, word_element(x.mode(), p[0])));
  return r;
}

TwoLeg comodule_product(const Ambient& plus, const TwoLeg& x, const TwoLeg& y) {
  TwoLeg r(plus.mode());
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : y) {
      Word right({mono_mul(plus.mode(), right_letter(p), right_letter(q))});
      for (const auto& [w, e] : plus.engine().plus(word_element(plus.mode(), p[0]), word_element(plus.mode(), q[0])))
        r.add_term({w, right}, c * d * e);
    }
  return r;
}

BaseElement substitute(const BaseAlgebra& H1, const BaseAlgebra& H2, const std::vector<BaseElement>& f, const Monomial& m) {
  if (f.size() != H1.size()) throw Error(Errc::arity, "substitution needs one image per generator");
  BaseElement r = base_unit(H2.mode());
  for (GenId g : m.gens()) r = base_mul(r, f[g]);
  return r;
}

TensorElement lift_substitution(const BaseAlgebra& H1, const BaseAlgebra& H2, const std::vector<BaseElement>& f,
                                const TensorElement& x) {
  TensorElement r(H2.mode());
  for (const auto& [w, c] : x) {
    std::vector<BaseElement> slots;
    for (const auto& m : w.letters()) slots.push_back(substitute(H1, H2, f, m));
    r.add_scaled(word_normalize(H2.mode(), slots), c);
  }
  return r;
}

TensorElement bracket_star(const TensorElement& x) {
  require_plus(x, "bstar");
  TensorElement r(x.mode());
  for (const auto& [w, c] : x) {
    Monomial m;
    for (const auto& a : w.letters()) m = mono_mul(x.mode(), m, a);
    r.add_term(Word({m}), c);
  }
  return r;
}

TwoLeg delta_case2(const TensorElement& x) {
  if (!x.is_zero()) require_commutative(x.mode(), "the case-2 coproduct");
  require_plus(x, "delta");
  TwoLeg r(x.mode());
  const Word one({Monomial()});
  for (const auto& [w, c] : x) {
    r.add_term({w, one}, c);
    if (w.all_units()) continue;
    Monomial m;
    for (const auto& a : w.letters()) m = mono_mul(x.mode(), m, a);
    r.add_term({unit_word(w.length()), Word({m})}, c);
  }
  return r;
}

Scalar counit_case2(const TensorElement& x) {
  require_plus(x, "eps");
  Scalar r = 0;
  for (const auto& [w, c] : x)
    if (w.all_units()) r += c;
  return r;
}

ThreeLeg delta_case2_left(const TwoLeg& x) {
  ThreeLeg r(x.mode());
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : delta_case2(word_element(x.mode(), p[0]))) r.add_term({q[0], q[1], p[1]}, c * d);
  return r;
}

ThreeLeg delta_case2_right(const TwoLeg& x) {
  ThreeLeg r(x.mode());
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : delta_case2(word_element(x.mode(), p[1]))) r.add_term({p[0], q[0], q[1]}, c * d);
  return r;
}

TensorElement counit_right_case2(const TwoLeg& x) {
  TensorElement r(x.mode());
  for (const auto& [p, c] : x)
    if (p[1].all_units()) r.add_term(p[0], c);
  return r;
}

TensorElement counit_left_case2(const TwoLeg& x) {
  TensorElement r(x.mode());
  for (const auto& [p, c] : x)
    if (p[0].all_units()) r.add_term(p[1], c);
  return r;
}

TwoLeg amalg_product(const Ambient& plus, const TwoLeg& x, const TwoLeg& y) {
  TwoLeg r(plus.mode());
  const Mode mode = plus.mode();
  for (const auto& [p, c] : x)
    for (const auto& [q, d] : y) {
      for (const auto* leg : {&p[0], &p[1], &q[0], &q[1]})
        if (leg->empty()) throw Error(Errc::carrier, "⨿ operands need both legs in T⁺(A)");
      const bool x1 = p[0].all_units(), x2 = p[1].all_units(), y1 = q[0].all_units(), y2 = q[1].all_units();
      if ((!x2 && y2 && !y1) || (!x1 && x2 && !y2)) continue;
      auto left = plus.engine().plus(word_element(mode, p[0]), word_element(mode, q[0]));
      auto right = plus.engine().plus(word_element(mode, p[1]), word_element(mode, q[1]));
      r.add_scaled(tensor_pair(left, right), c * d);
    }
  return r;
}

TwoLeg sandwich_apply(const TwoLeg& x) {
  TwoLeg r(x.mode());
  for (const auto& [p, c] : x) r.add_term({p[0].prepend(Monomial()), p[1]}, c);
  return r;
}

OperatedAlgebra<TwoLeg> amalg_square(const BaseAlgebra& A, const ProductKind& kind) {
  Ambient plus = Ambient::plus(kind, A.mode());
  const Word one({Monomial()});
  return {"⨿[" + kind.name() + "]", "𝖯", [plus](const TwoLeg& x, const TwoLeg& y) { return amalg_product(plus, x, y); },
          sandwich_apply, TwoLeg::term(A.mode(), {one, one}), [A](const TwoLeg& x) { return format_two_leg(A, x); }};
}

PrimitiveResult primitives_at_bound(const BaseAlgebra& base, int which_case, const ProductKind& kind, unsigned D) {
  (void)kind;  // both coproducts are independent of the product kind
  require_commutative(base.mode(), "primitive computation");
  if (which_case != 1 && which_case != 2) throw Error(Errc::invalid_argument, "case must be 1 or 2");
  PrimitiveResult res;
  res.basis_words = words_over(monomials_up_to(base, D), 1, D);
  const Mode mode = base.mode();
  const Word one({Monomial()});
  std::map<WordPair, std::size_t> rows;
  std::vector<SparseVector> columns;
  for (const auto& w : res.basis_words) {
    TensorElement x = word_element(mode, w);
    TwoLeg image = which_case == 1 ? delta_case1(base, x) : delta_case2(x);
    image.add_term({w, one}, -1);
    image.add_term({one, w}, -1);
    SparseVector col;
    for (const auto& [p, c] : image) col.emplace(rows.try_emplace(p, rows.size()).first->second, c);
    columns.push_back(std::move(col));
  }
  for (const auto& k : kernel_basis(columns)) {
    TensorElement v(mode);
    for (const auto& [j, c] : k) v.add_term(res.basis_words[j], c);
    res.primitives.push_back(std::move(v));
  }
  return res;
}

}  // namespace rba
