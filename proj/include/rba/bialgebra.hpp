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

#include <vector>

#include "rba/operators.hpp"

namespace rba {

// Case 1: T⁺(H) over a commutative bialgebra H given by generator rules.
// The comodule target T⁺(H)⊗H is stored as pairs whose right leg is a
// length-1 word.

TwoLeg delta_case1(const BaseAlgebra& H, const TensorElement& x);
Scalar counit_case1(const BaseAlgebra& H, const ProductKind& kind, const TensorElement& x);
/// (Δ⊗id)Δ, with both legs expanded.
ThreeLeg delta_case1_left(const BaseAlgebra& H, const TwoLeg& x);
/// (id⊗δ)Δ via the base coproduct on the right leg.
ThreeLeg delta_case1_right(const BaseAlgebra& H, const TwoLeg& x);
/// (id⊗ε)x, contracting the right leg.
TensorElement counit_right_case1(const BaseAlgebra& H, const TwoLeg& x);
/// (ε⊗id)x as a combination of length-1 words.
TensorElement counit_left_case1(const BaseAlgebra& H, const ProductKind& kind, const TwoLeg& x);
/// Product in T⁺(H)⊗H: •̄^q on the left leg, base product on the right.
TwoLeg comodule_product(const Ambient& plus, const TwoLeg& x, const TwoLeg& y);

/// Letterwise lift of a generator substitution f: H1 -> H2.
TensorElement lift_substitution(const BaseAlgebra& H1, const BaseAlgebra& H2, const std::vector<BaseElement>& f,
                                const TensorElement& x);
BaseElement substitute(const BaseAlgebra& H1, const BaseAlgebra& H2, const std::vector<BaseElement>& f, const Monomial& m);

// Case 2: T⁺(A) over a commutative algebra with the ⨿-square.

/// [a1⊗...⊗an]* = (a1⋯an)
TensorElement bracket_star(const TensorElement& x);
TwoLeg delta_case2(const TensorElement& x);
Scalar counit_case2(const TensorElement& x);
/// Δ⊗id and id⊗Δ.
ThreeLeg delta_case2_left(const TwoLeg& x);
ThreeLeg delta_case2_right(const TwoLeg& x);
TensorElement counit_right_case2(const TwoLeg& x);
TensorElement counit_left_case2(const TwoLeg& x);

/// ⨿ on the tensor square. A leg counts as a unit when it is a word of unit
/// letters; the product vanishes on the mixed patterns and is legwise •̄
/// otherwise.
TwoLeg amalg_product(const Ambient& plus, const TwoLeg& x, const TwoLeg& y);
/// 𝖯 = P_A ⊗ id.
TwoLeg sandwich_apply(const TwoLeg& x);
OperatedAlgebra<TwoLeg> amalg_square(const BaseAlgebra& A, const ProductKind& kind = ProductKind::rsh());

// Generic leg maps.
template <class F>
TwoLeg map_left_leg(const TwoLeg& x, F&& f) {
  TwoLeg r(x.mode());
  for (const auto& [p, c] : x)
    for (const auto& [w, d] : f(word_element(x.mode(), p[0]))) r.add_term({w, p[1]}, c * d);
  return r;
}

struct PrimitiveResult {
  std::vector<Word> basis_words;          // the finite ansatz
  std::vector<TensorElement> primitives;  // kernel basis, reduced
};

/// Primitive elements among words of length ≤ D with letters of degree ≤ D.
PrimitiveResult primitives_at_bound(const BaseAlgebra& base, int which_case, const ProductKind& kind, unsigned D);

}  // namespace rba
