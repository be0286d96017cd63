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

#include <memory>
#include <string>
#include <vector>

#include "rba/operators.hpp"

namespace rba {

enum class Carrier { plus_lsh, qone };
enum class TriOp { prec, succ, dot, star };

const char* carrier_name(Carrier c);
const char* triop_name(TriOp op);

/// (≺, ≻, •) on T⁺(A) from the left-shift shuffle, or (≺₁, ≻₁, •₁) on
/// words of non-unit letters from the weight-1 quasi-shuffle.
class Tridendriform {
 public:
  static Tridendriform plus_lsh(Mode mode);
  static Tridendriform qone(Mode mode);

  Carrier carrier() const { return carrier_; }
  Mode mode() const { return ambient_.mode(); }
  /// The product used underneath: •̄^ℓ on T⁺ or •^1 on T(A).
  const Ambient& ambient() const { return ambient_; }

  /// Flips the sign of the plus_lsh dot product; used as a negative control.
  Tridendriform with_flipped_dot() const;

  TensorElement apply(TriOp op, const TensorElement& x, const TensorElement& y) const;
  TensorElement prec(const TensorElement& x, const TensorElement& y) const { return apply(TriOp::prec, x, y); }
  TensorElement succ(const TensorElement& x, const TensorElement& y) const { return apply(TriOp::succ, x, y); }
  TensorElement dot(const TensorElement& x, const TensorElement& y) const { return apply(TriOp::dot, x, y); }
  TensorElement star(const TensorElement& x, const TensorElement& y) const { return apply(TriOp::star, x, y); }

  /// Throws carrier if x is not an element of the carrier.
  void require_member(const TensorElement& x) const;
  bool is_member(const TensorElement& x) const;

 private:
  Tridendriform(Carrier c, Ambient a) : carrier_(c), ambient_(std::move(a)) {}
  TensorElement word_op(TriOp op, const Word& u, const Word& v) const;

  Carrier carrier_;
  Ambient ambient_;
  int dot_sign_ = -1;
};

/// The seven relations plus, in commutative mode, x≺y = y≻x and x•y = y•x.
std::vector<Law<TensorElement>> tridend_laws(const Tridendriform& T, bool commutative);
std::vector<CheckReport> check_tridend_axioms(const Tridendriform& T, const std::vector<std::vector<TensorElement>>& triples,
                                              const std::vector<std::vector<TensorElement>>& pairs, std::string policy,
                                              const std::function<std::string(const TensorElement&)>& show);

/// Ω: letter a of degree l ↦ (-1)^{l+1} (a|1^{l-1}), blockwise.
TensorElement omega(const TensorElement& x);

/// a1 ≺₁ (a2 ≺₁ (...)) with each letter v1 •₁ v2 •₁ ...
struct DecompositionTree {
  enum class Kind { leaf, prec, dot } kind = Kind::leaf;
  GenId generator = 0;
  std::shared_ptr<const DecompositionTree> left, right;
};

std::shared_ptr<const DecompositionTree> omega_decompose(const Word& w);
TensorElement evaluate_tree(const Tridendriform& qone, const DecompositionTree& t);
/// DSL text, e.g. "prec(dot([a]; [b]); [c])".
std::string serialize_tree(const BaseAlgebra& base, const DecompositionTree& t);

}  // namespace rba
