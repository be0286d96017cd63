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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rba/shuffle.hpp"

namespace rba {

enum class OperatorKind { right_shift, left_shift, letter_shift, conjugate, lift, identity, composed, sandwich, custom };

/// A named linear endomorphism of tensor elements.
class Operator {
 public:
  using Fn = std::function<TensorElement(const TensorElement&)>;

  Operator(OperatorKind kind, std::string name, Fn fn) : kind_(kind), name_(std::move(name)), fn_(std::move(fn)) {}

  OperatorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  TensorElement operator()(const TensorElement& x) const { return fn_(x); }

 private:
  OperatorKind kind_;
  std::string name_;
  Fn fn_;
};

/// P_A: prepend the unit monomial. P_A(1_K) = (1).
TensorElement shift_right(const TensorElement& x);
/// Q_A: append the unit monomial. Q_A(1_K) = (1).
TensorElement shift_left(const TensorElement& x);
/// P^(u): prepend the monomial u.
TensorElement shift_letter(const Monomial& u, const TensorElement& x);

Operator op_P();
Operator op_Q();
Operator op_letter(const Monomial& u, std::string name);
Operator op_identity();
Operator op_compose(const Operator& outer, const Operator& inner);

/// (T(A), •^q) or (T⁺(A), •̄^q) over a base mode, with a shared engine.
class Ambient {
 public:
  static Ambient tensor(const ProductKind& kind, Mode mode);
  static Ambient plus(const ProductKind& kind, Mode mode);

  const ProductKind& kind() const { return engine_->kind(); }
  Mode mode() const { return engine_->mode(); }
  bool is_plus() const { return plus_; }
  /// "qsh(1/3)", "rsh+", ...
  std::string name() const;

  TensorElement mul(const TensorElement& x, const TensorElement& y) const {
    return plus_ ? engine_->plus(x, y) : (*engine_)(x, y);
  }
  /// 1_K for T(A), (1) for T⁺(A).
  TensorElement unit() const;
  const RecursiveProduct& engine() const { return *engine_; }

 private:
  Ambient(std::shared_ptr<RecursiveProduct> engine, bool plus) : engine_(std::move(engine)), plus_(plus) {}
  std::shared_ptr<RecursiveProduct> engine_;
  bool plus_;
};

/// An algebra with a distinguished linear operator, over any element type.
template <class E>
struct OperatedAlgebra {
  std::string name;
  std::string op_name;
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> op;
  E unit;
  std::function<std::string(const E&)> show;
};

using TensorAlgebra = OperatedAlgebra<TensorElement>;

TensorAlgebra operated(const Ambient& ambient, const Operator& op, std::function<std::string(const TensorElement&)> show);

/// An equation between two sides evaluated on a tuple of samples.
template <class I, class O = I>
struct Law {
  std::string name;
  std::size_t arity;
  std::function<std::pair<O, O>(const std::vector<I>&)> sides;
};

struct Counterexample {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string identity;
  std::string op;
  std::string ambient;
  std::string policy;
  bool pass = true;
  std::size_t samples = 0;
  std::optional<Counterexample> counterexample;
  /// Negative controls expect pass == false.
  bool expect_pass = true;
  bool ok() const { return pass == expect_pass; }
};

template <class I, class O, class ShowI, class ShowO>
CheckReport check_law(const Law<I, O>& law, std::string op, std::string ambient,
                      const std::vector<std::vector<I>>& cases, std::string policy, ShowI&& show_in,
                      ShowO&& show_out) {
  CheckReport rep{law.name, std::move(op), std::move(ambient), std::move(policy)};
  for (const auto& c : cases) {
    if (c.size() != law.arity) throw Error(Errc::arity, "law '" + law.name + "' expects another sample arity");
    ++rep.samples;
    auto [lhs, rhs] = law.sides(c);
    if (!(lhs == rhs)) {
      rep.pass = false;
      Counterexample ce;
      for (const auto& x : c) ce.inputs.push_back(show_in(x));
      ce.lhs = show_out(lhs);
      ce.rhs = show_out(rhs);
      rep.counterexample = std::move(ce);
      break;
    }
  }
  return rep;
}

template <class E>
CheckReport check_law(const Law<E>& law, const OperatedAlgebra<E>& alg, const std::vector<std::vector<E>>& cases,
                      std::string policy) {
  return check_law(law, alg.op_name, alg.name, cases, std::move(policy), alg.show, alg.show);
}

/// Sample tuples: all pairs/triples from a set, and consecutive chunks of a
/// pool for randomized cases.
template <class E>
std::vector<std::vector<E>> all_tuples(const std::vector<E>& set, std::size_t arity) {
  std::vector<std::vector<E>> out{{}};
  for (std::size_t k = 0; k < arity; ++k) {
    std::vector<std::vector<E>> next;
    next.reserve(out.size() * set.size());
    for (const auto& t : out)
      for (const auto& x : set) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

template <class E>
std::vector<std::vector<E>> chunk_tuples(const std::vector<E>& pool, std::size_t arity) {
  std::vector<std::vector<E>> out;
  for (std::size_t i = 0; i + arity <= pool.size(); i += arity) out.emplace_back(pool.begin() + i, pool.begin() + i + arity);
  return out;
}

// Operator identities. `weight` is an element of the algebra; a scalar
// weight θ is passed as θ·unit.
template <class E>
Law<E> law_rota_baxter(const OperatedAlgebra<E>& A, E weight, std::string name = "rota_baxter") {
  return {std::move(name), 2, [A, weight](const std::vector<E>& s) {
            const E &x = s[0], &y = s[1];
            E Rx = A.op(x), Ry = A.op(y);
            E rhs = A.op(A.mul(Rx, y) + A.mul(x, Ry)) + A.op(A.mul(A.mul(x, weight), y));
            return std::pair{A.mul(Rx, Ry), rhs};
          }};
}

/// Scalar weight θ: the last term is θ·R(xy). Agrees with the element form
/// on unital algebras and is the right statement when there is no unit.
template <class E>
Law<E> law_rota_baxter_scalar(const OperatedAlgebra<E>& A, Scalar theta, std::string name = "rota_baxter") {
  return {std::move(name), 2, [A, theta](const std::vector<E>& s) {
            const E &x = s[0], &y = s[1];
            E Rx = A.op(x), Ry = A.op(y);
            E rhs = A.op(A.mul(Rx, y) + A.mul(x, Ry) + theta * A.mul(x, y));
            return std::pair{A.mul(Rx, Ry), rhs};
          }};
}

template <class E>
Law<E> law_nijenhuis(const OperatedAlgebra<E>& A) {
  return {"nijenhuis", 2, [A](const std::vector<E>& s) {
            const E &x = s[0], &y = s[1];
            E Nx = A.op(x), Ny = A.op(y);
            E rhs = A.op(A.mul(Nx, y) + A.mul(x, Ny)) - A.op(A.op(A.mul(x, y)));
            return std::pair{A.mul(Nx, Ny), rhs};
          }};
}

template <class E>
Law<E> law_td(const OperatedAlgebra<E>& A) {
  return {"td", 2, [A](const std::vector<E>& s) {
            const E &x = s[0], &y = s[1];
            E Px = A.op(x), Py = A.op(y), P1 = A.op(A.unit);
            E rhs = A.op(A.mul(Px, y) + A.mul(x, Py)) - A.op(A.mul(A.mul(x, P1), y));
            return std::pair{A.mul(Px, Py), rhs};
          }};
}

/// Average operator, both halves: P(x)P(y) = P(xP(y)) and P(x)P(y) = P(P(x)y).
template <class E>
Law<E> law_average_right(const OperatedAlgebra<E>& A) {
  return {"average.right", 2, [A](const std::vector<E>& s) {
            return std::pair{A.mul(A.op(s[0]), A.op(s[1])), A.op(A.mul(s[0], A.op(s[1])))};
          }};
}

template <class E>
Law<E> law_average_left(const OperatedAlgebra<E>& A) {
  return {"average.left", 2, [A](const std::vector<E>& s) {
            return std::pair{A.mul(A.op(s[0]), A.op(s[1])), A.op(A.mul(A.op(s[0]), s[1]))};
          }};
}

template <class E>
Law<E> law_associative(const std::string& name, std::function<E(const E&, const E&)> mul) {
  return {name, 3, [mul](const std::vector<E>& s) {
            return std::pair{mul(mul(s[0], s[1]), s[2]), mul(s[0], mul(s[1], s[2]))};
          }};
}

template <class E>
Law<E> law_commutative(const std::string& name, std::function<E(const E&, const E&)> mul) {
  return {name, 2, [mul](const std::vector<E>& s) { return std::pair{mul(s[0], s[1]), mul(s[1], s[0])}; }};
}

/// op(x*y) = op(x) op(y) for a product * and ambient product of A.
template <class E>
Law<E> law_operator_homomorphism(const std::string& name, const OperatedAlgebra<E>& A,
                                 std::function<E(const E&, const E&)> star, std::function<E(const E&)> op,
                                 Scalar sign = 1) {
  return {name, 2, [A, star, op, sign](const std::vector<E>& s) {
            return std::pair{op(star(s[0], s[1])), sign * A.mul(op(s[0]), op(s[1]))};
          }};
}

/// R~ = -θ id - R
Operator conjugate_rb(const Operator& R, const Scalar& theta);
/// N~ = id - N
Operator conjugate_nij(const Operator& N);
/// P~ = P(1)·X - P(X), left multiplication in the ambient.
Operator conjugate_td(const Operator& P, const Ambient& ambient);

enum class DoubleFlavor { star_R, star_N, star_P };

/// star_R: R(a)b + aR(b) + θab;  star_N: N(a)b + aN(b) - N(ab);
/// star_P: P(a)b + aP(b) - aP(1)b.
template <class E>
E double_product(DoubleFlavor flavor, const OperatedAlgebra<E>& A, const E& a, const E& b, const Scalar& theta = 0) {
  E base = A.mul(A.op(a), b) + A.mul(a, A.op(b));
  switch (flavor) {
    case DoubleFlavor::star_R: return base + theta * A.mul(a, b);
    case DoubleFlavor::star_N: return base - A.op(A.mul(a, b));
    case DoubleFlavor::star_P: return base - A.mul(A.mul(a, A.op(A.unit)), b);
  }
  return base;
}

/// The algebra (A, ∗, op) built from a double product.
template <class E>
OperatedAlgebra<E> double_algebra(DoubleFlavor flavor, const OperatedAlgebra<E>& A, const Scalar& theta = 0) {
  const char* tag = flavor == DoubleFlavor::star_R ? "*R" : flavor == DoubleFlavor::star_N ? "*N" : "*P";
  OperatedAlgebra<E> D = A;
  D.name = A.name + "[" + tag + "]";
  auto Acopy = std::make_shared<OperatedAlgebra<E>>(A);
  D.mul = [Acopy, flavor, theta](const E& a, const E& b) { return double_product(flavor, *Acopy, a, b, theta); };
  return D;
}

/// Truncated power series over T⁺(A): coefficient k of t^k.
using Series = std::vector<TensorElement>;

struct SpitzerSides {
  Series lhs;               // exp(Σ r_n t^n / n)
  Series rhs;               // 1 + Σ a_m t^m
  Series partition_oracle;  // Σ over partitions of m of Π r_k^{λ_k} / (k^{λ_k} λ_k!)
};

/// Both sides of Spitzer's identity in (T⁺(A), •̄^θ, P_A) for a commutative base.
SpitzerSides spitzer_sides(const Scalar& theta, const TensorElement& a, unsigned order);
CheckReport spitzer_verify(const BaseAlgebra& base, const Scalar& theta, const TensorElement& a, unsigned order);

/// Multiplicative extension into a target algebra of images on generators.
template <class E>
class MorphismLift {
 public:
  using GeneratorMap = std::function<E(GenId)>;

  MorphismLift(OperatedAlgebra<E> target, GeneratorMap phi) : T_(std::move(target)), phi_(std::move(phi)) {}

  E on_monomial(const Monomial& m) const {
    E r = T_.unit;
    for (GenId g : m.gens()) r = T_.mul(r, phi_(g));
    return r;
  }

  /// φ~(a1⊗...⊗an) = φ(a1) · P(φ~(a2⊗...⊗an)), φ~((a)) = φ(a).
  E on_word(const Word& w) const {
    if (w.empty()) throw Error(Errc::carrier, "the lift is defined on T⁺(A) only");
    E acc = on_monomial(w[w.length() - 1]);
    for (std::size_t i = w.length() - 1; i-- > 0;) acc = T_.mul(on_monomial(w[i]), T_.op(acc));
    return acc;
  }

  E operator()(const TensorElement& x) const {
    E r = T_.unit;
    r = r - r;
    for (const auto& [w, c] : x) r = r + c * on_word(w);
    return r;
  }

  const OperatedAlgebra<E>& target() const { return T_; }

 private:
  OperatedAlgebra<E> T_;
  GeneratorMap phi_;
};

/// φ~ as an Operator into (T⁺(A), •̄^q, P_A). In commutative mode the images
/// must commute, otherwise no algebra morphism extends φ.
Operator lift_morphism(const BaseAlgebra& base, const Ambient& target, const std::vector<TensorElement>& images,
                       std::string name = "lift");

}  // namespace rba
