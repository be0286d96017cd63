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

#include "rba/dendriform.hpp"

#include <algorithm>

namespace rba {

const char* carrier_name(Carrier c) { return c == Carrier::plus_lsh ? "plus_lsh" : "qone"; }

const char* triop_name(TriOp op) {
  switch (op) {
    case TriOp::prec: return "prec";
    case TriOp::succ: return "succ";
    case TriOp::dot: return "dot";
    case TriOp::star: return "star";
  }
  return "?";
}

Tridendriform Tridendriform::plus_lsh(Mode mode) { return {Carrier::plus_lsh, Ambient::plus(ProductKind::lsh(), mode)}; }

Tridendriform Tridendriform::qone(Mode mode) { return {Carrier::qone, Ambient::tensor(ProductKind::qsh(1), mode)}; }

Tridendriform Tridendriform::with_flipped_dot() const {
  Tridendriform t = *this;
  t.dot_sign_ = -dot_sign_;
  return t;
}

bool Tridendriform::is_member(const TensorElement& x) const {
  if (!x.is_zero() && x.mode() != mode()) return false;
  for (const auto& [w, c] : x) {
    if (w.empty()) return false;
    if (carrier_ == Carrier::qone &&
        std::any_of(w.letters().begin(), w.letters().end(), [](const Monomial& m) { return m.is_unit(); }))
      return false;
  }
  return true;
}

void Tridendriform::require_member(const TensorElement& x) const {
  if (!x.is_zero() && x.mode() != mode()) throw Error(Errc::mode_mismatch, "operand lives in a different base mode");
  if (!is_member(x))
    throw Error(Errc::carrier, carrier_ == Carrier::qone
                                   ? "qone operands must be nonempty words of non-unit letters"
                                   : "plus_lsh operands must lie in T⁺(A)");
}

TensorElement Tridendriform::word_op(TriOp op, const Word& u, const Word& v) const {
  const Ambient& A = ambient_;
  Mode mode = A.mode();
  const RecursiveProduct& q = A.engine();
  TensorElement r(mode);
  switch (op) {
    case TriOp::prec:
      for (const auto& [w, c] : q.words(u.tail(), v)) r.add_term(w.prepend(u.front()), c);
      break;
    case TriOp::succ:
      for (const auto& [w, c] : q.words(u, v.tail())) r.add_term(w.prepend(v.front()), c);
      break;
    case TriOp::dot: {
      Monomial ab = mono_mul(mode, u.front(), v.front());
      for (const auto& [w, c] : q.words(u.tail(), v.tail())) r.add_term(w.prepend(ab), c);
      break;
    }
    case TriOp::star: break;
  }
  return r;
}

TensorElement Tridendriform::apply(TriOp op, const TensorElement& x, const TensorElement& y) const {
  require_member(x);
  require_member(y);
  if (op == TriOp::star) return apply(TriOp::prec, x, y) + apply(TriOp::succ, x, y) + apply(TriOp::dot, x, y);
  const Ambient& A = ambient_;
  if (carrier_ == Carrier::plus_lsh) {
    switch (op) {
      case TriOp::prec: return A.mul(x, shift_right(y));
      case TriOp::succ: return A.mul(shift_right(x), y);
      case TriOp::dot: return Scalar(dot_sign_) * A.mul(A.mul(x, word_element(mode(), unit_word(2))), y);
      case TriOp::star: break;
    }
  }
  TensorElement r(mode());
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) r.add_scaled(word_op(op, u, v), c * d);
  return r;
}

std::vector<Law<TensorElement>> tridend_laws(const Tridendriform& T, bool commutative) {
  using E = TensorElement;
  auto op = [T](TriOp o) { return [T, o](const E& x, const E& y) { return T.apply(o, x, y); }; };
  auto P = op(TriOp::prec), S = op(TriOp::succ), D = op(TriOp::dot), St = op(TriOp::star);
  auto law3 = [](std::string name, auto lhs, auto rhs) {
    return Law<E>{std::move(name), 3, [lhs, rhs](const std::vector<E>& s) {
                    return std::pair{lhs(s[0], s[1], s[2]), rhs(s[0], s[1], s[2])};
                  }};
  };
  std::vector<Law<E>> laws{
      law3("(x≺y)≺z = x≺(y⋆z)", [=](auto& x, auto& y, auto& z) { return P(P(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return P(x, St(y, z)); }),
      law3("(x≻y)≺z = x≻(y≺z)", [=](auto& x, auto& y, auto& z) { return P(S(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return S(x, P(y, z)); }),
      law3("(x⋆y)≻z = x≻(y≻z)", [=](auto& x, auto& y, auto& z) { return S(St(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return S(x, S(y, z)); }),
      law3("(x≻y)•z = x≻(y•z)", [=](auto& x, auto& y, auto& z) { return D(S(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return S(x, D(y, z)); }),
      law3("(x≺y)•z = x•(y≻z)", [=](auto& x, auto& y, auto& z) { return D(P(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return D(x, S(y, z)); }),
      law3("(x•y)≺z = x•(y≺z)", [=](auto& x, auto& y, auto& z) { return P(D(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return D(x, P(y, z)); }),
      law3("(x•y)•z = x•(y•z)", [=](auto& x, auto& y, auto& z) { return D(D(x, y), z); },
           [=](auto& x, auto& y, auto& z) { return D(x, D(y, z)); }),
  };
  if (commutative) {
    laws.push_back({"x≺y = y≻x", 2, [=](const std::vector<E>& s) { return std::pair{P(s[0], s[1]), S(s[1], s[0])}; }});
    laws.push_back({"x•y = y•x", 2, [=](const std::vector<E>& s) { return std::pair{D(s[0], s[1]), D(s[1], s[0])}; }});
  }
  return laws;
}

std::vector<CheckReport> check_tridend_axioms(const Tridendriform& T, const std::vector<std::vector<TensorElement>>& triples,
                                              const std::vector<std::vector<TensorElement>>& pairs, std::string policy,
                                              const std::function<std::string(const TensorElement&)>& show) {
  OperatedAlgebra<TensorElement> view{carrier_name(T.carrier()), "tridend", {}, {}, TensorElement(T.mode()), show};
  std::vector<CheckReport> out;
  for (const auto& law : tridend_laws(T, T.mode() == Mode::commutative))
    out.push_back(check_law(law, view, law.arity == 3 ? triples : pairs, policy));
  return out;
}

TensorElement omega(const TensorElement& x) {
  TensorElement r(x.mode());
  for (const auto& [w, c] : x) {
    std::vector<Monomial> letters;
    Scalar sign = 1;
    for (const auto& a : w.letters()) {
      if (a.is_unit()) throw Error(Errc::carrier, "Ω is defined on words of non-unit letters");
      letters.push_back(a);
      for (std::size_t k = 1; k < a.degree(); ++k) letters.emplace_back();
      if (a.degree() % 2 == 0) sign = -sign;
    }
    r.add_term(Word(std::move(letters)), sign * c);
  }
  return r;
}

namespace {

using TreePtr = std::shared_ptr<const DecompositionTree>;

TreePtr node(DecompositionTree::Kind k, TreePtr l, TreePtr r) {
  auto t = std::make_shared<DecompositionTree>();
  t->kind = k;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TreePtr letter_tree(const Monomial& m) {
  if (m.is_unit()) throw Error(Errc::carrier, "decomposition needs non-unit letters");
  TreePtr acc;
  for (GenId g : m.gens()) {
    auto leaf = std::make_shared<DecompositionTree>();
    leaf->generator = g;
    acc = acc ? node(DecompositionTree::Kind::dot, acc, leaf) : TreePtr(leaf);
  }
  return acc;
}

}  // namespace

std::shared_ptr<const DecompositionTree> omega_decompose(const Word& w) {
  if (w.empty()) throw Error(Errc::carrier, "decomposition needs a nonempty word");
  TreePtr acc = letter_tree(w[w.length() - 1]);
  for (std::size_t i = w.length() - 1; i-- > 0;) acc = node(DecompositionTree::Kind::prec, letter_tree(w[i]), acc);
  return acc;
}

TensorElement evaluate_tree(const Tridendriform& qone, const DecompositionTree& t) {
  switch (t.kind) {
    case DecompositionTree::Kind::leaf: return letter_element(qone.mode(), Monomial::generator(t.generator));
    case DecompositionTree::Kind::prec: return qone.prec(evaluate_tree(qone, *t.left), evaluate_tree(qone, *t.right));
    case DecompositionTree::Kind::dot: return qone.dot(evaluate_tree(qone, *t.left), evaluate_tree(qone, *t.right));
  }
  return TensorElement(qone.mode());
}

std::string serialize_tree(const BaseAlgebra& base, const DecompositionTree& t) {
  switch (t.kind) {
    case DecompositionTree::Kind::leaf: return "[" + base.name(t.generator) + "]";
    case DecompositionTree::Kind::prec:
      return "prec(" + serialize_tree(base, *t.left) + "; " + serialize_tree(base, *t.right) + ")";
    case DecompositionTree::Kind::dot:
      return "dot(" + serialize_tree(base, *t.left) + "; " + serialize_tree(base, *t.right) + ")";
  }
  return "";
}

}  // namespace rba
