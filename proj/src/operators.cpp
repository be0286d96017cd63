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

#include "rba/operators.hpp"

#include "rba/io.hpp"

namespace rba {

TensorElement shift_right(const TensorElement& x) { return shift_letter(Monomial(), x); }

TensorElement shift_left(const TensorElement& x) {
  TensorElement r(x.mode());
  for (const auto& [w, c] : x) r.add_term(w.append(Monomial()), c);
  return r;
}

TensorElement shift_letter(const Monomial& u, const TensorElement& x) {
  TensorElement r(x.mode());
  for (const auto& [w, c] : x) r.add_term(w.prepend(u), c);
  return r;
}

Operator op_P() { return {OperatorKind::right_shift, "P_A", shift_right}; }
Operator op_Q() { return {OperatorKind::left_shift, "Q_A", shift_left}; }

Operator op_letter(const Monomial& u, std::string name) {
  return {OperatorKind::letter_shift, std::move(name), [u](const TensorElement& x) { return shift_letter(u, x); }};
}

Operator op_identity() {
  return {OperatorKind::identity, "id", [](const TensorElement& x) { return x; }};
}

Operator op_compose(const Operator& outer, const Operator& inner) {
  return {OperatorKind::composed, outer.name() + "∘" + inner.name(),
          [outer, inner](const TensorElement& x) { return outer(inner(x)); }};
}

Ambient Ambient::tensor(const ProductKind& kind, Mode mode) {
  return Ambient(std::make_shared<RecursiveProduct>(kind, mode), false);
}

Ambient Ambient::plus(const ProductKind& kind, Mode mode) {
  return Ambient(std::make_shared<RecursiveProduct>(kind, mode), true);
}

std::string Ambient::name() const { return kind().name() + (plus_ ? "+" : ""); }

TensorElement Ambient::unit() const {
  return plus_ ? letter_element(mode(), Monomial()) : scalar_element(mode(), 1);
}

TensorAlgebra operated(const Ambient& ambient, const Operator& op, std::function<std::string(const TensorElement&)> show) {
  return {ambient.name(), op.name(), [ambient](const TensorElement& x, const TensorElement& y) { return ambient.mul(x, y); },
          [op](const TensorElement& x) { return op(x); }, ambient.unit(), std::move(show)};
}

Operator conjugate_rb(const Operator& R, const Scalar& theta) {
  return {OperatorKind::conjugate, R.name() + "~rb",
          [R, theta](const TensorElement& x) { return Scalar(-theta) * x - R(x); }};
}

Operator conjugate_nij(const Operator& N) {
  return {OperatorKind::conjugate, N.name() + "~nij", [N](const TensorElement& x) { return x - N(x); }};
}

Operator conjugate_td(const Operator& P, const Ambient& ambient) {
  TensorElement P1 = P(ambient.unit());
  return {OperatorKind::conjugate, P.name() + "~td",
          [P, ambient, P1](const TensorElement& x) { return ambient.mul(P1, x) - P(x); }};
}

namespace {

Series series_mul(const Ambient& A, const Series& s, const Series& t) {
  Series r(s.size(), TensorElement(A.mode()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < s.size(); ++j) {
      if (t[j].is_zero()) continue;
      r[i + j] += A.mul(s[i], t[j]);
    }
  }
  return r;
}

void enumerate_partitions(unsigned m, unsigned max_part, std::vector<unsigned>& counts,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (m == 0) {
    visit(counts);
    return;
  }
  for (unsigned k = std::min(m, max_part); k >= 1; --k) {
    ++counts[k];
    enumerate_partitions(m - k, k, counts, visit);
    --counts[k];
  }
}

}  // namespace

SpitzerSides spitzer_sides(const Scalar& theta, const TensorElement& a, unsigned order) {
  require_plus(a, "spitzer");
  if (!a.is_zero() && a.mode() != Mode::commutative)
    throw Error(Errc::mode_mismatch, "Spitzer's identity is checked in the commutative setting only");
  Ambient A = Ambient::plus(ProductKind::qsh(theta), Mode::commutative);
  const std::size_t N = order;
  const TensorElement zero(Mode::commutative);

  std::vector<TensorElement> pw(N + 1, zero);  // pw[n] = a^n
  if (N >= 1) pw[1] = a;
  for (std::size_t n = 2; n <= N; ++n) pw[n] = A.mul(pw[n - 1], a);

  std::vector<TensorElement> r(N + 1, zero);  // r[n] = P((-θ)^{n-1} a^n)
  for (std::size_t n = 1; n <= N; ++n) r[n] = power(Scalar(-theta), static_cast<unsigned>(n - 1)) * shift_right(pw[n]);

  Series s(N + 1, zero);
  for (std::size_t n = 1; n <= N; ++n) s[n] = Scalar(mpz_class(1), mpz_class(static_cast<unsigned long>(n))) * r[n];

  SpitzerSides out;
  Series one(N + 1, zero);
  one[0] = A.unit();
  out.lhs = one;
  Series p = one;
  for (unsigned k = 1; k <= N; ++k) {
    p = series_mul(A, p, s);
    for (std::size_t i = 0; i <= N; ++i) out.lhs[i].add_scaled(p[i], inverse_factorial(k));
  }

  out.rhs = one;
  TensorElement am = a;
  for (std::size_t m = 1; m <= N; ++m) {
    am = m == 1 ? shift_right(a) : shift_right(A.mul(am, a));
    out.rhs[m] = am;
  }

  out.partition_oracle = one;
  for (unsigned m = 1; m <= N; ++m) {
    TensorElement acc = zero;
    std::vector<unsigned> counts(m + 1, 0);
    enumerate_partitions(m, m, counts, [&](const std::vector<unsigned>& lam) {
      TensorElement term = A.unit();
      Scalar denom = 1;
      for (unsigned k = 1; k <= m; ++k) {
        for (unsigned j = 0; j < lam[k]; ++j) term = A.mul(term, r[k]);
        denom *= power(Scalar(k), lam[k]) / inverse_factorial(lam[k]);
      }
      acc.add_scaled(term, 1 / denom);
    });
    out.partition_oracle[m] = acc;
  }
  return out;
}

CheckReport spitzer_verify(const BaseAlgebra& base, const Scalar& theta, const TensorElement& a, unsigned order) {
  auto sides = spitzer_sides(theta, a, order);
  CheckReport rep{"spitzer", "P_A", ProductKind::qsh(theta).name() + "+", "order " + std::to_string(order)};
  for (std::size_t m = 0; m <= order; ++m) {
    ++rep.samples;
    if (!(sides.lhs[m] == sides.rhs[m])) {
      rep.pass = false;
      rep.counterexample = Counterexample{{format_tensor(base, a), "t^" + std::to_string(m)},
                                          format_tensor(base, sides.lhs[m]),
                                          format_tensor(base, sides.rhs[m])};
      break;
    }
  }
  return rep;
}

Operator lift_morphism(const BaseAlgebra& base, const Ambient& target, const std::vector<TensorElement>& images,
                       std::string name) {
  if (images.size() != base.size())
    throw Error(Errc::arity, "lift needs one image per generator");
  if (!target.is_plus()) throw Error(Errc::carrier, "lift targets are extended-product algebras on T⁺(A)");
  for (const auto& im : images) {
    require_plus(im, "lift image");
    if (!im.is_zero() && im.mode() != target.mode())
      throw Error(Errc::mode_mismatch, "lift image lives in a different base mode");
  }
  if (base.mode() == Mode::commutative) {
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (!(target.mul(images[i], images[j]) == target.mul(images[j], images[i])))
          throw Error(Errc::not_multiplicative, "images of '" + base.name(static_cast<GenId>(i)) + "' and '" +
                                                    base.name(static_cast<GenId>(j)) +
                                                    "' do not commute, so no algebra morphism extends the map");
  }
  OperatedAlgebra<TensorElement> T{target.name(), "P_A",
                                   [target](const TensorElement& x, const TensorElement& y) { return target.mul(x, y); },
                                   shift_right, target.unit(), {}};
  auto lift = std::make_shared<MorphismLift<TensorElement>>(T, [images](GenId g) { return images.at(g); });
  return {OperatorKind::lift, std::move(name), [lift](const TensorElement& x) { return (*lift)(x); }};
}

}  // namespace rba
