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

#include "rba/shuffle.hpp"

#include <algorithm>

namespace rba {

ProductKind ProductKind::parse(std::string_view tag, const Scalar& theta) {
  if (tag == "sh") return sh();
  if (tag == "qsh") return qsh(theta);
  if (tag == "rsh") return rsh();
  if (tag == "lsh") return lsh();
  throw Error(Errc::invalid_argument, "unknown product '" + std::string(tag) + "', expected sh, qsh, rsh or lsh");
}

std::string ProductKind::name() const {
  switch (tag) {
    case ProductTag::sh: return "sh";
    case ProductTag::qsh: return "qsh(" + to_string(theta) + ")";
    case ProductTag::rsh: return "rsh";
    case ProductTag::lsh: return "lsh";
  }
  return "?";
}

namespace {

void enumerate_rec(unsigned m, unsigned n, unsigned i, unsigned j, std::vector<unsigned>& cur,
                   std::vector<ShuffleSpec>& out) {
  if (i == m && j == n) {
    out.push_back({m, n, cur, {}});
    return;
  }
  // Left letters have smaller labels, so placing them first keeps lex order.
  if (i < m) {
    cur.push_back(i);
    enumerate_rec(m, n, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < n) {
    cur.push_back(m + j);
    enumerate_rec(m, n, i, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ShuffleSpec> enumerate_shuffles(unsigned m, unsigned n) {
  std::vector<ShuffleSpec> out;
  std::vector<unsigned> cur;
  cur.reserve(m + n);
  enumerate_rec(m, n, 0, 0, cur, out);
  return out;
}

std::vector<unsigned> admissible_pairs(const ShuffleSpec& spec) {
  std::vector<unsigned> out;
  for (unsigned k = 0; k + 1 < spec.sigma.size(); ++k)
    if (spec.sigma[k] < spec.m && spec.sigma[k + 1] >= spec.m) out.push_back(k);
  return out;
}

bool is_valid_shuffle(const ShuffleSpec& spec) {
  if (spec.sigma.size() != spec.m + spec.n) return false;
  unsigned next_left = 0, next_right = spec.m;
  for (unsigned s : spec.sigma) {
    if (s < spec.m) {
      if (s != next_left++) return false;
    } else {
      if (s != next_right++) return false;
    }
  }
  auto adm = admissible_pairs(spec);
  return std::all_of(spec.contracted.begin(), spec.contracted.end(),
                     [&](unsigned k) { return std::find(adm.begin(), adm.end(), k) != adm.end(); });
}

TensorElement apply_shuffle(const ProductKind& kind, Mode mode, const ShuffleSpec& spec, const Word& u, const Word& v) {
  Scalar coeff = 1;
  std::vector<Monomial> letters;
  letters.reserve(spec.m + spec.n);
  auto letter = [&](unsigned s) -> const Monomial& { return s < spec.m ? u[s] : v[s - spec.m]; };
  std::size_t t = 0;
  for (unsigned k = 0; k < spec.sigma.size(); ++k) {
    if (t < spec.contracted.size() && spec.contracted[t] == k) {
      ++t;
      Monomial ab = mono_mul(mode, letter(spec.sigma[k]), letter(spec.sigma[k + 1]));
      switch (kind.tag) {
        case ProductTag::sh: return TensorElement(mode);
        case ProductTag::qsh:
          coeff *= kind.theta;
          letters.push_back(std::move(ab));
          break;
        case ProductTag::rsh:
          coeff = -coeff;
          letters.emplace_back();
          letters.push_back(std::move(ab));
          break;
        case ProductTag::lsh:
          coeff = -coeff;
          letters.push_back(std::move(ab));
          letters.emplace_back();
          break;
      }
      ++k;
    } else {
      letters.push_back(letter(spec.sigma[k]));
    }
  }
  return word_element(mode, Word(std::move(letters)), coeff);
}

TensorElement product_combinatorial(const ProductKind& kind, const TensorElement& x, const TensorElement& y) {
  require_same_mode(x, y);
  Mode mode = x.is_zero() ? y.mode() : x.mode();
  TensorElement r(mode);
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) {
      auto m = static_cast<unsigned>(u.length()), n = static_cast<unsigned>(v.length());
      for (auto spec : enumerate_shuffles(m, n)) {
        auto adm = kind.tag == ProductTag::sh ? std::vector<unsigned>{} : admissible_pairs(spec);
        // Admissible pairs never overlap, so every subset is a valid T.
        for (unsigned long mask = 0; mask < (1ul << adm.size()); ++mask) {
          spec.contracted.clear();
          for (std::size_t b = 0; b < adm.size(); ++b)
            if (mask >> b & 1) spec.contracted.push_back(adm[b]);
          r.add_scaled(apply_shuffle(kind, mode, spec, u, v), c * d);
        }
      }
    }
  return r;
}

const TensorElement& RecursiveProduct::cached(const Word& u, const Word& v) const {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(PairLess::Probe{&u, &v});
    if (it != memo_.end()) return it->second;
  }
  TensorElement r(mode_);
  if (u.empty()) {
    r.add_term(v, 1);
  } else if (v.empty()) {
    r.add_term(u, 1);
  } else {
    const Monomial& a = u.front();
    const Monomial& b = v.front();
    Word ut = u.tail(), vt = v.tail();
    for (const auto& [w, c] : cached(ut, v)) r.add_term(w.prepend(a), c);
    for (const auto& [w, c] : cached(u, vt)) r.add_term(w.prepend(b), c);
    if (kind_.tag != ProductTag::sh && !(kind_.tag == ProductTag::qsh && kind_.theta == 0)) {
      Monomial ab = mono_mul(mode_, a, b);
      for (const auto& [w, c] : cached(ut, vt)) {
        switch (kind_.tag) {
          case ProductTag::qsh: r.add_term(w.prepend(ab), c * kind_.theta); break;
          case ProductTag::rsh: r.add_term(w.prepend(ab).prepend(Monomial()), -c); break;
          case ProductTag::lsh: r.add_term(w.prepend(Monomial()).prepend(ab), -c); break;
          case ProductTag::sh: break;
        }
      }
    }
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace({u, v}, std::move(r)).first->second;
}

TensorElement RecursiveProduct::words(const Word& u, const Word& v) const { return cached(u, v); }

TensorElement RecursiveProduct::operator()(const TensorElement& x, const TensorElement& y) const {
  if (!x.is_zero() && x.mode() != mode_) throw Error(Errc::mode_mismatch, "left operand has the wrong base mode");
  if (!y.is_zero() && y.mode() != mode_) throw Error(Errc::mode_mismatch, "right operand has the wrong base mode");
  TensorElement r(mode_);
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) r.add_scaled(cached(u, v), c * d);
  return r;
}

TensorElement RecursiveProduct::plus(const TensorElement& x, const TensorElement& y) const {
  require_plus(x, "extended product");
  require_plus(y, "extended product");
  if (!x.is_zero() && x.mode() != mode_) throw Error(Errc::mode_mismatch, "left operand has the wrong base mode");
  if (!y.is_zero() && y.mode() != mode_) throw Error(Errc::mode_mismatch, "right operand has the wrong base mode");
  TensorElement r(mode_);
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) {
      Monomial ab = mono_mul(mode_, u.front(), v.front());
      for (const auto& [w, e] : cached(u.tail(), v.tail())) r.add_term(w.prepend(ab), c * d * e);
    }
  return r;
}

TensorElement product_recursive(const ProductKind& kind, const TensorElement& x, const TensorElement& y) {
  require_same_mode(x, y);
  RecursiveProduct engine(kind, x.is_zero() ? y.mode() : x.mode());
  return engine(x, y);
}

TensorElement product_plus(const ProductKind& kind, const TensorElement& x, const TensorElement& y) {
  require_same_mode(x, y);
  RecursiveProduct engine(kind, x.is_zero() ? y.mode() : x.mode());
  return engine.plus(x, y);
}

std::size_t expected_term_count(const ProductKind& kind, unsigned m, unsigned n) {
  auto fact = [](unsigned k) {
    std::size_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
  };
  bool contracts = kind.tag != ProductTag::sh && !(kind.tag == ProductTag::qsh && kind.theta == 0);
  std::size_t total = 0;
  for (unsigned j = 0; j <= std::min(m, n); ++j) {
    if (j > 0 && !contracts) break;
    total += fact(m + n - j) / (fact(j) * fact(m - j) * fact(n - j));
  }
  return total;
}

}  // namespace rba
