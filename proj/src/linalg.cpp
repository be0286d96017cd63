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

#include "rba/linalg.hpp"

#include <utility>

namespace rba {

namespace {

using IntVector = std::map<std::size_t, mpz_class>;

/// A column image together with the combination of input columns producing it.
struct Tracked {
  IntVector image;
  IntVector combo;
};

/// Clears denominators; `l` receives the common multiple used.
IntVector to_integers(const SparseVector& v, mpz_class& l) {
  l = 1;
  for (const auto& [i, c] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  IntVector out;
  for (const auto& [i, c] : v) {
    if (c == 0) continue;
    mpz_class n = c.get_num() * (l / c.get_den());
    out.emplace(i, std::move(n));
  }
  return out;
}

void axpy(IntVector& v, const mpz_class& s, const IntVector& w, const mpz_class& t) {
  // v <- s*v - t*w
  if (s != 1)
    for (auto& [i, c] : v) c *= s;
  for (const auto& [i, c] : w) {
    auto [it, inserted] = v.try_emplace(i, 0);
    it->second -= t * c;
    if (it->second == 0) v.erase(it);
  }
}

void remove_content(Tracked& x) {
  mpz_class g = 0;
  for (const auto& [i, c] : x.image) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& [i, c] : x.combo) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g <= 1) return;
  for (auto& [i, c] : x.image) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (auto& [i, c] : x.combo) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Reduces x against an echelon basis keyed by leading index.
void reduce(Tracked& x, const std::map<std::size_t, Tracked>& basis) {
  while (!x.image.empty()) {
    auto lead = x.image.begin();
    auto it = basis.find(lead->first);
    if (it == basis.end()) return;
    const mpz_class p = it->second.image.begin()->second;
    const mpz_class a = lead->second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    mpz_class s = p / g, t = a / g;
    axpy(x.image, s, it->second.image, t);
    axpy(x.combo, s, it->second.combo, t);
    remove_content(x);
  }
}

std::vector<SparseVector> rref(std::vector<SparseVector> rows) {
  std::vector<SparseVector> out;
  while (!rows.empty()) {
    // Select the row with the smallest leading column.
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].begin()->first < rows[best].begin()->first) best = i;
    SparseVector piv = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    std::size_t col = piv.begin()->first;
    Scalar lead = piv.begin()->second;
    for (auto& [i, c] : piv) c /= lead;
    auto eliminate = [&](SparseVector& r) {
      auto it = r.find(col);
      if (it == r.end()) return;
      Scalar f = it->second;
      for (const auto& [i, c] : piv) {
        auto [jt, _] = r.try_emplace(i, 0);
        jt->second -= f * c;
        if (jt->second == 0) r.erase(jt);
      }
    };
    std::vector<SparseVector> rest;
    for (auto& r : rows) {
      eliminate(r);
      if (!r.empty()) rest.push_back(std::move(r));
    }
    rows = std::move(rest);
    for (auto& r : out) eliminate(r);
    out.push_back(std::move(piv));
  }
  return out;
}

}  // namespace

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns) {
  std::map<std::size_t, Tracked> basis;
  std::vector<SparseVector> kernel;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    mpz_class scale;
    IntVector image = to_integers(columns[j], scale);
    Tracked x{std::move(image), IntVector{{j, scale}}};
    reduce(x, basis);
    if (x.image.empty()) {
      SparseVector k;
      for (const auto& [i, c] : x.combo) k.emplace(i, Scalar(c));
      kernel.push_back(std::move(k));
    } else {
      std::size_t lead = x.image.begin()->first;
      basis.emplace(lead, std::move(x));
    }
  }
  return rref(std::move(kernel));
}

std::size_t rank_of(const std::vector<SparseVector>& vectors) {
  std::vector<SparseVector> rows;
  for (const auto& v : vectors) {
    SparseVector r;
    for (const auto& [i, c] : v)
      if (c != 0) r.emplace(i, c);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return rref(std::move(rows)).size();
}

}  // namespace rba
