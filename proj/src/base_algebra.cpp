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

#include "rba/base_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rba/format_util.hpp"

namespace rba {

Monomial Monomial::from_sequence(Mode mode, std::vector<GenId> gens) {
  if (mode == Mode::commutative) std::sort(gens.begin(), gens.end());
  return Monomial(std::move(gens));
}

Monomial mono_mul(Mode mode, const Monomial& a, const Monomial& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<GenId> out;
  out.reserve(a.degree() + b.degree());
  if (mode == Mode::commutative) {
    std::merge(a.gens().begin(), a.gens().end(), b.gens().begin(), b.gens().end(),
               std::back_inserter(out));
  } else {
    out.assign(a.gens().begin(), a.gens().end());
    out.insert(out.end(), b.gens().begin(), b.gens().end());
  }
  return Monomial(std::move(out));
}

BaseElement base_mul(const BaseElement& x, const BaseElement& y) {
  require_same_mode(x, y);
  Mode mode = x.is_zero() ? y.mode() : x.mode();
  BaseElement r(mode);
  for (const auto& [m, c] : x)
    for (const auto& [n, d] : y) r.add_term(mono_mul(mode, m, n), c * d);
  return r;
}

BaseElement base_unit(Mode mode, const Scalar& coeff) { return BaseElement::term(mode, Monomial(), coeff); }

namespace {

const char* const kReserved[] = {"P",    "Q",    "Pu",    "sh",   "qsh",   "rsh",   "lsh",  "bsh",
                                 "prec", "succ", "dot",   "star", "dagger", "delta", "eps", "omega",
                                 "bstar", "1_K"};

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_reserved_name(std::string_view name) {
  return std::any_of(std::begin(kReserved), std::end(kReserved), [&](const char* r) { return name == r; });
}

BaseAlgebra::BaseAlgebra(Mode mode, std::vector<Generator> gens) : mode_(mode), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) { return a.name < b.name; });
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!valid_identifier(gens_[i].name))
      throw Error(Errc::invalid_argument, "invalid generator name '" + gens_[i].name + "'");
    if (is_reserved_name(gens_[i].name))
      throw Error(Errc::invalid_argument, "generator name '" + gens_[i].name + "' is reserved");
    if (i > 0 && gens_[i].name == gens_[i - 1].name)
      throw Error(Errc::invalid_argument, "duplicate generator '" + gens_[i].name + "'");
  }
  // Complete one-sided pairings, then insist the pairing is an involution.
  for (auto& g : gens_) {
    if (g.involution.empty()) continue;
    if (!find(g.involution))
      throw Error(Errc::undeclared_generator, "involution image '" + g.involution + "' is not declared");
  }
  for (auto& g : gens_) {
    if (g.involution.empty() || g.involution == g.name) continue;
    auto& partner = gens_[*find(g.involution)];
    if (partner.involution.empty()) partner.involution = g.name;
  }
  pairing_.resize(gens_.size());
  for (GenId i = 0; i < gens_.size(); ++i) {
    pairing_[i] = gens_[i].involution.empty() ? i : *find(gens_[i].involution);
  }
  for (GenId i = 0; i < gens_.size(); ++i) {
    if (pairing_[pairing_[i]] != i)
      throw Error(Errc::invalid_argument, "involution pairing on '" + gens_[i].name + "' is not an involution");
  }
}

BaseAlgebra BaseAlgebra::parse_declaration(Mode mode, std::string_view decl) {
  std::vector<Generator> gens;
  std::string_view rest = decl;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    if (!item.empty()) {
      Generator g;
      auto colon = item.find(':');
      std::string_view head = trim(item.substr(0, colon));
      if (colon != std::string_view::npos) {
        std::string_view rule = trim(item.substr(colon + 1));
        if (rule == "primitive") {
          g.rule = CoproductRule::primitive;
        } else if (rule == "grouplike") {
          g.rule = CoproductRule::grouplike;
        } else if (rule == "none") {
          g.rule = CoproductRule::none;
        } else {
          throw Error(Errc::parse, "unknown coproduct rule '" + std::string(rule) + "'");
        }
      }
      auto eq = head.find('=');
      g.name = std::string(trim(head.substr(0, eq)));
      if (eq != std::string_view::npos) g.involution = std::string(trim(head.substr(eq + 1)));
      gens.push_back(std::move(g));
    } else if (comma != std::string_view::npos || !trim(rest).empty()) {
      throw Error(Errc::parse, "empty item in generator declaration");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return BaseAlgebra(mode, std::move(gens));
}

std::optional<GenId> BaseAlgebra::find(std::string_view name) const {
  auto it = std::lower_bound(gens_.begin(), gens_.end(), name,
                             [](const Generator& g, std::string_view n) { return g.name < n; });
  if (it == gens_.end() || it->name != name) return std::nullopt;
  return static_cast<GenId>(it - gens_.begin());
}

GenId BaseAlgebra::id(std::string_view name) const {
  auto g = find(name);
  if (!g) throw Error(Errc::undeclared_generator, "generator '" + std::string(name) + "' is not declared");
  return *g;
}

Monomial BaseAlgebra::monomial(const std::vector<std::string>& names) const {
  std::vector<GenId> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.push_back(id(n));
  return Monomial::from_sequence(mode_, std::move(ids));
}

Monomial BaseAlgebra::involution(const Monomial& m) const {
  std::vector<GenId> out;
  out.reserve(m.degree());
  for (GenId g : m.gens()) out.push_back(pairing_.at(g));
  if (mode_ == Mode::noncommutative) std::reverse(out.begin(), out.end());
  return Monomial::from_sequence(mode_, std::move(out));
}

BaseElement BaseAlgebra::involution(const BaseElement& x) const {
  return x.map_basis([&](const Monomial& m) { return element(involution(m)); });
}

void BaseAlgebra::require_rule(GenId g) const {
  if (gens_.at(g).rule == CoproductRule::none)
    throw Error(Errc::missing_coproduct_rule, "generator '" + gens_[g].name + "' has no coproduct rule");
}

bool BaseAlgebra::has_coproduct_rules(const Monomial& m) const {
  return std::all_of(m.gens().begin(), m.gens().end(),
                     [&](GenId g) { return gens_.at(g).rule != CoproductRule::none; });
}

BaseTwoLeg BaseAlgebra::coproduct(const Monomial& m) const {
  if (mode_ != Mode::commutative)
    throw Error(Errc::mode_mismatch, "coproducts are defined on the commutative base only");
  BaseTwoLeg acc = BaseTwoLeg::term(mode_, {Monomial(), Monomial()});
  for (GenId g : m.gens()) {
    require_rule(g);
    Monomial x = Monomial::generator(g);
    BaseTwoLeg next(mode_);
    for (const auto& [legs, c] : acc) {
      if (gens_[g].rule == CoproductRule::grouplike) {
        next.add_term({mono_mul(mode_, legs[0], x), mono_mul(mode_, legs[1], x)}, c);
      } else {
        next.add_term({mono_mul(mode_, legs[0], x), legs[1]}, c);
        next.add_term({legs[0], mono_mul(mode_, legs[1], x)}, c);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

BaseTwoLeg BaseAlgebra::coproduct(const BaseElement& x) const {
  return x.map_basis([&](const Monomial& m) { return coproduct(m); });
}

Scalar BaseAlgebra::counit(const Monomial& m) const {
  for (GenId g : m.gens()) {
    require_rule(g);
    if (gens_[g].rule == CoproductRule::primitive) return 0;
  }
  return 1;
}

Scalar BaseAlgebra::counit(const BaseElement& x) const {
  Scalar r = 0;
  for (const auto& [m, c] : x) r += c * counit(m);
  return r;
}

std::string BaseAlgebra::format(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string out;
  const auto& g = m.gens();
  for (std::size_t i = 0; i < g.size();) {
    std::size_t j = i + 1;
    if (mode_ == Mode::commutative)
      while (j < g.size() && g[j] == g[i]) ++j;
    if (!out.empty()) out += '*';
    out += name(g[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string BaseAlgebra::format(const BaseElement& x) const {
  return format_linear(x, [&](const Monomial& m) { return m.is_unit() ? std::string() : format(m); });
}

Monomial BaseAlgebra::parse_monomial(std::string_view text) const {
  std::string_view s = trim(text);
  if (s == "1") return Monomial();
  std::vector<GenId> ids;
  while (true) {
    auto star = s.find('*');
    std::string_view factor = trim(s.substr(0, star));
    auto caret = factor.find('^');
    std::string_view base = trim(factor.substr(0, caret));
    unsigned long exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view e = trim(factor.substr(caret + 1));
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(Errc::parse, "malformed exponent in monomial '" + std::string(text) + "'");
      exp = std::stoul(std::string(e));
    }
    if (base == "1") {
      // unit factor contributes nothing
    } else {
      if (!valid_identifier(base)) throw Error(Errc::parse, "malformed monomial '" + std::string(text) + "'");
      GenId g = id(base);
      for (unsigned long k = 0; k < exp; ++k) ids.push_back(g);
    }
    if (star == std::string_view::npos) break;
    s.remove_prefix(star + 1);
  }
  return Monomial::from_sequence(mode_, std::move(ids));
}

}  // namespace rba
