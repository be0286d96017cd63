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

#include "rba/io.hpp"

#include <cctype>

#include "rba/format_util.hpp"

namespace rba {

using nlohmann::json;

std::string format_word(const BaseAlgebra& base, const Word& w) {
  if (w.empty()) return "1_K";
  std::string out = "(";
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += '|';
    out += base.format(w[i]);
  }
  return out + ")";
}

std::string format_tensor(const BaseAlgebra& base, const TensorElement& x) {
  return format_linear(x, [&](const Word& w) { return format_word(base, w); });
}

std::string format_two_leg(const BaseAlgebra& base, const TwoLeg& x) {
  return format_linear(x, [&](const WordPair& p) { return format_word(base, p[0]) + "⊗" + format_word(base, p[1]); });
}

std::string format_three_leg(const BaseAlgebra& base, const ThreeLeg& x) {
  return format_linear(x, [&](const WordTriple& p) {
    return format_word(base, p[0]) + "⊗" + format_word(base, p[1]) + "⊗" + format_word(base, p[2]);
  });
}

std::string format_base_two_leg(const BaseAlgebra& base, const BaseTwoLeg& x) {
  return format_linear(x, [&](const MonomialPair& p) { return base.format(p[0]) + "⊗" + base.format(p[1]); });
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(const BaseAlgebra& base, std::string_view text) {
  std::string_view s = trim(text);
  if (s == "1_K") return Word();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(Errc::parse, "malformed word '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<Monomial> letters;
  while (true) {
    auto bar = s.find('|');
    letters.push_back(base.parse_monomial(s.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    s.remove_prefix(bar + 1);
  }
  return Word(std::move(letters));
}

TensorElement parse_tensor(const BaseAlgebra& base, std::string_view text) {
  TensorElement r(base.mode());
  std::string_view s = trim(text);
  if (s.empty()) throw Error(Errc::parse, "empty tensor expression");
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    Scalar sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(Errc::parse, "expected '+' or '-' at offset " + std::to_string(i));
    }
    first = false;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    // Term extends to the next top-level sign.
    std::size_t j = i;
    int depth = 0;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-') && j > i) break;
    }
    std::string_view term = trim(s.substr(i, j - i));
    if (term.empty()) throw Error(Errc::parse, "missing term at offset " + std::to_string(i));
    Scalar coeff = 1;
    std::string_view body = term;
    auto star = term.find('*');
    if (term.front() != '(' && term != "1_K") {
      if (star == std::string_view::npos) {
        r.add_term(Word(), sign * parse_scalar(term));
        i = j;
        continue;
      }
      coeff = parse_scalar(trim(term.substr(0, star)));
      body = trim(term.substr(star + 1));
    }
    r.add_term(parse_word(base, body), sign * coeff);
    i = j;
  }
  return r;
}

json scalar_json(const Scalar& s) { return json{{"scalar", to_string(s)}}; }

json to_json(const BaseAlgebra& base, const BaseElement& x) {
  json terms = json::array();
  for (const auto& [m, c] : x) terms.push_back({{"coeff", to_string(c)}, {"monomial", base.format(m)}});
  return json{{"terms", terms}};
}

namespace {

json word_json(const BaseAlgebra& base, const Word& w) {
  json letters = json::array();
  for (const auto& m : w.letters()) letters.push_back(base.format(m));
  return letters;
}

Word word_from_json(const BaseAlgebra& base, const json& j) {
  if (!j.is_array()) throw Error(Errc::parse, "word must be a JSON array of monomials");
  std::vector<Monomial> letters;
  for (const auto& l : j) letters.push_back(base.parse_monomial(l.get<std::string>()));
  return Word(std::move(letters));
}

const json& terms_of(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error(Errc::parse, "expected an object with a \"terms\" array");
  return j["terms"];
}

}  // namespace

json to_json(const BaseAlgebra& base, const TensorElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x) terms.push_back({{"coeff", to_string(c)}, {"word", word_json(base, w)}});
  return json{{"terms", terms}};
}

json to_json(const BaseAlgebra& base, const TwoLeg& x) {
  json terms = json::array();
  for (const auto& [p, c] : x)
    terms.push_back({{"coeff", to_string(c)}, {"left", word_json(base, p[0])}, {"right", word_json(base, p[1])}});
  return json{{"terms", terms}};
}

BaseElement base_from_json(const BaseAlgebra& base, const json& j) {
  BaseElement r(base.mode());
  for (const auto& t : terms_of(j))
    r.add_term(base.parse_monomial(t.at("monomial").get<std::string>()), parse_scalar(t.at("coeff").get<std::string>()));
  return r;
}

TensorElement tensor_from_json(const BaseAlgebra& base, const json& j) {
  TensorElement r(base.mode());
  for (const auto& t : terms_of(j))
    r.add_term(word_from_json(base, t.at("word")), parse_scalar(t.at("coeff").get<std::string>()));
  return r;
}

TwoLeg two_leg_from_json(const BaseAlgebra& base, const json& j) {
  TwoLeg r(base.mode());
  for (const auto& t : terms_of(j))
    r.add_term({word_from_json(base, t.at("left")), word_from_json(base, t.at("right"))},
               parse_scalar(t.at("coeff").get<std::string>()));
  return r;
}

}  // namespace rba
