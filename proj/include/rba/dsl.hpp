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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rba/base_algebra.hpp"
#include "rba/dendriform.hpp"
#include "rba/samples.hpp"
#include "rba/shuffle.hpp"
#include "rba/tensor.hpp"

namespace rba {

/// Expression tree. Positions are carried for diagnostics and ignored by ==.
struct Expr {
  enum class Kind { number, symbol, unit_k, word, call, fnref, neg, add, sub, mul, pow };
  Kind kind = Kind::number;
  Scalar number;      // number
  std::string name;   // symbol, call, fnref
  std::vector<Expr> args;
  unsigned exponent = 0;  // pow
  unsigned line = 1, col = 1;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.number == b.number && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
  }
};

/// Function names recognized by the grammar.
const std::vector<std::string>& dsl_functions();
bool is_dsl_function(std::string_view name);

/// Parses an expression; throws Error(Errc::parse) with a message of the
/// form "at L:C: ... expected one of ...".
Expr parse_expr(std::string_view src);

/// Canonical text with the fewest parentheses that parse back to `e`.
std::string render_expr(const Expr& e);

struct Session {
  BaseAlgebra base{Mode::commutative, {}};
  ProductKind product = ProductKind::qsh(1);
  int coproduct_case = 1;
  Carrier carrier = Carrier::plus_lsh;
};

using Value = std::variant<Scalar, BaseElement, TensorElement, TwoLeg>;

Value evaluate(const Expr& e, const Session& s);
Value evaluate(std::string_view src, const Session& s);

std::string value_kind(const Value& v);
std::string render_value(const Session& s, const Value& v);
nlohmann::json value_json(const Session& s, const Value& v);

/// Random well-formed expression over the given symbols.
Expr random_expr(SampleRng& rng, const std::vector<std::string>& symbols, unsigned depth);

}  // namespace rba
