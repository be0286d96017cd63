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

#include "rba/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "rba/bialgebra.hpp"
#include "rba/error.hpp"
#include "rba/io.hpp"
#include "rba/operators.hpp"

namespace rba {

const std::vector<std::string>& dsl_functions() {
  static const std::vector<std::string> f{"P",   "Q",    "Pu",  "sh",   "qsh",    "rsh",   "lsh",   "bsh",  "prec",
                                          "succ", "dot", "star", "dagger", "delta", "eps", "omega", "bstar"};
  return f;
}

bool is_dsl_function(std::string_view name) {
  const auto& f = dsl_functions();
  return std::find(f.begin(), f.end(), name) != f.end();
}

namespace {

// ------------------------------------------------------------------ lexer

enum class Tok { num, ident, unit_k, plus, minus, star, caret, lparen, rparen, lbrack, rbrack, comma, semi, end };

struct Token {
  Tok kind;
  std::string text;
  unsigned line, col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::num: return "number";
    case Tok::ident: return "identifier";
    case Tok::unit_k: return "'1_K'";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrack: return "'['";
    case Tok::rbrack: return "']'";
    case Tok::comma: return "','";
    case Tok::semi: return "';'";
    case Tok::end: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail_at(unsigned line, unsigned col, const std::string& msg) {
  throw Error(Errc::parse, "at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    unsigned l = line, cc = col;
    if (c == '1' && s.substr(i, 3) == "1_K" && (i + 3 == s.size() || !ident_char(s[i + 3]))) {
      out.push_back({Tok::unit_k, "1_K", l, cc});
      advance(3);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        std::size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j + 1) fail_at(l, cc + static_cast<unsigned>(j + 1 - i), "expected a denominator after '/'");
        j = k;
      }
      if (j < s.size() && ident_char(s[j]))
        fail_at(l, cc + static_cast<unsigned>(j - i), "unexpected character '" + std::string(1, s[j]) + "' in number");
      out.push_back({Tok::num, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::plus; break;
      case '-': t = Tok::minus; break;
      case '*': t = Tok::star; break;
      case '^': t = Tok::caret; break;
      case '(': t = Tok::lparen; break;
      case ')': t = Tok::rparen; break;
      case '[': t = Tok::lbrack; break;
      case ']': t = Tok::rbrack; break;
      case ',': t = Tok::comma; break;
      case ';': t = Tok::semi; break;
      default: fail_at(l, cc, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({t, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

// ----------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::end) unexpected({Tok::end});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void unexpected(std::vector<Tok> closers) const {
    const Token& t = peek();
    std::string what = t.kind == Tok::end ? "unexpected end of input" : "unexpected " + std::string(tok_name(t.kind)) +
                                                                            (t.kind == Tok::ident || t.kind == Tok::num ? " '" + t.text + "'" : "");
    std::string set;
    for (Tok c : closers) set += (set.empty() ? "" : ", ") + std::string(tok_name(c));
    for (Tok c : {Tok::plus, Tok::minus, Tok::star}) set += ", " + std::string(tok_name(c));
    fail_at(t.line, t.col, what + "; expected one of {" + set + "}");
  }

  static Expr node(Expr::Kind k, const Token& at) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.col = at.col;
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      Token op = take();
      Expr e = node(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op);
      e.args.push_back(std::move(lhs));
      e.args.push_back(term());
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == Tok::star) {
      Token op = take();
      Expr e = node(Expr::Kind::mul, op);
      e.args.push_back(std::move(lhs));
      e.args.push_back(unary());
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::minus) {
      Token op = take();
      Expr e = node(Expr::Kind::neg, op);
      e.args.push_back(unary());
      return e;
    }
    Expr base = primary();
    if (peek().kind == Tok::caret) {
      Token op = take();
      if (peek().kind != Tok::num || peek().text.find('/') != std::string::npos) {
        const Token& t = peek();
        fail_at(t.line, t.col, "expected a nonnegative integer exponent after '^'");
      }
      Token n = take();
      if (n.text.size() > 4) fail_at(n.line, n.col, "exponent too large");
      Expr e = node(Expr::Kind::pow, op);
      e.exponent = static_cast<unsigned>(std::stoul(n.text));
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::num: {
        Token n = take();
        Expr e = node(Expr::Kind::number, n);
        e.number = parse_scalar(n.text);
        return e;
      }
      case Tok::unit_k: return node(Expr::Kind::unit_k, take());
      case Tok::ident: {
        Token id = take();
        if (is_dsl_function(id.text)) {
          if (peek().kind != Tok::lparen) {
            Expr e = node(Expr::Kind::fnref, id);
            e.name = id.text;
            return e;
          }
          take();
          Expr e = node(Expr::Kind::call, id);
          e.name = id.text;
          e.args.push_back(expr());
          while (peek().kind == Tok::semi) {
            take();
            e.args.push_back(expr());
          }
          if (peek().kind != Tok::rparen) unexpected({Tok::rparen, Tok::semi});
          take();
          return e;
        }
        Expr e = node(Expr::Kind::symbol, id);
        e.name = id.text;
        return e;
      }
      case Tok::lbrack: {
        Token open = take();
        Expr e = node(Expr::Kind::word, open);
        e.args.push_back(expr());
        while (peek().kind == Tok::comma) {
          take();
          e.args.push_back(expr());
        }
        if (peek().kind != Tok::rbrack) unexpected({Tok::rbrack, Tok::comma});
        take();
        return e;
      }
      case Tok::lparen: {
        take();
        Expr e = expr();
        if (peek().kind != Tok::rparen) unexpected({Tok::rparen});
        take();
        return e;
      }
      default: {
        std::string what = t.kind == Tok::end ? "unexpected end of input" : "unexpected " + std::string(tok_name(t.kind));
        fail_at(t.line, t.col, what + "; expected one of {number, identifier, '1_K', '[', '(', '-'}");
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------- renderer

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    default: return 5;
  }
}

void render_into(const Expr& e, std::string& out);

void render_at_least(const Expr& e, int prec, std::string& out) {
  if (precedence(e) < prec) {
    out += '(';
    render_into(e, out);
    out += ')';
  } else {
    render_into(e, out);
  }
}

void render_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::number:
      if (e.number < 0) {
        out += "(-" + to_string(-e.number) + ")";
      } else {
        out += to_string(e.number);
      }
      break;
    case Expr::Kind::symbol:
    case Expr::Kind::fnref: out += e.name; break;
    case Expr::Kind::unit_k: out += "1_K"; break;
    case Expr::Kind::word:
    case Expr::Kind::call: {
      out += e.kind == Expr::Kind::word ? "[" : e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += e.kind == Expr::Kind::word ? ", " : "; ";
        render_into(e.args[i], out);
      }
      out += e.kind == Expr::Kind::word ? "]" : ")";
      break;
    }
    case Expr::Kind::neg:
      out += '-';
      render_at_least(e.args[0], 3, out);
      break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
      render_at_least(e.args[0], 1, out);
      out += e.kind == Expr::Kind::add ? " + " : " - ";
      render_at_least(e.args[1], 2, out);
      break;
    case Expr::Kind::mul:
      render_at_least(e.args[0], 2, out);
      out += '*';
      render_at_least(e.args[1], 3, out);
      break;
    case Expr::Kind::pow:
      render_at_least(e.args[0], 5, out);
      out += '^' + std::to_string(e.exponent);
      break;
  }
}

// -------------------------------------------------------------- evaluator

[[noreturn]] void type_error(const std::string& msg) { throw Error(Errc::type, msg); }

class Evaluator {
 public:
  explicit Evaluator(const Session& s) : s_(s), mode_(s.base.mode()) {}

  Value eval(const Expr& e) const {
    try {
      return eval_node(e);
    } catch (const Error& err) {
      std::string m = err.what();
      if (m.rfind("at ", 0) == 0) throw;
      throw Error(err.code(), "at " + std::to_string(e.line) + ":" + std::to_string(e.col) + ": " + m);
    }
  }

 private:
  BaseElement to_base(const Value& v, const char* where) const {
    if (auto p = std::get_if<Scalar>(&v)) return base_unit(mode_, *p);
    if (auto p = std::get_if<BaseElement>(&v)) return *p;
    type_error(std::string(where) + " expects a base element, got a " + value_kind(v));
  }

  TensorElement to_tensor(const Value& v, const char* where) const {
    if (auto p = std::get_if<Scalar>(&v)) return scalar_element(mode_, *p);
    if (auto p = std::get_if<TensorElement>(&v)) return *p;
    if (std::holds_alternative<BaseElement>(v))
      type_error(std::string(where) + " expects a tensor element, got a base element (write it as a word [..])");
    type_error(std::string(where) + " expects a tensor element, got a " + value_kind(v));
  }

  static int rank(const Value& v) { return static_cast<int>(v.index()); }

  Value add(const Value& a, const Value& b, Scalar sign) const {
    int r = std::max(rank(a), rank(b));
    switch (r) {
      case 0: return Scalar(std::get<Scalar>(a) + sign * std::get<Scalar>(b));
      case 1: return to_base(a, "'+'") + sign * to_base(b, "'+'");
      case 2: return to_tensor(a, "'+'") + sign * to_tensor(b, "'+'");
      default:
        if (rank(a) != 3 || rank(b) != 3) type_error("cannot add a two-leg element to a " + value_kind(rank(a) == 3 ? b : a));
        return std::get<TwoLeg>(a) + sign * std::get<TwoLeg>(b);
    }
  }

  static Value scale(const Value& v, const Scalar& c) {
    return std::visit([&](const auto& x) -> Value { return c * x; }, v);
  }

  Value mul(const Value& a, const Value& b) const {
    if (auto p = std::get_if<Scalar>(&a)) return scale(b, *p);
    if (auto p = std::get_if<Scalar>(&b)) return scale(a, *p);
    if (std::holds_alternative<BaseElement>(a) && std::holds_alternative<BaseElement>(b))
      return base_mul(std::get<BaseElement>(a), std::get<BaseElement>(b));
    type_error("'*' multiplies scalars and base elements only; use sh, qsh, rsh, lsh or bsh for words");
  }

  Value power(const Value& v, unsigned n) const {
    if (auto p = std::get_if<Scalar>(&v)) return rba::power(*p, n);
    if (auto p = std::get_if<BaseElement>(&v)) {
      BaseElement r = base_unit(mode_);
      for (unsigned i = 0; i < n; ++i) r = base_mul(r, *p);
      return r;
    }
    type_error("'^' applies to scalars and base elements, got a " + value_kind(v));
  }

  void arity(const Expr& e, std::size_t lo, std::size_t hi) const {
    if (e.args.size() < lo || e.args.size() > hi)
      throw Error(Errc::arity, e.name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi)) +
                                   " argument" + (hi == 1 ? "" : "s") + ", got " + std::to_string(e.args.size()));
  }

  Value call(const Expr& e) const {
    const std::string& f = e.name;
    std::vector<Value> a;
    for (const auto& x : e.args) a.push_back(eval(x));
    auto fname = f.c_str();
    if (f == "P" || f == "Q" || f == "dagger" || f == "delta" || f == "eps" || f == "omega" || f == "bstar") arity(e, 1, 1);
    if (f == "P") {
      if (auto p = std::get_if<TwoLeg>(&a[0])) return amalg_square(s_.base, s_.product).op(*p);
      return shift_right(to_tensor(a[0], fname));
    }
    if (f == "Q") return shift_left(to_tensor(a[0], fname));
    if (f == "Pu") {
      arity(e, 2, 2);
      BaseElement u = to_base(a[0], "Pu (first argument)");
      TensorElement x = to_tensor(a[1], fname), r(mode_);
      for (const auto& [m, c] : u) r.add_scaled(shift_letter(m, x), c);
      return r;
    }
    if (f == "sh" || f == "qsh" || f == "rsh" || f == "lsh") {
      arity(e, 2, f == "qsh" ? 3 : 2);
      ProductKind k = f == "sh" ? ProductKind::sh() : f == "rsh" ? ProductKind::rsh() : f == "lsh" ? ProductKind::lsh() : ProductKind::qsh(s_.product.tag == ProductTag::qsh ? s_.product.theta : Scalar(1));
      if (a.size() == 3) {
        auto th = std::get_if<Scalar>(&a[2]);
        if (!th) type_error("the weight of qsh must be a rational number");
        k = ProductKind::qsh(*th);
      }
      return product_recursive(k, to_tensor(a[0], fname), to_tensor(a[1], fname));
    }
    if (f == "bsh") {
      arity(e, 2, 2);
      if (std::holds_alternative<TwoLeg>(a[0]) || std::holds_alternative<TwoLeg>(a[1])) {
        auto x = std::get_if<TwoLeg>(&a[0]), y = std::get_if<TwoLeg>(&a[1]);
        if (!x || !y) type_error("bsh on two-leg elements needs two two-leg arguments");
        return amalg_product(Ambient::plus(s_.product, mode_), *x, *y);
      }
      return product_plus(s_.product, to_tensor(a[0], fname), to_tensor(a[1], fname));
    }
    if (f == "prec" || f == "succ" || f == "dot" || f == "star") {
      arity(e, 2, 2);
      Tridendriform T = s_.carrier == Carrier::plus_lsh ? Tridendriform::plus_lsh(mode_) : Tridendriform::qone(mode_);
      TriOp op = f == "prec" ? TriOp::prec : f == "succ" ? TriOp::succ : f == "dot" ? TriOp::dot : TriOp::star;
      return T.apply(op, to_tensor(a[0], fname), to_tensor(a[1], fname));
    }
    if (f == "dagger") {
      if (std::holds_alternative<BaseElement>(a[0])) return s_.base.involution(std::get<BaseElement>(a[0]));
      if (std::holds_alternative<Scalar>(a[0])) return a[0];
      return involution_extend(s_.base, to_tensor(a[0], fname));
    }
    if (f == "delta") {
      if (auto p = std::get_if<BaseElement>(&a[0])) {
        TwoLeg r(mode_);
        for (const auto& [legs, c] : s_.base.coproduct(*p)) r.add_term({Word({legs[0]}), Word({legs[1]})}, c);
        return r;
      }
      TensorElement x = to_tensor(a[0], fname);
      return s_.coproduct_case == 2 ? delta_case2(x) : delta_case1(s_.base, x);
    }
    if (f == "eps") {
      if (auto p = std::get_if<BaseElement>(&a[0])) return s_.base.counit(*p);
      TensorElement x = to_tensor(a[0], fname);
      return s_.coproduct_case == 2 ? counit_case2(x) : counit_case1(s_.base, s_.product, x);
    }
    if (f == "omega") return omega(to_tensor(a[0], fname));
    if (f == "bstar") return bracket_star(to_tensor(a[0], fname));
    throw Error(Errc::parse, "unknown function '" + f + "'");
  }

  Value eval_node(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::number: return e.number;
      case Expr::Kind::symbol: return s_.base.element(s_.base.gen(e.name));
      case Expr::Kind::unit_k: return scalar_element(mode_, 1);
      case Expr::Kind::fnref: type_error("'" + e.name + "' is an operator, not a value; apply it as " + e.name + "(...)");
      case Expr::Kind::word: {
        std::vector<BaseElement> slots;
        for (const auto& x : e.args) slots.push_back(to_base(eval(x), "a word letter"));
        return word_normalize(mode_, slots);
      }
      case Expr::Kind::call: return call(e);
      case Expr::Kind::neg: return scale(eval(e.args[0]), -1);
      case Expr::Kind::add: return add(eval(e.args[0]), eval(e.args[1]), 1);
      case Expr::Kind::sub: return add(eval(e.args[0]), eval(e.args[1]), -1);
      case Expr::Kind::mul: return mul(eval(e.args[0]), eval(e.args[1]));
      case Expr::Kind::pow: return power(eval(e.args[0]), e.exponent);
    }
    throw Error(Errc::parse, "malformed expression");
  }

  const Session& s_;
  Mode mode_;
};

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(lex(src)).parse_all(); }

std::string render_expr(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

Value evaluate(const Expr& e, const Session& s) { return Evaluator(s).eval(e); }
Value evaluate(std::string_view src, const Session& s) { return evaluate(parse_expr(src), s); }

std::string value_kind(const Value& v) {
  switch (v.index()) {
    case 0: return "scalar";
    case 1: return "base element";
    case 2: return "tensor element";
    default: return "two-leg element";
  }
}

std::string render_value(const Session& s, const Value& v) {
  switch (v.index()) {
    case 0: return to_string(std::get<Scalar>(v));
    case 1: return s.base.format(std::get<BaseElement>(v));
    case 2: return format_tensor(s.base, std::get<TensorElement>(v));
    default: return format_two_leg(s.base, std::get<TwoLeg>(v));
  }
}

nlohmann::json value_json(const Session& s, const Value& v) {
  switch (v.index()) {
    case 0: return scalar_json(std::get<Scalar>(v));
    case 1: return to_json(s.base, std::get<BaseElement>(v));
    case 2: return to_json(s.base, std::get<TensorElement>(v));
    default: return to_json(s.base, std::get<TwoLeg>(v));
  }
}

Expr random_expr(SampleRng& rng, const std::vector<std::string>& symbols, unsigned depth) {
  auto leaf = [&]() {
    Expr e;
    switch (rng.below(symbols.empty() ? 2 : 4)) {
      case 0:
        e.kind = Expr::Kind::number;
        e.number = Scalar(mpz_class(static_cast<long>(rng.below(6))), mpz_class(static_cast<long>(1 + rng.below(3))));
        break;
      case 1:
        e.kind = rng.below(3) == 0 ? Expr::Kind::fnref : Expr::Kind::unit_k;
        if (e.kind == Expr::Kind::fnref) e.name = dsl_functions()[rng.below(dsl_functions().size())];
        break;
      default:
        e.kind = Expr::Kind::symbol;
        e.name = symbols[rng.below(symbols.size())];
    }
    return e;
  };
  if (depth == 0 || rng.below(4) == 0) return leaf();
  Expr e;
  auto sub = [&]() { return random_expr(rng, symbols, depth - 1); };
  switch (rng.below(8)) {
    case 0: e.kind = Expr::Kind::add; break;
    case 1: e.kind = Expr::Kind::sub; break;
    case 2: e.kind = Expr::Kind::mul; break;
    case 3:
      e.kind = Expr::Kind::neg;
      e.args.push_back(sub());
      return e;
    case 4:
      e.kind = Expr::Kind::pow;
      e.exponent = static_cast<unsigned>(rng.below(4));
      e.args.push_back(sub());
      return e;
    case 5: {
      e.kind = Expr::Kind::word;
      auto n = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < n; ++i) e.args.push_back(sub());
      return e;
    }
    default: {
      e.kind = Expr::Kind::call;
      e.name = dsl_functions()[rng.below(dsl_functions().size())];
      auto n = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < n; ++i) e.args.push_back(sub());
      return e;
    }
  }
  e.args.push_back(sub());
  e.args.push_back(sub());
  return e;
}

}  // namespace rba
