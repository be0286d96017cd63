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

// Command-line front end: expression evaluation and the identity suites.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "rba/bialgebra.hpp"
#include "rba/dsl.hpp"
#include "rba/error.hpp"
#include "rba/io.hpp"
#include "rba/operators.hpp"
#include "rba/suites.hpp"

namespace {

using namespace rba;

struct Options {
  std::string base = "comm";
  std::string gens;
  std::string product;
  std::string theta = "1";
  int coproduct_case = 1;
  std::string carrier = "plus";
  unsigned max_len = 3;
  unsigned order = 4;
  std::uint64_t seed = 42;
  std::size_t cases = 200;
  std::string format = "text";
};

Mode parse_mode(const std::string& s) { return s == "noncomm" ? Mode::noncommutative : Mode::commutative; }

Session make_session(const Options& o, const std::string& default_gens) {
  Session s;
  s.base = BaseAlgebra::parse_declaration(parse_mode(o.base), o.gens.empty() ? default_gens : o.gens);
  s.product = ProductKind::parse(o.product.empty() ? "qsh" : o.product, parse_scalar(o.theta));
  s.coproduct_case = o.coproduct_case;
  s.carrier = o.carrier == "qone" ? Carrier::qone : Carrier::plus_lsh;
  return s;
}

void print_error(const Error& e) { std::cerr << "error[" << errc_code(e.code()) << "] " << e.what() << "\n"; }

int cmd_eval(const Options& o, const std::string& src) {
  Session s = make_session(o, "a,b,c");
  Value v = evaluate(src, s);
  if (o.format == "json") {
    std::cout << nlohmann::json{{"kind", value_kind(v)}, {"value", value_json(s, v)}}.dump() << "\n";
  } else {
    std::cout << render_value(s, v) << "\n";
  }
  return 0;
}

int cmd_check(const Options& o, const std::string& suite) {
  SuiteConfig cfg;
  if (!o.product.empty()) cfg.product = ProductKind::parse(o.product, parse_scalar(o.theta));
  cfg.theta = parse_scalar(o.theta);
  cfg.mode = parse_mode(o.base);
  cfg.max_len = o.max_len;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  cfg.spitzer_order = o.order;
  SuiteResult r = run_suite(suite, cfg);
  std::size_t failed = 0;
  for (const auto& rep : r.reports) failed += !rep.ok();
  if (o.format == "json") {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& rep : r.reports) reports.push_back(report_json(rep));
    std::cout << nlohmann::json{{"suite", suite}, {"pass", r.ok()}, {"failed", failed}, {"reports", reports}}.dump(2) << "\n";
  } else {
    for (const auto& rep : r.reports) std::cout << report_line(rep) << "\n";
    std::cout << suite << ": " << r.reports.size() - failed << "/" << r.reports.size() << " checks as expected\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_spitzer(const Options& o, const std::string& src) {
  Session s = make_session(o, "x,y");
  if (s.base.mode() != Mode::commutative) throw Error(Errc::mode_mismatch, "the Spitzer identity needs a commutative base");
  Value v = evaluate(src, s);
  auto a = std::get_if<TensorElement>(&v);
  if (!a) throw Error(Errc::type, "spitzer expects a tensor element, got a " + value_kind(v));
  Scalar theta = parse_scalar(o.theta);
  CheckReport rep = spitzer_verify(s.base, theta, *a, o.order);
  auto sides = spitzer_sides(theta, *a, o.order);
  if (o.format == "json") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (unsigned m = 0; m <= o.order; ++m)
      coeffs.push_back({{"m", m}, {"lhs", to_json(s.base, sides.lhs[m])}, {"rhs", to_json(s.base, sides.rhs[m])}});
    std::cout << nlohmann::json{{"report", report_json(rep)}, {"coefficients", coeffs}}.dump(2) << "\n";
  } else {
    for (unsigned m = 0; m <= o.order; ++m) {
      std::cout << "t^" << m << ": lhs = " << format_tensor(s.base, sides.lhs[m]) << "\n";
      std::cout << "     rhs = " << format_tensor(s.base, sides.rhs[m]) << "\n";
    }
    std::cout << report_line(rep) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_primitives(const Options& o) {
  Session s = make_session(o, o.coproduct_case == 2 ? "a" : "h:primitive");
  auto res = primitives_at_bound(s.base, o.coproduct_case, s.product, o.max_len);
  if (o.format == "json") {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& x : res.primitives) p.push_back(to_json(s.base, x));
    std::cout << nlohmann::json{{"case", o.coproduct_case}, {"bound", o.max_len}, {"basis_words", res.basis_words.size()},
                                {"primitives", p}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "case " << o.coproduct_case << ", bound " << o.max_len << ": " << res.basis_words.size()
              << " basis words, " << res.primitives.size() << " primitives\n";
    for (const auto& x : res.primitives) std::cout << "  " << format_tensor(s.base, x) << "\n";
  }
  return 0;
}

int cmd_decompose(const Options& o, const std::string& src) {
  Options q = o;
  q.carrier = "qone";
  Session s = make_session(q, "a,b,c");
  Value v = evaluate(src, s);
  auto x = std::get_if<TensorElement>(&v);
  if (!x || x->size() != 1 || x->begin()->second != 1)
    throw Error(Errc::type, "decompose expects a single basis word such as [a, b*c]");
  const Word& w = x->begin()->first;
  auto tree = omega_decompose(w);
  std::string text = serialize_tree(s.base, *tree);
  bool round_trip = std::get<TensorElement>(evaluate(text, s)) == *x;
  if (o.format == "json") {
    std::cout << nlohmann::json{{"word", format_word(s.base, w)}, {"tree", text}, {"round_trip", round_trip}}.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
  return round_trip ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rota-Baxter type operators on free tensor algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* c) {
    c->add_option("--base", o.base, "Base algebra mode")->check(CLI::IsMember({"comm", "noncomm"}));
    c->add_option("--gens", o.gens, "Generators, e.g. a=b,b=a,h:primitive,g:grouplike");
    c->add_option("--product", o.product, "Product kind")->check(CLI::IsMember({"sh", "qsh", "rsh", "lsh"}));
    c->add_option("--theta", o.theta, "Rational weight, e.g. 1/3");
    c->add_option("--case", o.coproduct_case, "Coproduct case")->check(CLI::IsMember({1, 2}));
    c->add_option("--carrier", o.carrier, "Tridendriform carrier")->check(CLI::IsMember({"plus", "qone"}));
    c->add_option("--max-len", o.max_len, "Word length bound")->check(CLI::Range(1u, 8u));
    c->add_option("--order", o.order, "Spitzer truncation order")->check(CLI::Range(1u, 8u));
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  std::string expr, suite;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  common(eval);
  eval->add_option("expr", expr, "Expression")->required();
  auto* check = app.add_subcommand("check", "Run an identity suite");
  common(check);
  check->add_option("--cases", o.cases, "Random cases per check")->check(CLI::Range(1, 100000));
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  check->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
  auto* spitzer = app.add_subcommand("spitzer", "Verify the Spitzer identity for an element");
  common(spitzer);
  expr = "[x]";
  spitzer->add_option("expr", expr, "Element a (default [x])");
  auto* prims = app.add_subcommand("primitives", "Primitive elements at a bound");
  common(prims);
  auto* dec = app.add_subcommand("decompose", "Decompose a word through prec and dot");
  common(dec);
  dec->add_option("word", expr, "Word, e.g. [a, b*c]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    o.max_len = prims->parsed() && prims->count("--max-len") == 0 ? 3 : o.max_len;
    if (eval->parsed()) return cmd_eval(o, expr);
    if (check->parsed()) return cmd_check(o, suite);
    if (spitzer->parsed()) return cmd_spitzer(o, expr);
    if (prims->parsed()) return cmd_primitives(o);
    if (dec->parsed()) return cmd_decompose(o, expr);
  } catch (const Error& e) {
    print_error(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error[E_ARGUMENT] " << e.what() << "\n";
    return 2;
  }
  return 2;
}
