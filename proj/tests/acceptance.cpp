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

// Acceptance driver: one line per criterion, exact equality throughout.
//
// Exit status is 0 when the set of failing criteria equals kKnownFailures.
// A criterion listed there fails because the claim it checks is false as
// stated; the line printed for it shows the counterexample and the form
// that does hold. Any other failure, or a known failure that starts to
// pass, makes the run exit 1.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "rba/bialgebra.hpp"
#include "rba/dendriform.hpp"
#include "rba/dsl.hpp"
#include "rba/io.hpp"
#include "rba/samples.hpp"
#include "rba/shuffle.hpp"
#include "rba/suites.hpp"

using namespace rba;
using Clock = std::chrono::steady_clock;

namespace {

const std::set<int> kKnownFailures{4};

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SuiteConfig reference_config() { return SuiteConfig{}; }

std::vector<CheckReport> reports_of(std::initializer_list<const char*> names) {
  std::vector<CheckReport> out;
  for (const char* n : names) {
    auto res = run_suite(n, reference_config());
    out.insert(out.end(), res.reports.begin(), res.reports.end());
  }
  return out;
}

bool is_control(const CheckReport& r) {
  return r.identity.find("[negative control]") != std::string::npos ||
         r.ambient.find("[negative control]") != std::string::npos;
}

// Every report is read as a claim: negative controls must be refuted,
// every other report must hold.
Outcome judge(const std::vector<CheckReport>& reports) {
  Outcome o;
  std::size_t neg = 0;
  std::ostringstream bad;
  for (const auto& r : reports) {
    if (is_control(r)) {
      ++neg;
      if (r.pass || !r.counterexample) {
        o.pass = false;
        bad << "\n      control not refuted: " << r.identity << " [" << r.op << " on " << r.ambient << "]";
      }
    } else if (!r.pass) {
      o.pass = false;
      // Reports the suites already mark as refuted are described by the caller.
      if (r.expect_pass) bad << "\n      " << report_line(r);
    }
  }
  o.detail = std::to_string(reports.size()) + " checks (" + std::to_string(neg) + " negative controls)" + bad.str();
  return o;
}

Outcome suites_hold(std::initializer_list<const char*> names) { return judge(reports_of(names)); }

Word word(std::initializer_list<Monomial> letters) { return Word(std::vector<Monomial>(letters)); }

// ---------------------------------------------------------------- 1
Outcome worked_example() {
  auto A = BaseAlgebra::parse_declaration(Mode::commutative, "a1,b1,b2");
  const Mode M = A.mode();
  const Monomial a = A.gen("a1"), b = A.gen("b1"), c = A.gen("b2"), one;
  const Monomial ab = mono_mul(M, a, b), ac = mono_mul(M, a, c);
  TensorElement sh(M);
  sh.add_term(word({a, b, c}), 1);
  sh.add_term(word({b, a, c}), 1);
  sh.add_term(word({b, c, a}), 1);
  auto x = letter_element(M, a), y = word_element(M, word({b, c}));

  TensorElement q = sh, r = sh, l = sh;
  q.add_term(word({ab, c}), 2);
  q.add_term(word({b, ac}), 2);
  r.add_term(word({one, ab, c}), -1);
  r.add_term(word({b, one, ac}), -1);
  l.add_term(word({ab, one, c}), -1);
  l.add_term(word({b, ac, one}), -1);

  Outcome o;
  std::ostringstream d;
  auto row = [&](const char* label, const ProductKind& k, const TensorElement& expect) {
    auto got = product_recursive(k, x, y);
    bool ok = got == expect && got.size() == expect.size();
    o.pass = o.pass && ok;
    d << label << " " << got.size() << " terms" << (ok ? "" : " MISMATCH: " + format_tensor(A, got)) << "; ";
  };
  row("sh", ProductKind::sh(), sh);
  row("qsh(2)", ProductKind::qsh(2), q);
  row("rsh", ProductKind::rsh(), r);
  row("lsh", ProductKind::lsh(), l);
  o.pass = o.pass && sh.size() == 3 && q.size() == 5 && r.size() == 5 && l.size() == 5;
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 2
Outcome differential() {
  Outcome o;
  std::size_t pairs = 0;
  std::ostringstream bad;
  for (Mode mode : {Mode::commutative, Mode::noncommutative}) {
    auto A = BaseAlgebra::parse_declaration(mode, "g1,g2,g3,g4,g5,g6");
    std::vector<Monomial> g;
    for (GenId i = 0; i < 6; ++i) g.push_back(Monomial::generator(i));
    for (const auto& kind : {ProductKind::sh(), ProductKind::qsh(1), ProductKind::qsh(Scalar(mpz_class(-1), mpz_class(3))),
                             ProductKind::rsh(), ProductKind::lsh()}) {
      for (unsigned m = 0; m <= 6; ++m)
        for (unsigned n = 0; m + n <= 6; ++n) {
          // All ways to hand the six generators out as distinct letters.
          std::vector<GenId> perm{0, 1, 2, 3, 4, 5};
          std::set<std::pair<std::vector<GenId>, std::vector<GenId>>> seen;
          do {
            std::vector<GenId> lu(perm.begin(), perm.begin() + m), lv(perm.begin() + m, perm.begin() + m + n);
            if (!seen.insert({lu, lv}).second) continue;
            if (seen.size() > 40) break;  // relabelings beyond this repeat the same shapes
            std::vector<Monomial> u, v;
            for (GenId i : lu) u.push_back(g[i]);
            for (GenId i : lv) v.push_back(g[i]);
            auto x = word_element(mode, Word(u)), y = word_element(mode, Word(v));
            auto rec = product_recursive(kind, x, y);
            auto comb = product_combinatorial(kind, x, y);
            ++pairs;
            if (!(rec == comb) || rec.size() != expected_term_count(kind, m, n)) {
              o.pass = false;
              bad << "\n      " << kind.name() << " " << mode_name(mode) << " " << format_tensor(A, x) << " * "
                  << format_tensor(A, y);
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
  }
  o.detail = std::to_string(pairs) + " word pairs, 5 kinds, both modes" + bad.str();
  return o;
}

// ---------------------------------------------------------------- 3
Outcome operator_identities() {
  auto reports = reports_of({"rb", "nijenhuis", "td", "average"});
  auto o = judge(reports);
  // The specific control: P_A on rsh is not Rota-Baxter of weight 1.
  bool found = false;
  for (const auto& r : reports)
    if (is_control(r) && r.ambient.rfind("rsh", 0) == 0 && !r.pass && r.counterexample) {
      found = true;
      o.detail += "\n      control " + r.identity + " on " + r.ambient + ": x=" + r.counterexample->inputs[0] +
                  ", y=" + r.counterexample->inputs[1];
      break;
    }
  if (!found) {
    o.pass = false;
    o.detail += "\n      rsh rota_baxter control produced no counterexample";
  }
  return o;
}

// ---------------------------------------------------------------- 4
Outcome conjugates_and_doubles() {
  // The stated anti-homomorphism for the conjugate Nijenhuis map is kept in
  // the double suite as an expected refutation; judge() reads it as a claim.
  auto reports = reports_of({"conjugates", "double"});
  Outcome o = judge(reports);
  const CheckReport* first = nullptr;
  for (const auto& r : reports) {
    if (r.identity.find("[refuted]") == std::string::npos || r.pass) continue;
    if (!first) {
      first = &r;
      o.detail += "\n      claim fails: " + r.identity.substr(0, r.identity.find(" [")) + " on";
    }
    o.detail += " [" + r.ambient + "]";
  }
  if (first && first->counterexample)
    o.detail += "\n        x=" + first->counterexample->inputs[0] + " y=" + first->counterexample->inputs[1] +
                "  lhs=" + first->counterexample->lhs + "  rhs=" + first->counterexample->rhs;
  if (!o.pass) o.detail += "\n      the corrected form N~(a*Nb) = N~(ab) - N~(a)N~(b) holds on every sample";
  return o;
}

// ---------------------------------------------------------------- 5
Outcome spitzer() {
  Outcome o = suites_hold({"spitzer"});
  auto A = BaseAlgebra::parse_declaration(Mode::commutative, "x");
  auto a = letter_element(A.mode(), A.gen("x"));
  for (Scalar theta : {Scalar(0), Scalar(1), Scalar(-2), Scalar(mpz_class(1), mpz_class(3))}) {
    auto rep = spitzer_verify(A, theta, a, 4);
    auto sides = spitzer_sides(theta, a, 4);
    bool oracle = true;
    for (unsigned m = 0; m <= 3; ++m) oracle = oracle && sides.partition_oracle[m] == sides.rhs[m];
    o.pass = o.pass && rep.pass && oracle;
    o.detail += "; theta=" + to_string(theta) + (rep.pass && oracle ? " ok" : " FAILED");
  }
  return o;
}

// ---------------------------------------------------------------- 11
Outcome primitives() {
  Outcome o = suites_hold({"primitives"});
  auto A = BaseAlgebra::parse_declaration(Mode::commutative, "a,b");
  auto r2 = primitives_at_bound(A, 2, ProductKind::rsh(), 3);
  std::set<Word> got2, want2;
  for (const auto& m : monomials_up_to(A, 3))
    if (!m.is_unit()) want2.insert(Word({m}));
  bool single = true;
  for (const auto& p : r2.primitives) {
    single = single && p.size() == 1;
    got2.insert(p.begin()->first);
  }
  auto H = BaseAlgebra::parse_declaration(Mode::commutative, "h:primitive,g:grouplike,k:primitive");
  auto r1 = primitives_at_bound(H, 1, ProductKind::qsh(1), 3);
  std::set<Word> got1, want1{Word({H.gen("h")}), Word({H.gen("k")})};
  for (const auto& p : r1.primitives) {
    single = single && p.size() == 1;
    got1.insert(p.begin()->first);
  }
  bool ok = single && got2 == want2 && r2.primitives.size() == want2.size() && got1 == want1 && r1.primitives.size() == 2;
  o.pass = o.pass && ok;
  o.detail += "; case 2 kernel dim " + std::to_string(r2.primitives.size()) + "/" + std::to_string(want2.size()) +
              ", case 1 kernel dim " + std::to_string(r1.primitives.size()) + "/2";
  return o;
}

// ---------------------------------------------------------------- 13
Outcome cli_and_round_trip() {
  Outcome o;
  std::string cmd = std::string(RBA_CLI_PATH) + " check all > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  int code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  o.pass = code == 0;
  o.detail = "check all exit " + std::to_string(code);
  SampleRng rng(42);
  std::size_t ok = 0;
  for (int i = 0; i < 500; ++i) {
    Expr e = random_expr(rng, {"a", "b", "c"}, 4);
    std::string text = render_expr(e);
    try {
      if (parse_expr(text) == e && render_expr(parse_expr(text)) == text) ++ok;
    } catch (const Error&) {
    }
  }
  o.pass = o.pass && ok == 500;
  o.detail += "; round trips " + std::to_string(ok) + "/500";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<Criterion> all{
      {1, "worked example for sh, qsh(2), rsh, lsh", 1, worked_example},
      {2, "combinatorial and recursive engines agree", 120, differential},
      {3, "operator identity matrix with negative control", 300, operator_identities},
      {4, "conjugate operators and double products", 120, conjugates_and_doubles},
      {5, "Spitzer identity with partition oracle", 60, spitzer},
      {6, "tridendriform axioms, star products, flipped-dot control", 120, [] { return suites_hold({"tridend"}); }},
      {7, "Omega morphism and decomposition round trip", 60, [] { return suites_hold({"omega"}); }},
      {8, "involution laws", 60, [] { return suites_hold({"involution"}); }},
      {9, "bialgebra case 1", 120, [] { return suites_hold({"bialg1"}); }},
      {10, "bialgebra case 2", 120, [] { return suites_hold({"bialg2"}); }},
      {11, "primitive elements at bound 3", 60, primitives},
      {12, "morphism lift", 60, [] { return suites_hold({"lift"}); }},
      {13, "CLI check all and render round trip", 600, cli_and_round_trip},
  };
  std::set<int> failed;
  for (const auto& c : all) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = seconds_since(t0);
    bool in_time = s < c.limit;
    bool pass = o.pass && in_time;
    if (!pass) failed.insert(c.id);
    std::printf("%s  C%02d  %-56s %7.2f s (limit %g s, exact equality)%s\n", pass ? "PASS" : "FAIL", c.id, c.title, s,
                c.limit, in_time ? "" : " TIMEOUT");
    std::printf("      %s\n", o.detail.c_str());
    std::fflush(stdout);
  }
  double total = seconds_since(start);
  bool total_ok = total < 600;
  if (!total_ok) failed.insert(13);
  std::printf("total %.1f s (limit 600 s): %s\n", total, total_ok ? "ok" : "exceeded");
  std::printf("%zu/%zu criteria pass", all.size() - failed.size(), all.size());
  if (failed == kKnownFailures) {
    std::printf("; the failing criterion checks a claim that is false as stated (see its line)\n");
    return 0;
  }
  std::printf("; unexpected result\n");
  return 1;
}
