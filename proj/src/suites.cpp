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

#include "rba/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "rba/bialgebra.hpp"
#include "rba/dendriform.hpp"
#include "rba/io.hpp"
#include "rba/linalg.hpp"
#include "rba/samples.hpp"

namespace rba {

bool SuiteResult::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

namespace {

using E = TensorElement;
using Show = std::function<std::string(const E&)>;
using Reports = std::vector<CheckReport>;
using Cases = std::vector<std::vector<E>>;

const std::vector<Scalar>& thetas() {
  static const std::vector<Scalar> t{Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(mpz_class(1), mpz_class(3))};
  return t;
}

const std::vector<Scalar>& double_thetas() {
  static const std::vector<Scalar> t{Scalar(1), Scalar(-1), Scalar(mpz_class(1), mpz_class(3))};
  return t;
}

/// Exhaustive sets and seeded random pools for one carrier.
struct Pools {
  std::vector<E> ex;    // unary and binary samples
  std::vector<E> ex3;   // ternary samples
  std::vector<E> rnd;   // binary random pool
  std::vector<E> rnd3;  // ternary random pool
  std::string ex_desc, ex3_desc, rnd_desc, rnd3_desc;
};

std::size_t elem_len(const E& x) {
  std::size_t l = 0;
  for (const auto& [w, c] : x) l = std::max(l, w.length());
  return l;
}

// Ternary samples are bounded by total length: product sizes grow with it.
constexpr std::size_t kTernaryTotal = 4;

Cases tuples(const Pools& p, std::size_t arity, std::size_t cases) {
  Cases out = all_tuples(arity == 3 ? p.ex3 : p.ex, arity);
  if (arity == 3)
    std::erase_if(out, [](const std::vector<E>& t) { return elem_len(t[0]) + elem_len(t[1]) + elem_len(t[2]) > kTernaryTotal; });
  const auto& pool = arity == 3 ? p.rnd3 : p.rnd;
  auto rnd = chunk_tuples(pool, arity);
  if (rnd.size() > cases) rnd.resize(cases);
  out.insert(out.end(), rnd.begin(), rnd.end());
  return out;
}

std::string describe(const Pools& p, std::size_t arity, std::size_t cases) {
  return "exhaustive " + (arity == 3 ? p.ex3_desc : p.ex_desc) + " + random " + std::to_string(cases) + " " +
         (arity == 3 ? p.rnd3_desc : p.rnd_desc);
}

struct Fixture {
  BaseAlgebra base;
  Show show;
  Pools T;  // T(A), empty word included
  Pools P;  // T⁺(A)
};

Pools make_pools(Mode mode, const std::vector<Monomial>& ex_letters, const std::vector<Monomial>& rnd_letters,
                 unsigned min_len, const SuiteConfig& cfg, SampleRng& rng, const std::string& alphabet) {
  Pools p;
  unsigned ex3_len = std::min(2u, cfg.max_len);
  unsigned rnd3_len = std::min(2u, cfg.random_len);
  p.ex = as_elements(mode, words_over(ex_letters, min_len, cfg.max_len));
  p.ex3 = as_elements(mode, words_over(ex_letters, min_len, ex3_len));
  p.rnd = random_pool(rng, mode, rnd_letters, min_len, cfg.random_len, 2 * cfg.cases);
  p.rnd3 = random_pool(rng, mode, rnd_letters, min_len, rnd3_len, 3 * cfg.cases);
  std::string lo = std::to_string(min_len);
  p.ex_desc = "words " + alphabet + " len " + lo + ".." + std::to_string(cfg.max_len);
  p.ex3_desc = "words " + alphabet + " len " + lo + ".." + std::to_string(ex3_len) + ", total len <= 4";
  p.rnd_desc = "seed " + std::to_string(cfg.seed) + " len<=" + std::to_string(cfg.random_len);
  p.rnd3_desc = "seed " + std::to_string(cfg.seed) + " len<=" + std::to_string(rnd3_len);
  return p;
}

Fixture make_fixture(Mode mode, const SuiteConfig& cfg) {
  BaseAlgebra base(mode, {{"a"}, {"b"}, {"c"}});
  Monomial one, a = base.gen("a"), b = base.gen("b"), c = base.gen("c");
  std::vector<Monomial> ex{one, a, b};
  std::vector<Monomial> rnd{one, a, b, c, mono_mul(mode, a, a), mono_mul(mode, a, b)};
  if (mode == Mode::noncommutative) rnd.push_back(mono_mul(mode, b, a));
  SampleRng rng(cfg.seed);
  Fixture f{base, [base](const E& x) { return format_tensor(base, x); }, {}, {}};
  f.T = make_pools(mode, ex, rnd, 0, cfg, rng, "{1,a,b}");
  f.P = make_pools(mode, ex, rnd, 1, cfg, rng, "{1,a,b}");
  return f;
}

std::string mode_suffix(Mode m) { return m == Mode::noncommutative ? " noncomm" : ""; }

TensorAlgebra algebra(const Fixture& f, const Ambient& amb, const Operator& op) {
  auto a = operated(amb, op, f.show);
  a.name += mode_suffix(f.base.mode());
  return a;
}

Ambient ambient(const ProductKind& k, Mode m, bool plus) { return plus ? Ambient::plus(k, m) : Ambient::tensor(k, m); }

template <class I, class O>
void run(Reports& out, const Law<I, O>& law, const std::string& op, const std::string& amb, const Pools& pools,
         const SuiteConfig& cfg, const std::function<std::string(const I&)>& show_in,
         const std::function<std::string(const O&)>& show_out, bool expect = true) {
  auto rep = check_law(law, op, amb, tuples(pools, law.arity, cfg.cases), describe(pools, law.arity, cfg.cases),
                       show_in, show_out);
  rep.expect_pass = expect;
  out.push_back(std::move(rep));
}

void run(Reports& out, const Law<E>& law, const TensorAlgebra& A, const Pools& pools, const SuiteConfig& cfg,
         bool expect = true) {
  run<E, E>(out, law, A.op_name, A.name, pools, cfg, A.show, A.show, expect);
}

/// Both halves of the average-operator identity as one law.
Law<E, std::array<E, 2>> law_average(const TensorAlgebra& A) {
  return {"average", 2, [A](const std::vector<E>& s) {
            E l = A.mul(A.op(s[0]), A.op(s[1]));
            return std::pair{std::array<E, 2>{l, l},
                             std::array<E, 2>{A.op(A.mul(s[0], A.op(s[1]))), A.op(A.mul(A.op(s[0]), s[1]))}};
          }};
}

void run_average(Reports& out, const TensorAlgebra& A, const Pools& pools, const SuiteConfig& cfg, bool expect) {
  std::function<std::string(const std::array<E, 2>&)> show2 = [A](const std::array<E, 2>& v) {
    return "[" + A.show(v[0]) + " ; " + A.show(v[1]) + "]";
  };
  run<E, std::array<E, 2>>(out, law_average(A), A.op_name, A.name, pools, cfg, A.show, show2, expect);
}

// P(1)P(x) = P²(x) = P(x)P(1) on TD ambients.
void run_td_center(Reports& out, const TensorAlgebra& A, const Pools& pools, const SuiteConfig& cfg) {
  Law<E> left{"td.center.left", 1, [A](const std::vector<E>& s) {
                return std::pair{A.mul(A.op(A.unit), A.op(s[0])), A.op(A.op(s[0]))};
              }};
  Law<E> right{"td.center.right", 1, [A](const std::vector<E>& s) {
                 return std::pair{A.mul(A.op(s[0]), A.op(A.unit)), A.op(A.op(s[0]))};
               }};
  run(out, left, A, pools, cfg);
  run(out, right, A, pools, cfg);
}

const std::array<Mode, 2> kModes{Mode::commutative, Mode::noncommutative};

// ---------------------------------------------------------------- operators

void suite_rb(const SuiteConfig& cfg, Reports& out) {
  if (cfg.product) {
    Fixture f = make_fixture(cfg.mode, cfg);
    for (bool plus : {false, true}) {
      auto A = algebra(f, ambient(*cfg.product, cfg.mode, plus), op_P());
      run(out, law_rota_baxter(A, cfg.theta * A.unit, "rota_baxter(" + to_string(cfg.theta) + ")"), A,
          plus ? f.P : f.T, cfg);
    }
    return;
  }
  for (Mode mode : kModes) {
    Fixture f = make_fixture(mode, cfg);
    for (const auto& th : thetas())
      for (bool plus : {false, true}) {
        auto A = algebra(f, ambient(ProductKind::qsh(th), mode, plus), op_P());
        run(out, law_rota_baxter(A, th * A.unit, "rota_baxter(" + to_string(th) + ")"), A, plus ? f.P : f.T, cfg);
      }
    // P^(u) on (T(V), sh): words in the letters of V, prefixing u.
    SampleRng rng(cfg.seed);
    Monomial a = f.base.gen("a"), b = f.base.gen("b"), c = f.base.gen("c");
    Pools V = make_pools(mode, {a, b}, {a, b, c}, 0, cfg, rng, "{a,b}");
    for (const auto& u : {c, a}) {
      auto A = algebra(f, Ambient::tensor(ProductKind::sh(), mode), op_letter(u, "P^(" + f.base.format(u) + ")"));
      run(out, law_rota_baxter(A, E(mode), "rota_baxter(0)"), A, V, cfg);
    }
    if (mode == Mode::commutative) {
      for (bool plus : {false, true}) {
        auto A = algebra(f, ambient(ProductKind::rsh(), mode, plus), op_P());
        run(out, law_rota_baxter(A, A.unit, "rota_baxter(1) [negative control]"), A, plus ? f.P : f.T, cfg, false);
      }
    }
  }
}

void suite_nijenhuis(const SuiteConfig& cfg, Reports& out);
void suite_square_nijenhuis(const SuiteConfig& cfg, Reports& out);

void suite_nijenhuis(const SuiteConfig& cfg, Reports& out) {
  if (cfg.product) {
    Fixture f = make_fixture(cfg.mode, cfg);
    for (bool plus : {false, true}) {
      auto A = algebra(f, ambient(*cfg.product, cfg.mode, plus), op_P());
      run(out, law_nijenhuis(A), A, plus ? f.P : f.T, cfg);
    }
    return;
  }
  for (Mode mode : kModes) {
    Fixture f = make_fixture(mode, cfg);
    for (auto [kind, plus] : {std::pair{ProductKind::rsh(), false}, std::pair{ProductKind::rsh(), true},
                              std::pair{ProductKind::lsh(), false}}) {
      auto A = algebra(f, ambient(kind, mode, plus), op_P());
      run(out, law_nijenhuis(A), A, plus ? f.P : f.T, cfg);
    }
  }
  suite_square_nijenhuis(cfg, out);
}

void suite_td(const SuiteConfig& cfg, Reports& out) {
  if (cfg.product) {
    Fixture f = make_fixture(cfg.mode, cfg);
    for (bool plus : {false, true}) {
      auto A = algebra(f, ambient(*cfg.product, cfg.mode, plus), op_P());
      run(out, law_td(A), A, plus ? f.P : f.T, cfg);
    }
    return;
  }
  for (Mode mode : kModes) {
    Fixture f = make_fixture(mode, cfg);
    struct Claim {
      ProductKind kind;
      bool plus;
      Operator op;
    };
    for (const auto& c : {Claim{ProductKind::lsh(), false, op_P()}, Claim{ProductKind::lsh(), true, op_P()},
                          Claim{ProductKind::rsh(), true, op_Q()}}) {
      auto A = algebra(f, ambient(c.kind, mode, c.plus), c.op);
      run(out, law_td(A), A, c.plus ? f.P : f.T, cfg);
      run_td_center(out, A, c.plus ? f.P : f.T, cfg);
    }
  }
}

void suite_average(const SuiteConfig& cfg, Reports& out) {
  if (cfg.product) {
    Fixture f = make_fixture(cfg.mode, cfg);
    run_average(out, algebra(f, Ambient::tensor(*cfg.product, cfg.mode), op_P()), f.T, cfg, true);
    return;
  }
  for (Mode mode : kModes) {
    Fixture f = make_fixture(mode, cfg);
    run_average(out, algebra(f, Ambient::tensor(ProductKind::lsh(), mode), op_P()), f.T, cfg, true);
  }
  // On T⁺ the extended product breaks the averaging property.
  Fixture f = make_fixture(Mode::commutative, cfg);
  auto A = algebra(f, Ambient::plus(ProductKind::lsh(), Mode::commutative), op_P());
  A.name += " [negative control]";
  run_average(out, A, f.P, cfg, false);
}

void suite_conjugates(const SuiteConfig& cfg, Reports& out) {
  std::vector<Mode> modes = cfg.product ? std::vector<Mode>{cfg.mode} : std::vector<Mode>{kModes.begin(), kModes.end()};
  for (Mode mode : modes) {
    Fixture f = make_fixture(mode, cfg);
    if (cfg.product) {
      for (bool plus : {false, true}) {
        Ambient amb = ambient(*cfg.product, mode, plus);
        const Pools& pools = plus ? f.P : f.T;
        auto R = algebra(f, amb, conjugate_rb(op_P(), cfg.theta));
        run(out, law_rota_baxter(R, cfg.theta * R.unit, "rota_baxter(" + to_string(cfg.theta) + ")"), R, pools, cfg);
        auto N = algebra(f, amb, conjugate_nij(op_P()));
        run(out, law_nijenhuis(N), N, pools, cfg);
        auto T = algebra(f, amb, conjugate_td(op_P(), amb));
        run(out, law_nijenhuis(T), T, pools, cfg);
      }
      continue;
    }
    for (const auto& th : thetas())
      for (bool plus : {false, true}) {
        Ambient amb = ambient(ProductKind::qsh(th), mode, plus);
        auto R = algebra(f, amb, conjugate_rb(op_P(), th));
        run(out, law_rota_baxter(R, th * R.unit, "rota_baxter(" + to_string(th) + ")"), R, plus ? f.P : f.T, cfg);
      }
    for (auto [kind, plus] : {std::pair{ProductKind::rsh(), false}, std::pair{ProductKind::rsh(), true},
                              std::pair{ProductKind::lsh(), false}}) {
      auto N = algebra(f, ambient(kind, mode, plus), conjugate_nij(op_P()));
      run(out, law_nijenhuis(N), N, plus ? f.P : f.T, cfg);
    }
    struct Claim {
      ProductKind kind;
      bool plus;
      Operator op;
    };
    for (const auto& c : {Claim{ProductKind::rsh(), true, op_Q()}, Claim{ProductKind::lsh(), true, op_P()},
                          Claim{ProductKind::lsh(), false, op_P()}}) {
      Ambient amb = ambient(c.kind, mode, c.plus);
      auto T = algebra(f, amb, conjugate_td(c.op, amb));
      run(out, law_nijenhuis(T), T, c.plus ? f.P : f.T, cfg);
    }
  }
}

void suite_double(const SuiteConfig& cfg, Reports& out) {
  for (Mode mode : kModes) {
    Fixture f = make_fixture(mode, cfg);
    for (const auto& th : double_thetas())
      for (bool plus : {false, true}) {
        const Pools& pools = plus ? f.P : f.T;
        auto A = algebra(f, ambient(ProductKind::qsh(th), mode, plus), op_P());
        auto D = double_algebra(DoubleFlavor::star_R, A, th);
        run(out, law_associative<E>("*R associative", D.mul), D, pools, cfg);
        run(out, law_operator_homomorphism<E>("R(a*Rb) = R(a)R(b)", A, D.mul, A.op), A, pools, cfg);
        run(out, law_rota_baxter_scalar(D, th, "(A_R,R) rota_baxter(" + to_string(th) + ")"), D, pools, cfg);
        Operator Rt = conjugate_rb(op_P(), th);
        run(out, law_operator_homomorphism<E>("R~(a*Rb) = -R~(a)R~(b)", A, D.mul, Rt, -1), A, pools, cfg);
      }
    for (auto [kind, plus] : {std::pair{ProductKind::rsh(), false}, std::pair{ProductKind::rsh(), true},
                              std::pair{ProductKind::lsh(), false}}) {
      const Pools& pools = plus ? f.P : f.T;
      auto A = algebra(f, ambient(kind, mode, plus), op_P());
      auto D = double_algebra(DoubleFlavor::star_N, A);
      Operator Nt = conjugate_nij(op_P());
      run(out, law_associative<E>("*N associative", D.mul), D, pools, cfg);
      run(out, law_operator_homomorphism<E>("N(a*Nb) = N(a)N(b)", A, D.mul, A.op), A, pools, cfg);
      run(out, law_nijenhuis(D), D, pools, cfg);
      Law<E> corrected{"N~(a*Nb) = N~(ab) - N~(a)N~(b)", 2, [A, D, Nt](const std::vector<E>& s) {
                         return std::pair{Nt(D.mul(s[0], s[1])), Nt(A.mul(s[0], s[1])) - A.mul(Nt(s[0]), Nt(s[1]))};
                       }};
      run(out, corrected, A, pools, cfg);
      // The anti-homomorphism form with no N~(ab) term does not hold; it is
      // kept as a control that the checker refutes it.
      auto stated = law_operator_homomorphism<E>("N~(a*Nb) = -N~(a)N~(b) [refuted]", A, D.mul, Nt, -1);
      run(out, stated, A, pools, cfg, false);
    }
    struct Claim {
      ProductKind kind;
      bool plus;
      Operator op;
    };
    for (const auto& c : {Claim{ProductKind::lsh(), false, op_P()}, Claim{ProductKind::lsh(), true, op_P()},
                          Claim{ProductKind::rsh(), true, op_Q()}}) {
      const Pools& pools = c.plus ? f.P : f.T;
      auto A = algebra(f, ambient(c.kind, mode, c.plus), c.op);
      auto D = double_algebra(DoubleFlavor::star_P, A);
      run(out, law_associative<E>("*P associative", D.mul), D, pools, cfg);
      run(out, law_nijenhuis(D), D, pools, cfg);
    }
  }
}

void suite_spitzer(const SuiteConfig& cfg, Reports& out) {
  BaseAlgebra base(Mode::commutative, {{"x"}, {"y"}});
  std::vector<Scalar> ths{Scalar(0), Scalar(1), Scalar(-2), Scalar(mpz_class(1), mpz_class(3))};
  if (cfg.product && cfg.product->tag == ProductTag::qsh) ths = {cfg.product->theta};
  for (const auto& a : {std::string("(x)"), std::string("(x|y)"), std::string("2*(x) - (1|y)")}) {
    TensorElement x = parse_tensor(base, a);
    for (const auto& th : ths) {
      out.push_back(spitzer_verify(base, th, x, cfg.spitzer_order));
      auto sides = spitzer_sides(th, x, cfg.spitzer_order);
      CheckReport oracle{"spitzer.partition_sum", "P_A", ProductKind::qsh(th).name() + "+",
                         "order " + std::to_string(cfg.spitzer_order)};
      for (std::size_t m = 1; m <= cfg.spitzer_order; ++m) {
        ++oracle.samples;
        if (!(sides.partition_oracle[m] == sides.rhs[m])) {
          oracle.pass = false;
          oracle.counterexample = Counterexample{{a, "m=" + std::to_string(m)},
                                                 format_tensor(base, sides.partition_oracle[m]),
                                                 format_tensor(base, sides.rhs[m])};
          break;
        }
      }
      out.push_back(std::move(oracle));
    }
  }
}

// --------------------------------------------------------------- shuffles

std::vector<std::pair<Word, Word>> distinct_letter_pairs(const BaseAlgebra& base, unsigned total) {
  std::vector<std::pair<Word, Word>> out;
  for (unsigned m = 0; m <= total; ++m)
    for (unsigned n = 0; m + n <= total; ++n) {
      std::vector<Monomial> u, v;
      for (unsigned i = 0; i < m; ++i) u.push_back(base.gen("x" + std::to_string(i + 1)));
      for (unsigned j = 0; j < n; ++j) v.push_back(base.gen("y" + std::to_string(j + 1)));
      out.emplace_back(Word(u), Word(v));
    }
  return out;
}

BaseAlgebra distinct_base(Mode mode, unsigned total) {
  std::vector<Generator> g;
  for (unsigned i = 1; i <= total; ++i) {
    g.push_back({"x" + std::to_string(i)});
    g.push_back({"y" + std::to_string(i)});
  }
  return BaseAlgebra(mode, g);
}

std::vector<ProductKind> four_kinds() {
  return {ProductKind::sh(), ProductKind::qsh(2), ProductKind::qsh(mpz_class(-1)), ProductKind::rsh(), ProductKind::lsh()};
}

void suite_differential(const SuiteConfig& cfg, Reports& out) {
  const unsigned total = 6;
  for (Mode mode : kModes) {
    BaseAlgebra base = distinct_base(mode, total);
    auto pairs = distinct_letter_pairs(base, total);
    Fixture f = make_fixture(mode, cfg);
    auto small = words_over({Monomial(), f.base.gen("a"), f.base.gen("b"), mono_mul(mode, f.base.gen("a"), f.base.gen("b"))}, 0, 2);
    for (const auto& kind : four_kinds()) {
      CheckReport rep{"recursive = combinatorial", "-", kind.name() + mode_suffix(mode),
                      "distinct-letter word pairs, total length <= 6; words over {1,a,b,ab} len <= 2"};
      RecursiveProduct engine(kind, mode);
      auto compare = [&](const BaseAlgebra& B, const Word& u, const Word& v) {
        ++rep.samples;
        E x = word_element(mode, u), y = word_element(mode, v);
        E lhs = engine(x, y), rhs = product_combinatorial(kind, x, y);
        if (!(lhs == rhs)) {
          rep.pass = false;
          rep.counterexample = Counterexample{{format_tensor(B, x), format_tensor(B, y)}, format_tensor(B, lhs), format_tensor(B, rhs)};
        }
        return rep.pass;
      };
      for (const auto& [u, v] : pairs)
        if (!compare(base, u, v)) break;
      if (rep.pass)
        for (const auto& u : small)
          for (const auto& v : small)
            if (rep.pass) compare(f.base, u, v);
      out.push_back(std::move(rep));
    }
  }
}

void suite_shuffle(const SuiteConfig& cfg, Reports& out) {
  for (Mode mode : kModes) {
    BaseAlgebra dbase = distinct_base(mode, 6);
    Fixture f = make_fixture(mode, cfg);
    for (const auto& kind : four_kinds()) {
      RecursiveProduct engine(kind, mode);
      std::string amb = kind.name() + mode_suffix(mode);
      // Term counts and grading on distinct-letter words.
      CheckReport counts{"term count and grading", "-", amb, "distinct-letter word pairs, total length <= 6"};
      for (const auto& [u, v] : distinct_letter_pairs(dbase, 6)) {
        ++counts.samples;
        E r = engine(word_element(mode, u), word_element(mode, v));
        auto m = static_cast<unsigned>(u.length()), n = static_cast<unsigned>(v.length());
        bool good = r.size() == expected_term_count(kind, m, n);
        for (const auto& [w, c] : r) {
          if (kind.tag == ProductTag::qsh) {
            good = good && w.length() >= std::max(m, n) && w.length() <= m + n;
          } else {
            good = good && w.length() == m + n;
          }
        }
        if (!good) {
          counts.pass = false;
          counts.counterexample = Counterexample{{format_word(dbase, u), format_word(dbase, v)},
                                                 std::to_string(r.size()) + " terms",
                                                 std::to_string(expected_term_count(kind, m, n)) + " expected"};
          break;
        }
      }
      out.push_back(std::move(counts));

      TensorAlgebra A{amb, "-", [&engine](const E& x, const E& y) { return engine(x, y); }, {}, scalar_element(mode, 1), f.show};
      Pools assoc = f.T;
      assoc.rnd3 = f.T.rnd3;
      run(out, law_associative<E>("associative", A.mul), A, assoc, cfg);
      Law<E> unit{"1_K unit", 1, [A, mode](const std::vector<E>& s) {
                    return std::pair{A.mul(scalar_element(mode, 1), s[0]), A.mul(s[0], scalar_element(mode, 1))};
                  }};
      run(out, unit, A, f.T, cfg);
      if (mode == Mode::commutative) run(out, law_commutative<E>("commutative", A.mul), A, f.T, cfg);
      if (mode == Mode::commutative && kind.tag == ProductTag::qsh && kind.theta == 2) {
        RecursiveProduct zero(ProductKind::qsh(0), mode), sh(ProductKind::sh(), mode);
        Law<E> same{"qsh(0) = sh", 2, [&zero, &sh](const std::vector<E>& s) { return std::pair{zero(s[0], s[1]), sh(s[0], s[1])}; }};
        run(out, same, A, f.T, cfg);
      }

      // Extended product on T⁺.
      TensorAlgebra B{amb + "+", "-", [&engine](const E& x, const E& y) { return engine.plus(x, y); }, {},
                      letter_element(mode, Monomial()), f.show};
      run(out, law_associative<E>("extended associative", B.mul), B, f.P, cfg);
      Law<E> bunit{"(1) unit", 1, [B](const std::vector<E>& s) {
                     return std::pair{B.mul(B.unit, s[0]), B.mul(s[0], B.unit)};
                   }};
      run(out, bunit, B, f.P, cfg);
      if (mode == Mode::commutative) run(out, law_commutative<E>("extended commutative", B.mul), B, f.P, cfg);
    }

    // Noncommutativity is detected: a•b != b•a for ab != ba.
    if (mode == Mode::noncommutative) {
      for (const auto& kind : {ProductKind::lsh(), ProductKind::rsh(), ProductKind::qsh(1)}) {
        E a = letter_element(mode, f.base.gen("a")), b = letter_element(mode, f.base.gen("b"));
        CheckReport rep{"a*b != b*a", "-", kind.name() + " noncomm", "letters a, b"};
        rep.samples = 2;
        rep.pass = !(product_recursive(kind, a, b) == product_recursive(kind, b, a)) &&
                   !(product_plus(kind, a, b) == product_plus(kind, b, a));
        out.push_back(std::move(rep));
      }
    }

    // Unit-word laws: X•^ℓ1^n = 1^n⊗X = 1^n•^ℓX and X•^r1^n = X⊗1^n = 1^n•^rX.
    auto words3 = as_elements(mode, words_over({Monomial(), f.base.gen("a"), f.base.gen("b")}, 0, 3));
    for (const auto& kind : {ProductKind::lsh(), ProductKind::rsh()}) {
      CheckReport rep{kind.tag == ProductTag::lsh ? "X*1^n = 1^n|X = 1^n*X" : "X*1^n = X|1^n = 1^n*X", "-",
                      kind.name() + mode_suffix(mode), "n <= 3, |X| <= 3 over {1,a,b}"};
      RecursiveProduct engine(kind, mode);
      for (std::size_t n = 1; n <= 3 && rep.pass; ++n) {
        E u = word_element(mode, unit_word(n));
        for (const auto& x : words3) {
          ++rep.samples;
          E cat = kind.tag == ProductTag::lsh ? tensor_concat(u, x) : tensor_concat(x, u);
          E l = engine(x, u), r = engine(u, x);
          if (!(l == cat) || !(r == cat)) {
            rep.pass = false;
            rep.counterexample = Counterexample{{f.show(x), f.show(u)}, f.show(l), f.show(cat)};
            break;
          }
        }
      }
      out.push_back(std::move(rep));
    }
  }
}

// ------------------------------------------------------------ dendriform

void suite_tridend(const SuiteConfig& cfg, Reports& out) {
  for (Mode mode : kModes) {
    Fixture f = make_fixture(mode, cfg);
    SampleRng rng(cfg.seed);
    Monomial a = f.base.gen("a"), b = f.base.gen("b");
    std::vector<Monomial> qletters{a, b, mono_mul(mode, a, b)};
    std::vector<Monomial> qrnd{a, b, f.base.gen("c"), mono_mul(mode, a, b), mono_mul(mode, a, a)};
    Pools Q = make_pools(mode, qletters, qrnd, 1, cfg, rng, "{a,b,ab}");

    for (Carrier car : {Carrier::plus_lsh, Carrier::qone}) {
      Tridendriform T = car == Carrier::plus_lsh ? Tridendriform::plus_lsh(mode) : Tridendriform::qone(mode);
      const Pools& pools = car == Carrier::plus_lsh ? f.P : Q;
      std::string amb = std::string(carrier_name(car)) + mode_suffix(mode);
      TensorAlgebra view{amb, "tridend", {}, {}, E(mode), f.show};
      for (const auto& law : tridend_laws(T, mode == Mode::commutative)) run(out, law, view, pools, cfg);
      auto star = [T](const E& x, const E& y) { return T.star(x, y); };
      run(out, law_associative<E>("star associative", star), view, pools, cfg);
      if (car == Carrier::plus_lsh) {
        auto A = algebra(f, T.ambient(), op_P());
        Law<E> starP{"star = *P", 2, [T, A](const std::vector<E>& s) {
                       return std::pair{T.star(s[0], s[1]), double_product(DoubleFlavor::star_P, A, s[0], s[1])};
                     }};
        run(out, starP, view, pools, cfg);
        // Negative control: flipping the sign of the dot product.
        Tridendriform bad = T.with_flipped_dot();
        CheckReport neg{"tridend axioms with flipped dot [negative control]", "tridend", amb,
                        describe(pools, 3, cfg.cases)};
        neg.expect_pass = false;
        for (const auto& law : tridend_laws(bad, false)) {
          auto r = check_law(law, view, tuples(pools, 3, cfg.cases), neg.policy);
          neg.samples += r.samples;
          if (!r.pass) {
            neg.pass = false;
            neg.counterexample = r.counterexample;
            neg.identity += ": " + law.name;
            break;
          }
        }
        out.push_back(std::move(neg));
      } else {
        Law<E> starq{"star = qsh(1)", 2, [T](const std::vector<E>& s) {
                       return std::pair{T.star(s[0], s[1]), T.ambient().mul(s[0], s[1])};
                     }};
        run(out, starq, view, pools, cfg);
      }
    }
  }
}

std::vector<Word> qone_words_up_to_degree(const BaseAlgebra& base, unsigned max_degree) {
  std::vector<Monomial> letters;
  for (const auto& m : monomials_up_to(base, max_degree))
    if (!m.is_unit()) letters.push_back(m);
  std::vector<Word> out;
  std::vector<Monomial> cur;
  std::function<void(unsigned)> grow = [&](unsigned budget) {
    for (const auto& m : letters) {
      if (m.degree() > budget) continue;
      cur.push_back(m);
      out.emplace_back(cur);
      grow(budget - static_cast<unsigned>(m.degree()));
      cur.pop_back();
    }
  };
  grow(max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

void suite_omega(const SuiteConfig& cfg, Reports& out) {
  (void)cfg;
  for (Mode mode : kModes) {
    BaseAlgebra base(mode, {{"a"}, {"b"}});
    Show show = [base](const E& x) { return format_tensor(base, x); };
    Tridendriform Q = Tridendriform::qone(mode), L = Tridendriform::plus_lsh(mode);
    auto words = qone_words_up_to_degree(base, 3);
    for (TriOp op : {TriOp::prec, TriOp::succ, TriOp::dot}) {
      CheckReport rep{std::string("Ω(x ") + triop_name(op) + "1 y) = Ω(x) " + triop_name(op) + " Ω(y)", "Ω",
                      std::string("qone -> plus_lsh") + mode_suffix(mode), "all word pairs, total letter-degree <= 4, 2 generators"};
      for (const auto& u : words) {
        for (const auto& v : words) {
          if (u.degree() + v.degree() > 4) continue;
          ++rep.samples;
          E x = word_element(mode, u), y = word_element(mode, v);
          E lhs = omega(Q.apply(op, x, y)), rhs = L.apply(op, omega(x), omega(y));
          if (!(lhs == rhs)) {
            rep.pass = false;
            rep.counterexample = Counterexample{{show(x), show(y)}, show(lhs), show(rhs)};
            break;
          }
        }
        if (!rep.pass) break;
      }
      out.push_back(std::move(rep));
    }
    // Injectivity on basis words: images are distinct signed basis words.
    CheckReport inj{"Ω injective on basis words", "Ω", std::string("qone") + mode_suffix(mode), "words of letter-degree <= 5"};
    std::map<Word, Word> seen;
    for (const auto& w : qone_words_up_to_degree(base, 5)) {
      ++inj.samples;
      E img = omega(word_element(mode, w));
      bool single = img.size() == 1 && (img.begin()->second == 1 || img.begin()->second == -1);
      auto [it, fresh] = seen.emplace(img.begin()->first, w);
      if (!single || !fresh) {
        inj.pass = false;
        inj.counterexample = Counterexample{{format_word(base, w)}, show(img), fresh ? "not a signed basis word" : format_word(base, it->second)};
        break;
      }
    }
    out.push_back(std::move(inj));
    CheckReport rt{"omega_decompose round trip", "Ω", std::string("qone") + mode_suffix(mode), "words of letter-degree <= 5"};
    for (const auto& w : qone_words_up_to_degree(base, 5)) {
      ++rt.samples;
      E back = evaluate_tree(Q, *omega_decompose(w));
      if (!(back == word_element(mode, w))) {
        rt.pass = false;
        rt.counterexample = Counterexample{{format_word(base, w)}, show(back), format_word(base, w)};
        break;
      }
    }
    out.push_back(std::move(rt));
  }
}

// ------------------------------------------------------------ involution

void suite_involution(const SuiteConfig& cfg, Reports& out) {
  // Commutative base with pairing a <-> b.
  BaseAlgebra base = BaseAlgebra::parse_declaration(Mode::commutative, "a=b,b=a,c");
  const Mode mode = base.mode();
  Show show = [base](const E& x) { return format_tensor(base, x); };
  auto dag = [base](const E& x) { return involution_extend(base, x); };
  SampleRng rng(cfg.seed);
  Monomial one, a = base.gen("a"), b = base.gen("b"), c = base.gen("c");
  std::vector<Monomial> rl{one, a, b, c, mono_mul(mode, a, a), mono_mul(mode, a, c)};
  Pools P = make_pools(mode, {one, a, b}, rl, 1, cfg, rng, "{1,a,b}");

  Law<E> invol{"X†† = X", 1, [dag](const std::vector<E>& s) { return std::pair{dag(dag(s[0])), s[0]}; }};
  TensorAlgebra view{"T⁺ pairing a<->b", "†", {}, {}, E(mode), show};
  run(out, invol, view, P, cfg);
  for (const auto& kind : {ProductKind::qsh(1), ProductKind::qsh(mpz_class(-2)), ProductKind::rsh(), ProductKind::lsh()}) {
    Ambient amb = Ambient::plus(kind, mode);
    auto A = operated(amb, op_P(), show);
    A.name += " pairing a<->b";
    Law<E> mul{"(XY)† = X†Y†", 2, [A, dag](const std::vector<E>& s) {
                 return std::pair{dag(A.mul(s[0], s[1])), A.mul(dag(s[0]), dag(s[1]))};
               }};
    run(out, mul, A, P, cfg);
    Law<E> shift{"P(U)† = P(U†)", 1, [dag](const std::vector<E>& s) { return std::pair{dag(shift_right(s[0])), shift_right(dag(s[0]))}; }};
    run(out, shift, A, P, cfg);
    // A lift of an involution-compatible φ commutes with †.
    std::vector<E> images{parse_tensor(base, "(a) + (1|b)"), parse_tensor(base, "(b) + (1|a)"), parse_tensor(base, "2*(c) - (c|c)")};
    Operator lift = lift_morphism(base, amb, images, "φ~");
    Law<E> lifted{"φ~(X†) = φ~(X)†", 1, [lift, dag](const std::vector<E>& s) { return std::pair{lift(dag(s[0])), dag(lift(s[0]))}; }};
    TensorAlgebra LA = A;
    LA.op_name = "φ~";
    run(out, lifted, LA, P, cfg);
  }
  // Involutive commutative tridendriform laws on plus_lsh.
  {
    Tridendriform T = Tridendriform::plus_lsh(mode);
    TensorAlgebra tv{"plus_lsh pairing a<->b", "†", {}, {}, E(mode), show};
    for (TriOp op : {TriOp::prec, TriOp::succ, TriOp::dot}) {
      Law<E> law{std::string("(X ") + triop_name(op) + " Y)† = X† " + triop_name(op) + " Y†", 2,
                 [T, dag, op](const std::vector<E>& s) {
                   return std::pair{dag(T.apply(op, s[0], s[1])), T.apply(op, dag(s[0]), dag(s[1]))};
                 }};
      run(out, law, tv, P, cfg);
    }
  }
  // Noncommutative letters: (x≺₁y)† = y†≻₁x†, (x•₁y)† = y†•₁x†.
  for (const char* decl : {"a,b", "a=b,b=a"}) {
    BaseAlgebra nb = BaseAlgebra::parse_declaration(Mode::noncommutative, decl);
    Show nshow = [nb](const E& x) { return format_tensor(nb, x); };
    auto ndag = [nb](const E& x) { return involution_extend(nb, x); };
    Tridendriform Q = Tridendriform::qone(Mode::noncommutative);
    Monomial na = nb.gen("a"), nbg = nb.gen("b");
    SampleRng r2(cfg.seed);
    std::vector<Monomial> ql{na, nbg, mono_mul(Mode::noncommutative, na, nbg)};
    Pools QP = make_pools(Mode::noncommutative, ql, {na, nbg, mono_mul(Mode::noncommutative, na, nbg), mono_mul(Mode::noncommutative, nbg, na)}, 1, cfg, r2, "{a,b,ab}");
    TensorAlgebra qv{std::string("qone noncomm ") + decl, "†", {}, {}, E(Mode::noncommutative), nshow};
    Law<E> prec{"(x≺y)† = y†≻x†", 2, [Q, ndag](const std::vector<E>& s) {
                  return std::pair{ndag(Q.prec(s[0], s[1])), Q.succ(ndag(s[1]), ndag(s[0]))};
                }};
    Law<E> dot{"(x•y)† = y†•x†", 2, [Q, ndag](const std::vector<E>& s) {
                 return std::pair{ndag(Q.dot(s[0], s[1])), Q.dot(ndag(s[1]), ndag(s[0]))};
               }};
    run(out, prec, qv, QP, cfg);
    run(out, dot, qv, QP, cfg);
  }
  // Base algebra: anti-morphism in noncommutative mode, morphism otherwise.
  for (Mode m : kModes) {
    BaseAlgebra bb = BaseAlgebra::parse_declaration(m, "a=b,b=a,c");
    auto mons = monomials_up_to(bb, 3);
    CheckReport rep{m == Mode::commutative ? "(xy)† = x†y†" : "(xy)† = y†x†", "†", std::string("base") + mode_suffix(m),
                    "all monomial pairs of degree <= 3"};
    for (const auto& x : mons)
      for (const auto& y : mons) {
        if (!rep.pass) break;
        ++rep.samples;
        Monomial lhs = bb.involution(mono_mul(m, x, y));
        Monomial rhs = m == Mode::commutative ? mono_mul(m, bb.involution(x), bb.involution(y))
                                              : mono_mul(m, bb.involution(y), bb.involution(x));
        if (!(lhs == rhs) || !(bb.involution(bb.involution(x)) == x)) {
          rep.pass = false;
          rep.counterexample = Counterexample{{bb.format(x), bb.format(y)}, bb.format(lhs), bb.format(rhs)};
        }
      }
    out.push_back(std::move(rep));
  }
}

// ------------------------------------------------------------------ lift

void suite_lift(const SuiteConfig& cfg, Reports& out) {
  BaseAlgebra base(Mode::commutative, {{"a"}, {"b"}, {"c"}});
  const Mode mode = base.mode();
  Show show = [base](const E& x) { return format_tensor(base, x); };
  SampleRng rng(cfg.seed);
  Monomial one, a = base.gen("a"), b = base.gen("b"), c = base.gen("c");
  std::vector<Monomial> rl{one, a, b, c, mono_mul(mode, a, b)};
  Pools P = make_pools(mode, {one, a, b}, rl, 1, cfg, rng, "{1,a,b}");
  // Lifted morphisms grow quickly; single-term samples keep the check at desk scale.
  SampleRng rng1(cfg.seed);
  P.rnd = random_pool(rng1, mode, rl, 1, cfg.random_len, 2 * cfg.cases, 1);
  for (const auto& kind : {ProductKind::qsh(1), ProductKind::qsh(Scalar(mpz_class(1), mpz_class(3))), ProductKind::rsh(), ProductKind::lsh()}) {
    Ambient amb = Ambient::plus(kind, mode);
    auto A = operated(amb, op_P(), show);
    struct Phi {
      std::string name;
      std::vector<std::string> images;
    };
    // φ keeps word length; ψ raises it and is only checked on the exhaustive words.
    Pools Pshort = P;
    Pshort.ex = as_elements(mode, words_over({one, a, b}, 1, 2));
    Pshort.ex_desc = "words {1,a,b} len 1..2";
    Pshort.rnd.clear();
    Pshort.rnd_desc = "none";
    for (const auto& phi : {Phi{"i_A", {"(a)", "(b)", "(c)"}}, Phi{"a->b subst", {"(b)", "(c)", "(a)"}},
                            Phi{"φ", {"(a) + 2*(b)", "(a*b) - (c)", "1/2*(c) + (1)"}},
                            Phi{"ψ", {"(a) + (1|b)", "(b|a)", "(c)"}}}) {
      std::vector<E> images;
      for (const auto& s : phi.images) images.push_back(parse_tensor(base, s));
      Operator L = lift_morphism(base, amb, images, phi.name + "~");
      TensorAlgebra LA = A;
      LA.op_name = L.name();
      Law<E> morph{"φ~(XY) = φ~(X)φ~(Y)", 2, [A, L](const std::vector<E>& s) {
                     return std::pair{L(A.mul(s[0], s[1])), A.mul(L(s[0]), L(s[1]))};
                   }};
      Law<E> comm{"φ~P = Pφ~", 1, [L](const std::vector<E>& s) { return std::pair{L(shift_right(s[0])), shift_right(L(s[0]))}; }};
      const Pools& pools = phi.name == "ψ" ? Pshort : P;
      run(out, morph, LA, pools, cfg);
      run(out, comm, LA, pools, cfg);
      if (phi.name == "i_A") {
        Law<E> id{"i_A~ = id", 1, [L](const std::vector<E>& s) { return std::pair{L(s[0]), s[0]}; }};
        run(out, id, LA, P, cfg);
      }
      if (phi.name == "a->b subst") {
        std::vector<BaseElement> f{base.element(b), base.element(c), base.element(a)};
        Law<E> letterwise{"lift = letterwise substitution", 1, [L, base, f](const std::vector<E>& s) {
                            return std::pair{L(s[0]), lift_substitution(base, base, f, s[0])};
                          }};
        run(out, letterwise, LA, P, cfg);
      }
    }
  }
}

// ------------------------------------------------------------- bialgebra

void suite_bialg1(const SuiteConfig& cfg, Reports& out) {
  struct HCase {
    const char* label;
    const char* decl;
  };
  for (const auto& hc : {HCase{"H(primitive)", "h:primitive"}, HCase{"H(grouplike)", "g:grouplike"},
                         HCase{"H(grouplike+primitive)", "g:grouplike,h:primitive"}}) {
    BaseAlgebra H = BaseAlgebra::parse_declaration(Mode::commutative, hc.decl);
    const Mode mode = H.mode();
    Show show = [H](const E& x) { return format_tensor(H, x); };
    std::function<std::string(const TwoLeg&)> show2 = [H](const TwoLeg& x) { return format_two_leg(H, x); };
    std::function<std::string(const ThreeLeg&)> show3 = [H](const ThreeLeg& x) { return format_three_leg(H, x); };
    std::function<std::string(const Scalar&)> shows = [](const Scalar& s) { return to_string(s); };

    auto letters = monomials_up_to(H, 2);
    Pools P;
    P.ex = as_elements(mode, words_over(letters, 1, std::min(3u, cfg.max_len)));
    P.ex3 = {};
    P.ex_desc = "words over letters of degree <= 2, len 1.." + std::to_string(std::min(3u, cfg.max_len));
    SampleRng rng(cfg.seed);
    P.rnd = random_pool(rng, mode, letters, 1, 3, 2 * cfg.cases);
    P.rnd_desc = "seed " + std::to_string(cfg.seed) + " len<=3";
    Pools P2 = P;  // binary: exhaustive up to length 2
    P2.ex = as_elements(mode, words_over(letters, 1, 2));
    P2.ex_desc = "words over letters of degree <= 2, len 1..2";

    std::string amb = std::string("T⁺(") + hc.label + ")";
    auto un = [&](const std::string& name, auto fn) {
      using O = decltype(fn(std::declval<const E&>()).first);
      Law<E, O> law{name, 1, [fn](const std::vector<E>& s) { return fn(s[0]); }};
      return law;
    };

    run<E, ThreeLeg>(out, un("(Δ⊗id)Δ = (id⊗δ)Δ", [H](const E& x) {
                       TwoLeg d = delta_case1(H, x);
                       return std::pair{delta_case1_left(H, d), delta_case1_right(H, d)};
                     }), "Δ", amb, P, cfg, show, show3);
    run<E, E>(out, un("(id⊗ε)Δ = id", [H](const E& x) { return std::pair{counit_right_case1(H, delta_case1(H, x)), x}; }),
              "Δ", amb, P, cfg, show, show);

    for (const auto& kind : {ProductKind::qsh(1), ProductKind::qsh(mpz_class(-2)), ProductKind::rsh(), ProductKind::lsh()}) {
      Ambient plus = Ambient::plus(kind, mode);
      std::string ak = amb + " " + kind.name();
      run<E, E>(out, un("(ε⊗id)Δ = (-θ)^(n-1) h1⋯hn", [H, kind](const E& x) {
                  E expect(x.mode());
                  for (const auto& [w, c] : x) {
                    Monomial m;
                    for (const auto& h : w.letters()) m = mono_mul(x.mode(), m, h);
                    Scalar f = kind.tag == ProductTag::qsh ? power(Scalar(-kind.theta), static_cast<unsigned>(w.length() - 1)) : Scalar(1);
                    expect.add_term(Word({m}), c * f);
                  }
                  return std::pair{counit_left_case1(H, kind, delta_case1(H, x)), expect};
                }), "Δ", ak, P, cfg, show, show);
      Law<E, TwoLeg> dmorph{"Δ(XY) = Δ(X)Δ(Y)", 2, [H, plus](const std::vector<E>& s) {
                              return std::pair{delta_case1(H, plus.mul(s[0], s[1])),
                                               comodule_product(plus, delta_case1(H, s[0]), delta_case1(H, s[1]))};
                            }};
      run<E, TwoLeg>(out, dmorph, "Δ", ak, P2, cfg, show, show2);
      Law<E, Scalar> emorph{"ε(XY) = ε(X)ε(Y)", 2, [H, plus, kind](const std::vector<E>& s) {
                              return std::pair{counit_case1(H, kind, plus.mul(s[0], s[1])),
                                               Scalar(counit_case1(H, kind, s[0]) * counit_case1(H, kind, s[1]))};
                            }};
      run<E, Scalar>(out, emorph, "ε", ak, P2, cfg, show, shows);
      run<E, TwoLeg>(out, un("ΔP = (P⊗id)Δ", [H](const E& x) {
                       return std::pair{delta_case1(H, shift_right(x)), map_left_leg(delta_case1(H, x), shift_right)};
                     }), "Δ", ak, P, cfg, show, show2);
      run<E, Scalar>(out, un("εP = (-θ)ε or ε", [H, kind](const E& x) {
                       Scalar f = kind.tag == ProductTag::qsh ? Scalar(-kind.theta) : Scalar(1);
                       return std::pair{counit_case1(H, kind, shift_right(x)), Scalar(f * counit_case1(H, kind, x))};
                     }), "ε", ak, P, cfg, show, shows);
      // The closed form equals the lift of δ into the comodule target.
      OperatedAlgebra<TwoLeg> target{ak, "P⊗id",
                                     [plus](const TwoLeg& x, const TwoLeg& y) { return comodule_product(plus, x, y); },
                                     [](const TwoLeg& x) { return map_left_leg(x, shift_right); },
                                     TwoLeg::term(mode, {Word({Monomial()}), Word({Monomial()})}), show2};
      auto lift = std::make_shared<MorphismLift<TwoLeg>>(target, [H, mode](GenId g) {
        TwoLeg r(mode);
        for (const auto& [legs, c] : H.coproduct(Monomial::generator(g))) r.add_term({Word({legs[0]}), Word({legs[1]})}, c);
        return r;
      });
      run<E, TwoLeg>(out, un("Δ = lift of δ", [H, lift](const E& x) { return std::pair{delta_case1(H, x), (*lift)(x)}; }),
                     "Δ", ak, P, cfg, show, show2);
    }

    // Functor: f(g) = x^2 grouplike, f(h) = p + 2q primitive.
    BaseAlgebra H2 = BaseAlgebra::parse_declaration(Mode::commutative, "p:primitive,q:primitive,x:grouplike");
    std::vector<BaseElement> f;
    for (const auto& g : H.generators()) {
      if (g.rule == CoproductRule::grouplike) {
        f.push_back(H2.element(H2.monomial({"x", "x"})));
      } else {
        f.push_back(H2.element(H2.gen("p")) + Scalar(2) * H2.element(H2.gen("q")));
      }
    }
    std::function<std::string(const TwoLeg&)> show22 = [H2](const TwoLeg& x) { return format_two_leg(H2, x); };
    run<E, TwoLeg>(out, un("Δ2 F = (F⊗f) Δ1", [H, H2, f](const E& x) {
                     TwoLeg rhs(Mode::commutative);
                     for (const auto& [p, c] : delta_case1(H, x)) {
                       E left = lift_substitution(H, H2, f, word_element(Mode::commutative, p[0]));
                       E right = include_letters(substitute(H, H2, f, p[1].front()));
                       rhs.add_scaled(tensor_pair(left, right), c);
                     }
                     return std::pair{delta_case1(H2, lift_substitution(H, H2, f, x)), rhs};
                   }), "F", amb + " -> T⁺(H2)", P, cfg, show, show22);
    for (const auto& kind : {ProductKind::qsh(1), ProductKind::rsh()}) {
      run<E, Scalar>(out, un("ε2 F = ε1", [H, H2, f, kind](const E& x) {
                       return std::pair{counit_case1(H2, kind, lift_substitution(H, H2, f, x)), counit_case1(H, kind, x)};
                     }), "F", amb + " " + kind.name(), P, cfg, show, shows);
    }
  }
}

struct SquarePools {
  std::vector<TwoLeg> ex, ex3, rnd, rnd3;
};

SquarePools square_pools(const BaseAlgebra& A, const SuiteConfig& cfg) {
  const Mode mode = A.mode();
  auto leg = [&](const char* s) { return parse_word(A, s); };
  std::vector<Word> legs6{leg("(1)"), leg("(a)"), leg("(b)"), leg("(a|b)"), leg("(1|1)"), leg("(1|a)")};
  std::vector<Word> legs3{leg("(1)"), leg("(a)"), leg("(a|b)")};
  SquarePools s;
  for (const auto& x : legs6)
    for (const auto& y : legs6) s.ex.push_back(TwoLeg::term(mode, {x, y}));
  for (const auto& x : legs3)
    for (const auto& y : legs3) s.ex3.push_back(TwoLeg::term(mode, {x, y}));
  SampleRng rng(cfg.seed);
  Monomial one, a = A.gen("a"), b = A.gen("b");
  std::vector<Monomial> letters{one, a, b, mono_mul(mode, a, b)};
  auto random_square = [&](unsigned max_len) {
    TwoLeg t(mode);
    auto terms = 1 + rng.below(2);
    for (std::uint64_t k = 0; k < terms; ++k) {
      E l = random_element(rng, mode, letters, 1, max_len, 1), r = random_element(rng, mode, letters, 1, max_len, 1);
      t.add_scaled(tensor_pair(l, r), k == 0 ? Scalar(1) : rng.small_rational());
    }
    return t;
  };
  for (std::size_t i = 0; i < 2 * cfg.cases; ++i) s.rnd.push_back(random_square(3));
  for (std::size_t i = 0; i < 3 * cfg.cases; ++i) s.rnd3.push_back(random_square(2));
  return s;
}

std::vector<std::vector<TwoLeg>> square_tuples(const SquarePools& s, std::size_t arity, std::size_t cases) {
  auto out = all_tuples(arity == 3 ? s.ex3 : s.ex, arity);
  auto rnd = chunk_tuples(arity == 3 ? s.rnd3 : s.rnd, arity);
  if (rnd.size() > cases) rnd.resize(cases);
  out.insert(out.end(), rnd.begin(), rnd.end());
  return out;
}

void run_square(Reports& out, const Law<TwoLeg>& law, const OperatedAlgebra<TwoLeg>& S, const SquarePools& pools,
                const SuiteConfig& cfg) {
  std::string policy = (law.arity == 3 ? std::string("exhaustive 9 leg pairs over {(1),(a),(a|b)}")
                                       : std::string("exhaustive 36 leg pairs over {(1),(a),(b),(a|b),(1|1),(1|a)}")) +
                       " + random " + std::to_string(cfg.cases) + " seed " + std::to_string(cfg.seed);
  out.push_back(check_law(law, S, square_tuples(pools, law.arity, cfg.cases), policy));
}

void suite_square_nijenhuis(const SuiteConfig& cfg, Reports& out) {
  BaseAlgebra A(Mode::commutative, {{"a"}, {"b"}});
  auto S = amalg_square(A);
  run_square(out, law_nijenhuis(S), S, square_pools(A, cfg), cfg);
}

void suite_bialg2(const SuiteConfig& cfg, Reports& out) {
  BaseAlgebra A(Mode::commutative, {{"a"}, {"b"}});
  const Mode mode = A.mode();
  Show show = [A](const E& x) { return format_tensor(A, x); };
  std::function<std::string(const TwoLeg&)> show2 = [A](const TwoLeg& x) { return format_two_leg(A, x); };
  std::function<std::string(const ThreeLeg&)> show3 = [A](const ThreeLeg& x) { return format_three_leg(A, x); };
  std::function<std::string(const Scalar&)> shows = [](const Scalar& s) { return to_string(s); };
  auto S = amalg_square(A);
  SquarePools sq = square_pools(A, cfg);
  run_square(out, law_associative<TwoLeg>("⨿ associative", S.mul), S, sq, cfg);
  run_square(out, law_commutative<TwoLeg>("⨿ commutative", S.mul), S, sq, cfg);
  Law<TwoLeg> unit{"(1)⊗(1) unit", 1, [S](const std::vector<TwoLeg>& s) {
                     return std::pair{S.mul(S.unit, s[0]), S.mul(s[0], S.unit)};
                   }};
  run_square(out, unit, S, sq, cfg);
  run_square(out, law_nijenhuis(S), S, sq, cfg);

  auto letters = monomials_up_to(A, 2);
  Pools P;
  P.ex = as_elements(mode, words_over(letters, 1, std::min(3u, cfg.max_len)));
  P.ex_desc = "all words over letters of degree <= 2, len 1.." + std::to_string(std::min(3u, cfg.max_len));
  SampleRng rng(cfg.seed);
  P.rnd = random_pool(rng, mode, letters, 1, cfg.random_len, 2 * cfg.cases);
  P.rnd_desc = "seed " + std::to_string(cfg.seed) + " len<=" + std::to_string(cfg.random_len);
  const std::string amb = "T⁺(K[a,b]) rsh";
  Ambient plus = Ambient::plus(ProductKind::rsh(), mode);
  auto un = [](const std::string& name, auto fn) {
    using O = decltype(fn(std::declval<const E&>()).first);
    return Law<E, O>{name, 1, [fn](const std::vector<E>& s) { return fn(s[0]); }};
  };

  auto lift = std::make_shared<MorphismLift<TwoLeg>>(S, [mode](GenId g) {
    return delta_case2(letter_element(mode, Monomial::generator(g)));
  });
  run<E, TwoLeg>(out, un("Δ = lift of Δ(a)", [lift](const E& x) { return std::pair{delta_case2(x), (*lift)(x)}; }), "Δ",
                 amb, P, cfg, show, show2);
  run<E, ThreeLeg>(out, un("(Δ⊗id)Δ = (id⊗Δ)Δ", [](const E& x) {
                     TwoLeg d = delta_case2(x);
                     return std::pair{delta_case2_left(d), delta_case2_right(d)};
                   }), "Δ", amb, P, cfg, show, show3);
  run<E, E>(out, un("(id⊗ε)Δ = id", [](const E& x) { return std::pair{counit_right_case2(delta_case2(x)), x}; }), "Δ",
            amb, P, cfg, show, show);
  run<E, E>(out, un("(ε⊗id)Δ = [x]*", [](const E& x) { return std::pair{counit_left_case2(delta_case2(x)), bracket_star(x)}; }), "Δ",
            amb, P, cfg, show, show);
  run<E, TwoLeg>(out, un("ΔP = 𝖯Δ", [S](const E& x) { return std::pair{delta_case2(shift_right(x)), S.op(delta_case2(x))}; }),
                 "Δ", amb, P, cfg, show, show2);
  // The morphism claim is checked on every pair of basis words up to length 3.
  Pools PP = P;
  PP.ex3.clear();
  Law<E, TwoLeg> dm{"Δ(XY) = Δ(X)⨿Δ(Y)", 2, [plus, S](const std::vector<E>& s) {
                      return std::pair{delta_case2(plus.mul(s[0], s[1])), S.mul(delta_case2(s[0]), delta_case2(s[1]))};
                    }};
  run<E, TwoLeg>(out, dm, "Δ", amb, PP, cfg, show, show2);
  Law<E, Scalar> em{"ε(XY) = ε(X)ε(Y)", 2, [plus](const std::vector<E>& s) {
                      return std::pair{counit_case2(plus.mul(s[0], s[1])), Scalar(counit_case2(s[0]) * counit_case2(s[1]))};
                    }};
  run<E, Scalar>(out, em, "ε", amb, PP, cfg, show, shows);
}

/// Span comparison: rank(a) = rank(b) = rank(a ∪ b).
bool same_span(const std::vector<E>& a, const std::vector<E>& b) {
  std::map<Word, std::size_t> index;
  auto vec = [&](const E& x) {
    SparseVector v;
    for (const auto& [w, c] : x) v[index.try_emplace(w, index.size()).first->second] = c;
    return v;
  };
  std::vector<SparseVector> va, vb, vab;
  for (const auto& x : a) va.push_back(vec(x));
  for (const auto& x : b) vb.push_back(vec(x));
  vab = va;
  vab.insert(vab.end(), vb.begin(), vb.end());
  auto r = rank_of(vab);
  return rank_of(va) == r && rank_of(vb) == r && r == a.size();
}

void suite_primitives(const SuiteConfig& cfg, Reports& out) {
  const unsigned D = cfg.primitive_bound;
  struct PCase {
    int which;
    const char* decl;
  };
  for (const auto& pc : {PCase{2, "a"}, PCase{2, "a,b"}, PCase{1, "h:primitive"}, PCase{1, "g:grouplike"},
                         PCase{1, "g:grouplike,h:primitive"}, PCase{1, "h:primitive,k:primitive"}}) {
    BaseAlgebra H = BaseAlgebra::parse_declaration(Mode::commutative, pc.decl);
    std::vector<E> expected;
    if (pc.which == 2) {
      for (const auto& m : monomials_up_to(H, D))
        if (!m.is_unit()) expected.push_back(letter_element(H.mode(), m));
    } else {
      for (GenId g = 0; g < H.size(); ++g)
        if (H.generators()[g].rule == CoproductRule::primitive) expected.push_back(letter_element(H.mode(), Monomial::generator(g)));
    }
    auto res = primitives_at_bound(H, pc.which, ProductKind::rsh(), D);
    CheckReport rep{std::string("primitives = ") + (pc.which == 2 ? "span{(x) : x non-unit}" : "span{(p) : p primitive}"),
                    "Δ", std::string("case ") + std::to_string(pc.which) + " {" + pc.decl + "}",
                    "words of length <= " + std::to_string(D) + " with letter degree <= " + std::to_string(D) + " (" +
                        std::to_string(res.basis_words.size()) + " words)"};
    rep.samples = res.basis_words.size();
    rep.pass = same_span(res.primitives, expected);
    if (!rep.pass) {
      std::string got, want;
      for (const auto& p : res.primitives) got += (got.empty() ? "" : ", ") + format_tensor(H, p);
      for (const auto& p : expected) want += (want.empty() ? "" : ", ") + format_tensor(H, p);
      rep.counterexample = Counterexample{{pc.decl}, "{" + got + "}", "{" + want + "}"};
    }
    out.push_back(std::move(rep));
  }
}

using SuiteFn = void (*)(const SuiteConfig&, Reports&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"shuffle", suite_shuffle},      {"differential", suite_differential}, {"rb", suite_rb},
      {"nijenhuis", suite_nijenhuis},  {"td", suite_td},                     {"average", suite_average},
      {"conjugates", suite_conjugates}, {"double", suite_double},            {"spitzer", suite_spitzer},
      {"tridend", suite_tridend},      {"omega", suite_omega},               {"involution", suite_involution},
      {"lift", suite_lift},            {"bialg1", suite_bialg1},             {"bialg2", suite_bialg2},
      {"primitives", suite_primitives}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, f] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteResult res{name, {}};
  for (const auto& [k, f] : registry())
    if (name == "all" || name == k) f(cfg, res.reports);
  if (name != "all" && res.reports.empty() &&
      std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
  return res;
}

nlohmann::json report_json(const CheckReport& r) {
  nlohmann::json j{{"identity", r.identity}, {"operator", r.op}, {"ambient", r.ambient}, {"pass", r.pass},
                   {"samples", r.samples}, {"policy", r.policy}, {"expected", r.expect_pass}};
  if (r.counterexample) {
    j["counterexample"] = {{"inputs", r.counterexample->inputs}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string report_line(const CheckReport& r) {
  std::string s = r.ok() ? "ok   " : "FAIL ";
  s += r.identity + "  [" + r.op + " on " + r.ambient + "]  " + (r.pass ? "holds" : "fails") + " (" +
       std::to_string(r.samples) + " samples; " + r.policy + ")";
  if (!r.expect_pass) s += " expected to fail";
  if (r.counterexample) {
    s += "\n     counterexample:";
    for (const auto& in : r.counterexample->inputs) s += " " + in + ";";
    s += "\n     lhs = " + r.counterexample->lhs + "\n     rhs = " + r.counterexample->rhs;
  }
  return s;
}

}  // namespace rba
