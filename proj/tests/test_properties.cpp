// Property tests over generated formulas.

#include <doctest.h>

#include <random>

#include "hml/cutelim.hpp"
#include "hml/hilbert.hpp"
#include "hml/props.hpp"
#include "hml/search.hpp"
#include "hml/serialize.hpp"
#include "hml/simulate.hpp"
#include "hml/translate.hpp"
#include "support.hpp"

using namespace hml;
using hml::testing::F;

namespace {

const std::vector<Formula>& corpus() {
  static const std::vector<Formula> c = gen_corpus(31337, 200, 4, 3);
  return c;
}

const LogicId kCalculi[] = {LogicId::K4h, LogicId::KD4h, LogicId::S4h};

}  // namespace

TEST_CASE("print then parse is the identity") {
  for (const auto& a : gen_corpus(1, 500, 6, 4)) {
    std::string s = to_string(a);
    CAPTURE(s);
    CHECK(parse_formula(s) == a);
    CHECK(to_string(parse_formula(s)) == s);
  }
  for (const auto& a : gen_corpus(2, 200, 6, 4)) {
    Formula u = t_translate(a);
    CHECK(parse_formula(to_string(u)) == u);
  }
}

TEST_CASE("search is deterministic") {
  for (std::size_t i = 0; i < 60; ++i) {
    const Formula& a = corpus()[i];
    for (LogicId l : kCalculi) {
      auto x = prove_formula(l, a);
      auto y = prove_formula(l, a);
      REQUIRE(x.has_value() == y.has_value());
      if (x) CHECK(derivation_to_json(*x) == derivation_to_json(*y));
    }
  }
}

TEST_CASE("search output is cut-free and checks") {
  for (const auto& a : corpus())
    for (LogicId l : kCalculi)
      if (auto d = prove_formula(l, a)) {
        CAPTURE(to_string(a));
        CHECK((*d)->cut_free());
        CHECK(check_derivation(l, *d).ok);
        CHECK((*d)->conclusion() == Sequent{{}, {a}});
      }
}

TEST_CASE("weakening is admissible for search") {
  std::mt19937_64 rng(5);
  const auto& c = corpus();
  int tried = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (LogicId l : kCalculi) {
      if (!decide(l, c[i]).provable) continue;
      const Formula& extra = c[rng() % c.size()];
      Sequent s{{extra}, {c[i]}};
      auto d = prove(l, s);
      CAPTURE(to_string(s));
      CHECK(d.has_value());
      Sequent r{{}, {c[i], extra}};
      CHECK(prove(l, r).has_value());
      ++tried;
    }
  }
  CHECK(tried > 30);
}

TEST_CASE("monotonicity across logics") {
  for (const auto& a : corpus()) {
    if (!decide(LogicId::K4h, a).provable) continue;
    CAPTURE(to_string(a));
    CHECK(decide(LogicId::KD4h, a).provable);
    CHECK(decide(LogicId::S4h, a).provable);
    CHECK(gl_h_decide(a).provable);
  }
}

TEST_CASE("t lands in X, sigma keeps it there and obeys the rank law") {
  for (const auto& a : corpus()) {
    Formula b = t_translate(a);
    CAPTURE(to_string(a));
    CHECK(classify_x(b).member());
    CHECK(b.q_rank() == a.rank());
    CHECK(s_translate(b) == a);
    for (int n = 0; n <= 3; ++n) {
      Formula s = sigma_n(b, n);
      CHECK(classify_x(s).member());
      CHECK(s.q_rank() <= n);
      if (n >= b.q_rank()) CHECK(s == b);
      XClass k = classify_x(b);
      if (k.kind == XClass::Kind::FirstKind && n < k.n) CHECK(classify_x(s).kind == XClass::Kind::SecondKind);
    }
  }
}

TEST_CASE("goodness survives sigma") {
  int seen = 0;
  for (const auto& a : corpus()) {
    Formula b = t_translate(a);
    auto d = prove_formula(LogicId::K4Q, b);
    if (!d) continue;
    GoodProof g = goodify(LogicId::K4Q, *d);
    REQUIRE(is_good_xproof(LogicId::K4Q, g.proof));
    for (int n = 0; n <= 3; ++n) {
      Proof s = sigma_n(g.proof, n);
      CAPTURE(to_string(a));
      CHECK(check_derivation(LogicId::K4Q, s).ok);
      CHECK(is_good_xproof(LogicId::K4Q, s));
    }
    ++seen;
  }
  CHECK(seen > 10);
}

TEST_CASE("witness coherence and the forgetful round trip") {
  for (const auto& a : gen_corpus(77, 300, 6, 4)) {
    auto [u, w] = forgetful_f(a);
    CAPTURE(to_string(a));
    CHECK(u.is_unimodal());
    CHECK(check_witness(w, u));
    CHECK(apply_witness(u, w) == a);
    CHECK(parse_witness(to_string(w)) == w);
    CHECK(w.max_number() == a.rank());

    Formula b = t_translate(a);
    Witness c = canonical_witness(a);
    CHECK(check_witness(c, b));
    CHECK(c.max_number() == a.rank());
  }
}

TEST_CASE("normalize_indices_gl is idempotent and GLh-equivalent") {
  int checked = 0;
  for (const auto& a : gen_corpus(88, 200, 5, 4)) {
    Formula n = normalize_indices_gl(a);
    CAPTURE(to_string(a));
    CHECK(normalize_indices_gl(n) == n);
    CHECK(n.rank() <= a.rank());
    CHECK(forgetful_f(n).first == forgetful_f(a).first);
    if (checked < 60) {
      CHECK(gl_h_decide(iff(a, n)).provable);
      ++checked;
    }
  }
}

TEST_CASE("z_translate rank law") {
  for (const auto& a : gen_corpus(99, 200, 5, 3)) {
    for (int n = 0; n <= 3; ++n) {
      Formula z = z_translate(a, F("z"), n);
      CAPTURE(to_string(a));
      CHECK(z.rank() == a.rank());
      if (n > a.rank()) CHECK(z == a);
    }
  }
}

TEST_CASE("gen_corpus is deterministic and well-formed") {
  auto x = gen_corpus(123, 300, 5, 3);
  auto y = gen_corpus(123, 300, 5, 3);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == y[i]);
  CHECK_FALSE(gen_corpus(124, 300, 5, 3) == x);
  bool varied = false;
  for (const auto& a : x) {
    CHECK(is_wff_h(parse_raw(to_string(a))));
    varied = varied || a.rank() >= 2;
  }
  CHECK(varied);
}

TEST_CASE("JSON round trip of proof objects") {
  for (std::size_t i = 0; i < 80; ++i) {
    const Formula& a = corpus()[i];
    for (LogicId l : kCalculi) {
      auto d = prove_formula(l, a);
      if (!d) continue;
      std::string j = derivation_to_json(*d);
      CHECK(derivation_to_json(derivation_from_json(j)) == j);
      HilbertProof h = hilbert_from_derivation(l, *d);
      std::string hj = hilbert_to_json(h);
      CHECK(hilbert_to_json(hilbert_from_json(hj)) == hj);
    }
  }
}

TEST_CASE("cut elimination removes exactly the cuts it reports") {
  int runs = 0;
  for (const auto& a : corpus()) {
    for (LogicId l : kCalculi) {
      auto d = prove_formula(l, a);
      if (!d) continue;
      Proof withcuts = derivation_from_hilbert(l, hilbert_from_derivation(l, *d));
      if (withcuts->cut_free()) continue;
      CutElimStats st;
      Proof e = eliminate_cuts(l, withcuts, &st);
      CAPTURE(to_string(a));
      CHECK(e->cut_free());
      CHECK(check_derivation(l, e).ok);
      CHECK(e->conclusion() == withcuts->conclusion());
      CHECK_FALSE(st.eliminated.empty());
      for (std::size_t c : st.eliminated) CHECK(c <= withcuts->max_cut_complexity());
      ++runs;
    }
    if (runs > 60) break;
  }
  CHECK(runs > 20);
}
