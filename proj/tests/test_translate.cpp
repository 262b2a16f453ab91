#include <doctest.h>

#include "hml/props.hpp"
#include "hml/search.hpp"
#include "hml/translate.hpp"
#include "support.hpp"

using namespace hml;
using hml::testing::F;
using hml::testing::S;

TEST_CASE("q_block") {
  CHECK(q_block(0) == F("q0"));
  CHECK(q_block(2) == F("q0 & q1 & q2"));
}

TEST_CASE("t_translate") {
  CHECK(t_translate(F("[0]p")) == F("[](q0 -> p)"));
  CHECK(t_translate(F("p & q")) == F("p & q"));
  CHECK(t_translate(F("[1][0]p")) == F("[](q0 & q1 -> [](q0 -> p))"));
  CHECK(t_translate(F("-[2]bot | r")) == F("-[](q0 & q1 & q2 -> bot) | r"));
  CHECK_THROWS_AS(t_translate(F("q0 -> p")), PreconditionError);
  CHECK_THROWS_AS(t_translate(F("[]p")), SortError);
}

TEST_CASE("classify_x") {
  XClass a = classify_x(F("[](q0 -> p)"));
  CHECK(a.kind == XClass::Kind::FirstKind);
  CHECK(a.n == 0);
  CHECK(*a.core == F("p"));

  XClass b = classify_x(F("[](q0 & bot -> p)"));
  CHECK(b.kind == XClass::Kind::SecondKind);
  CHECK(b.m == 0);
  CHECK(b.n == 1);
  CHECK(*b.core == F("p"));

  CHECK(classify_x(F("[]p")).kind == XClass::Kind::NotInX);
  // a q in the body at the block's own level is not allowed for the first kind
  CHECK_FALSE(classify_x(F("[](q0 -> q0)")).member());
  CHECK(classify_x(F("q3 & p")).kind == XClass::Kind::NonBoxedMember);
  CHECK(classify_x(F("[](q0 & q1 -> [](q0 -> p))")).kind == XClass::Kind::FirstKind);
}

TEST_CASE("s_translate") {
  CHECK(s_translate(F("[](q0 -> p)")) == F("[0]p"));
  CHECK(s_translate(F("[](q0 & bot -> p)")) == F("top"));
  CHECK(s_translate(F("q5")) == F("top"));
  CHECK(s_translate(F("[](q0 & q1 -> [](q0 -> p)) & r")) == F("[1][0]p & r"));
  CHECK_THROWS(s_translate(F("[]p")));
}

TEST_CASE("sigma_n") {
  CHECK(sigma_n(F("[](q0 & q1 & q2 -> p)"), 1) == F("[](q0 & q1 & bot -> p)"));
  CHECK(sigma_n(F("[](q0 -> p)"), 5) == F("[](q0 -> p)"));
  Formula first = t_translate(F("[2]p"));
  REQUIRE(classify_x(first).kind == XClass::Kind::FirstKind);
  Formula low = sigma_n(first, 1);
  XClass c = classify_x(low);
  CHECK(c.kind == XClass::Kind::SecondKind);
  CHECK(low.q_rank() == 1);
}

TEST_CASE("is_good_xproof") {
  auto d = prove_formula(LogicId::K4Q, F("[](q0 -> p -> p)"));
  REQUIRE(d);
  CHECK(is_good_xproof(LogicId::K4Q, *d));

  Formula ctx = F("[](q0 & q1 -> p)");
  auto prem = prove(LogicId::K4Q, S("q0 & q1 -> p, [](q0 & q1 -> p) => q0 -> p | -p"));
  REQUIRE(prem);
  Proof bad = rules::box4_r(*prem, F("[](q0 -> p | -p)"), {ctx});
  REQUIRE(check_derivation(LogicId::K4Q, bad).ok);
  CHECK_FALSE(is_good_xproof(LogicId::K4Q, bad));

  auto outside = prove_formula(LogicId::K4Q, F("[]p -> []p"));
  REQUIRE(outside);
  CHECK_THROWS_AS(is_good_xproof(LogicId::K4Q, *outside), NotXProof);
  CHECK_THROWS_AS(is_good_xproof(LogicId::K4h, *d), PreconditionError);
}

TEST_CASE("goodify") {
  SUBCASE("already good") {
    auto d = prove_formula(LogicId::K4Q, F("[](q0 -> p -> p)"));
    REQUIRE(d);
    GoodProof g = goodify(LogicId::K4Q, *d);
    CHECK(g.sigma.empty());
    CHECK(g.proof == *d);
  }
  SUBCASE("bad box rule gets second-kind side formulas") {
    Formula ctx = F("[](q0 & q1 -> p)");
    auto prem = prove(LogicId::K4Q, S("q0 & q1 -> p, [](q0 & q1 -> p) => q0 -> p | -p"));
    REQUIRE(prem);
    Proof bad = rules::box4_r(*prem, F("[](q0 -> p | -p)"), {ctx});
    GoodProof g = goodify(LogicId::K4Q, bad);
    CHECK_FALSE(g.sigma.empty());
    for (const auto& s : g.sigma) CHECK(classify_x(s).kind == XClass::Kind::SecondKind);
    CHECK(is_good_xproof(LogicId::K4Q, g.proof));
    CHECK(check_derivation(LogicId::K4Q, g.proof).ok);
    Sequent expect{concat(g.sigma, bad->conclusion().left), bad->conclusion().right};
    CHECK(g.proof->conclusion() == expect);
  }
  SUBCASE("translated theorem with a higher boxed context") {
    for (LogicId l : {LogicId::K4Q, LogicId::S4Q}) {
      Formula a = t_translate(F("[1]p & [1](p -> q) -> [0](r -> r) & [1]q"));
      auto d = prove_formula(l, a);
      REQUIRE(d);
      GoodProof g = goodify(l, *d);
      for (const auto& s : g.sigma) CHECK(classify_x(s).kind == XClass::Kind::SecondKind);
      CHECK(is_good_xproof(l, g.proof));
      CHECK(check_derivation(l, g.proof).ok);
    }
  }
}

TEST_CASE("witnesses") {
  Witness leaf = Witness::leaf();
  CHECK(check_witness(Witness::pair(leaf, leaf), F("p & q")));
  CHECK(check_witness(Witness::box(1, Witness::box(0, leaf)), F("[][]p")));
  CHECK_FALSE(check_witness(Witness::box(0, Witness::box(1, leaf)), F("[][]p")));
  CHECK_FALSE(check_witness(leaf, F("[]p")));
  CHECK(check_witness(leaf, F("-p")));

  CHECK(apply_witness(F("[][]p"), Witness::box(1, Witness::box(0, leaf))) == F("[1][0]p"));
  CHECK(apply_witness(F("p"), leaf) == F("p"));
  Witness w = Witness::box(2, Witness::pair(leaf, Witness::box(0, leaf)));
  CHECK(apply_witness(F("[](p -> []q)"), w) == F("[2](p -> [0]q)"));
  CHECK(is_wff_h(parse_raw(to_string(apply_witness(F("[](p -> []q)"), w)))));
}

TEST_CASE("witness text") {
  Witness w = Witness::box(2, Witness::pair(Witness::leaf(), Witness::box(0, Witness::leaf())));
  CHECK(to_string(w) == "[2,[[],[0,[]]]]");
  CHECK(parse_witness(to_string(w)) == w);
  CHECK(w.max_number() == 2);
  CHECK_THROWS_AS(parse_witness("[1,"), SyntaxError);
  CHECK_THROWS_AS(parse_witness("[\"a\"]"), SyntaxError);
}

TEST_CASE("forgetful_f") {
  auto [u, w] = forgetful_f(F("[3]p"));
  CHECK(u == F("[]p"));
  CHECK(w == Witness::box(3, Witness::leaf()));
  auto [u2, w2] = forgetful_f(F("p"));
  CHECK(u2 == F("p"));
  CHECK(w2 == Witness::leaf());
  auto [u3, w3] = forgetful_f(F("[1][0]p"));
  CHECK(u3 == F("[][]p"));
  CHECK(w3 == Witness::box(1, Witness::box(0, Witness::leaf())));
}

TEST_CASE("canonical_witness") {
  Witness w0 = canonical_witness(F("[0]p"));
  CHECK(w0.kind == Witness::Kind::Box);
  CHECK(w0.n == 0);
  CHECK(canonical_witness(F("p")) == Witness::leaf());
  Formula a = F("[1][0]p");
  Witness w = canonical_witness(a);
  CHECK(check_witness(w, t_translate(a)));
  CHECK(w.n == 1);
  CHECK(apply_witness(t_translate(a), w).rank() == 1);
}

TEST_CASE("normalize_indices_gl") {
  CHECK(normalize_indices_gl(F("[5]p")) == F("[0]p"));
  CHECK(normalize_indices_gl(F("[5][2]p")) == F("[1][0]p"));
  CHECK(normalize_indices_gl(F("[1][0]p & q")) == F("[1][0]p & q"));
  CHECK(normalize_indices_gl(F("[0]p"), 3) == F("[3]p"));
  // both directions hold in GLh
  CHECK(gl_h_decide(F("[5][2]p -> [1][0]p")).provable);
  CHECK(gl_h_decide(F("[1][0]p -> [5][2]p")).provable);
}
