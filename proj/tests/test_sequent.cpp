#include <doctest.h>

#include "hml/hilbert.hpp"
#include "hml/search.hpp"
#include "hml/sequent.hpp"
#include "hml/simulate.hpp"
#include "support.hpp"

using namespace hml;
using hml::testing::F;
using hml::testing::S;

TEST_CASE("sequents are multisets") {
  CHECK(S("p, q => r") == S("q, p => r"));
  CHECK_FALSE(S("p, p => r") == S("p => r"));
  CHECK(to_string(S("p, [0]q => r")) == "p, [0]q => r");
  CHECK(to_string(S("=> p")) == "=> p");
  CHECK(S("p") == S("=> p"));
  CHECK(remove_all(S("p, q, p =>").left, F("p")).size() == 1);
  CHECK_THROWS_AS(remove_one(S("q =>").left, F("p")), PreconditionError);
}

TEST_CASE("hand-built trees check") {
  using namespace rules;
  // => [0](p -> p): Ax, ImpR, Box4hR with empty context
  Proof d = box4h_r(imp_r(ax(F("p")), F("p -> p")), F("[0](p -> p)"), {});
  CHECK(d->conclusion() == S("=> [0](p -> p)"));
  CHECK(check_derivation(LogicId::K4h, d).ok);
  CHECK(check_derivation(LogicId::KD4h, d).ok);
  CHECK_FALSE(check_derivation(LogicId::S4h, d).ok);

  // => [1]([0]p -> p) in S4h: BoxhL then BoxShR
  Proof s = boxsh_r(imp_r(boxh_l(ax(F("p")), F("[0]p")), F("[0]p -> p")), F("[1]([0]p -> p)"), {});
  CHECK(s->conclusion() == S("=> [1]([0]p -> p)"));
  CHECK(check_derivation(LogicId::S4h, s).ok);
  CHECK_FALSE(check_derivation(LogicId::K4h, s).ok);
}

TEST_CASE("axiom displays check in their calculi") {
  for (int n = 0; n <= 2; ++n) {
    auto kh = match_scheme(Scheme::Kh, scheme_instance(Scheme::Kh, n, F("p"), F("q")));
    REQUIRE(kh);
    for (LogicId l : {LogicId::K4h, LogicId::KD4h, LogicId::S4h}) {
      Proof d = axiom_derivation(l, *kh);
      CHECK(check_derivation(l, d).ok);
      CHECK(d->conclusion() == Sequent{{}, {scheme_instance(Scheme::Kh, n, F("p"), F("q"))}});
    }
    auto dh = match_scheme(Scheme::Dh, scheme_instance(Scheme::Dh, n, Formula::bot()));
    REQUIRE(dh);
    Proof d = axiom_derivation(LogicId::KD4h, *dh);
    CHECK(check_derivation(LogicId::KD4h, d).ok);
  }
}

TEST_CASE("side condition of the modal rules") {
  // [0]p => [0]p read as a Box4hR step at index 0 with the context box at 0
  Proof top = rules::weaken_left(rules::ax(F("p")), F("[0]p"));
  REQUIRE(check_derivation(LogicId::K4h, top).ok);
  RuleData data{F("[0]p"), 0, -1};
  Proof bad = std::make_shared<const Derivation>(S("[0]p => [0]p"), Rule::Box4hR, std::vector<Proof>{top}, data);
  auto r = check_derivation(LogicId::K4h, bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.message.empty());

  // builder refuses the same step
  CHECK_THROWS_AS(rules::box4h_r(rules::weaken_left(rules::ax(F("p")), F("[0]p")), F("[0]p"), {F("[0]p")}),
                  PreconditionError);
}

TEST_CASE("prove examples") {
  auto d = prove_formula(LogicId::K4h, F("[0](p -> p)"));
  REQUIRE(d);
  CHECK((*d)->cut_free());
  CHECK(check_derivation(LogicId::K4h, *d).ok);

  CHECK_FALSE(prove_formula(LogicId::K4h, F("[0]p -> p")));
  CHECK(prove_formula(LogicId::S4h, F("[1]([0]p -> p)")));
  CHECK(prove_formula(LogicId::KD4h, F("-[0]bot")));
  CHECK_FALSE(prove_formula(LogicId::K4h, F("-[0]bot")));
  CHECK(prove_formula(LogicId::K4h, F("[0]p -> [1][0]p")));
  CHECK(prove_formula(LogicId::K4h, F("[0]p -> [3]p")));
  CHECK_FALSE(prove_formula(LogicId::K4h, F("[1]p -> [0]p")));
  CHECK(prove_formula(LogicId::GL, F("[]([]p -> p) -> []p")));
  CHECK_FALSE(prove_formula(LogicId::GL, F("[]p -> p")));
  CHECK(prove_formula(LogicId::S4, F("[]p -> [][]p")));
  CHECK(prove_formula(LogicId::KD4, F("-[]bot")));
}

TEST_CASE("prove returns the exact endsequent") {
  Sequent s = S("[1]p, [0]q, [0]q => [2]([0]q & p), r");
  auto d = prove(LogicId::KD4h, s);
  REQUIRE(d);
  CHECK((*d)->conclusion() == s);
  CHECK(check_derivation(LogicId::KD4h, *d).ok);
}

TEST_CASE("search budget") {
  SearchOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(prove_formula(LogicId::K4h, F("[1]([0](p -> q) -> [0]p -> [0]q) & ([0]r | -[0]r)"), tiny),
                  ResourceLimit);
}

TEST_CASE("hilbert_from_derivation and back") {
  struct Case {
    LogicId logic;
    const char* goal;
  };
  for (auto c : {Case{LogicId::K4h, "[0](p -> p)"}, Case{LogicId::KD4h, "[1]bot -> bot"},
                 Case{LogicId::K4h, "[0]p -> [1][0]p"}, Case{LogicId::S4h, "[1]([0]p -> p)"}}) {
    CAPTURE(c.goal);
    auto d = prove_formula(c.logic, F(c.goal));
    REQUIRE(d);
    HilbertProof h = hilbert_from_derivation(c.logic, *d);
    CHECK(check_hilbert_proof(c.logic, h, F(c.goal)).ok);
    Proof back = derivation_from_hilbert(c.logic, h);
    CHECK(check_derivation(c.logic, back).ok);
    CHECK(back->conclusion() == Sequent{{}, {F(c.goal)}});
  }
}

TEST_CASE("kd4h hilbert proof of [1]bot -> bot uses the D axiom") {
  auto d = prove_formula(LogicId::KD4h, F("[1]bot -> bot"));
  REQUIRE(d);
  HilbertProof h = hilbert_from_derivation(LogicId::KD4h, *d);
  bool uses_d = false;
  for (const auto& ln : h.lines)
    if (ln.rule == Just::Axiom)
      if (auto m = is_axiom_instance(LogicId::KD4h, ln.formula); m && m->scheme == Scheme::Dh) uses_d = true;
  CHECK(uses_d);
}

TEST_CASE("derivation_from_hilbert of axiom and necessitation proofs") {
  HilbertProof h;
  h.lines.push_back({F("[0]p -> [1]p"), Just::Axiom, {}, Scheme::H});
  Proof d = derivation_from_hilbert(LogicId::K4h, h);
  CHECK(check_derivation(LogicId::K4h, d).ok);

  HilbertProof n;
  n.lines.push_back({F("p -> p"), Just::Taut, {}, std::nullopt});
  n.lines.push_back({F("[0](p -> p)"), Just::Nec, {0, 1}, std::nullopt});
  Proof e = derivation_from_hilbert(LogicId::K4h, n);
  CHECK(check_derivation(LogicId::K4h, e).ok);
  CHECK(e->rule() == Rule::Box4hR);
}

TEST_CASE("hilbert_from_premises") {
  std::vector<Formula> prem{F("[0]p"), F("[0](p -> q)")};
  auto d = prove(LogicId::K4h, Sequent{prem, {F("[0]q")}});
  REQUIRE(d);
  HilbertProof h = hilbert_from_premises(LogicId::K4h, prem, *d);
  CHECK(h.hypotheses == prem);
  CHECK(check_hilbert_proof(LogicId::K4h, h, F("[0]q")).ok);
}
