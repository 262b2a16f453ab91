#include <doctest.h>

#include "hml/hilbert.hpp"
#include "hml/hilbert_build.hpp"
#include "hml/search.hpp"
#include "hml/tautology.hpp"
#include "support.hpp"

using namespace hml;
using hml::testing::F;
using hml::testing::S;

TEST_CASE("axiom matching") {
  auto kh = is_axiom_instance(LogicId::K4h, F("[0](p -> q) -> [0]p -> [0]q"));
  REQUIRE(kh);
  CHECK(kh->scheme == Scheme::Kh);
  CHECK(kh->n == 0);
  REQUIRE(kh->parts.size() == 2);
  CHECK(kh->parts[0] == F("p"));
  CHECK(kh->parts[1] == F("q"));

  auto lh = is_axiom_instance(LogicId::GLh, F("[1]([0]p -> p) -> [0]p"));
  REQUIRE(lh);
  CHECK(lh->scheme == Scheme::Lh);
  CHECK(lh->n == 0);

  CHECK_FALSE(is_axiom_instance(LogicId::K4h, F("[0]p -> p")));
  CHECK(is_axiom_instance(LogicId::S4h, F("[0]p -> p")));
  CHECK(is_axiom_instance(LogicId::KD4h, F("-[2]bot")));
  CHECK_FALSE(is_axiom_instance(LogicId::K4h, F("-[2]bot")));
}

TEST_CASE("scheme instances are matched by their own scheme") {
  for (Scheme s : {Scheme::H, Scheme::Fourh, Scheme::Dh, Scheme::Lh, Scheme::Th, Scheme::Fiveh}) {
    Formula inst = scheme_instance(s, 1, F("p & [0]q"));
    auto m = match_scheme(s, inst);
    REQUIRE(m);
    CHECK(m->scheme == s);
  }
}

TEST_CASE("check_hilbert_proof") {
  HilbertProof taut;
  taut.lines.push_back({F("p -> p"), Just::Taut, {}, std::nullopt});
  for (LogicId l : {LogicId::K4h, LogicId::KD4h, LogicId::S4h, LogicId::GLh, LogicId::K4})
    CHECK(check_hilbert_proof(l, taut, F("p -> p")).ok);

  HilbertProof nec = taut;
  nec.lines.push_back({F("[0](p -> p)"), Just::Nec, {0, 1}, std::nullopt});
  CHECK(check_hilbert_proof(LogicId::K4h, nec).ok);
  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, nec, F("p -> p")).ok);

  HilbertProof hyp;
  hyp.hypotheses = {F("p")};
  hyp.lines.push_back({F("p"), Just::Hyp, {0}, std::nullopt});
  hyp.lines.push_back({F("[0]p"), Just::Nec, {0, 1}, std::nullopt});
  auto r = check_hilbert_proof(LogicId::K4h, hyp);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("2") != std::string::npos);
  // the sequent oracle agrees: p does not yield [0]p
  CHECK_FALSE(prove(LogicId::K4h, S("p => [0]p")));
}

TEST_CASE("check_hilbert_proof rejects bad lines") {
  HilbertProof bad_taut;
  bad_taut.lines.push_back({F("[0]p -> p"), Just::Taut, {}, std::nullopt});
  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, bad_taut).ok);

  HilbertProof bad_mp;
  bad_mp.lines.push_back({F("p -> p"), Just::Taut, {}, std::nullopt});
  bad_mp.lines.push_back({F("q"), Just::MP, {1, 1}, std::nullopt});
  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, bad_mp).ok);

  HilbertProof forward;
  forward.lines.push_back({F("q"), Just::MP, {2, 3}, std::nullopt});
  forward.lines.push_back({F("p"), Just::Taut, {}, std::nullopt});
  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, forward).ok);

  HilbertProof low_nec;
  low_nec.lines.push_back({F("[1]p -> [1]p"), Just::Taut, {}, std::nullopt});
  low_nec.lines.push_back({F("[2]([1]p -> [1]p)"), Just::Nec, {1, 1}, std::nullopt});
  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, low_nec).ok);

  HilbertProof t_in_k4h;
  t_in_k4h.lines.push_back({F("[0]p -> p"), Just::Axiom, {}, std::nullopt});
  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, t_in_k4h).ok);
  CHECK(check_hilbert_proof(LogicId::S4h, t_in_k4h).ok);

  CHECK_FALSE(check_hilbert_proof(LogicId::K4h, HilbertProof{}).ok);
}

TEST_CASE("tautology") {
  CHECK(tautology(F("p | -p")));
  CHECK(tautology(F("[0]p -> [0]p")));
  CHECK_FALSE(tautology(F("[0]p -> p")));
  CHECK(tautology(F("((p -> q) -> p) -> p")));
  CHECK_FALSE(tautology(F("p -> q")));
}

TEST_CASE("z_translate") {
  CHECK(z_translate(F("[1]p"), F("q"), 1) == F("[1](q -> p)"));
  CHECK(z_translate(F("[0]p"), F("q"), 1) == F("[0]p"));
  CHECK(z_translate(F("p & [1]p"), F("q"), 1) == F("p & [1](q -> p)"));
}

TEST_CASE("ProofBuilder helpers produce checkable proofs") {
  ProofBuilder b;
  int r = b.raise(0, 3, F("p"));
  CHECK(b.formula(r) == F("[0]p -> [3]p"));
  int l = b.lift_box(0, 2, F("p"));
  CHECK(b.formula(l) == F("[0]p -> [2][0]p"));
  int c = b.box_conj(1, {F("p"), F("q"), F("r")});
  CHECK(b.formula(c) == F("[1]p & [1]q & [1]r -> [1](p & q & r)"));
  CHECK(check_hilbert_proof(LogicId::K4h, b.proof()).ok);
  CHECK_THROWS_AS(b.taut(F("p")), PreconditionError);
}

TEST_CASE("strong_necessitation examples") {
  SUBCASE("one axiom instance") {
    HilbertProof p;
    p.hypotheses = {F("[0]p")};
    p.lines.push_back({F("[0]p"), Just::Hyp, {0}, std::nullopt});
    auto out = strong_necessitation(LogicId::K4h, {F("[0]p")}, F("[0]p"), 1, p);
    CHECK(check_hilbert_proof(LogicId::K4h, out, F("[1][0]p")).ok);
  }
  SUBCASE("plain necessitation") {
    HilbertProof p;
    p.lines.push_back({F("p -> p"), Just::Taut, {}, std::nullopt});
    auto out = strong_necessitation(LogicId::K4h, {}, F("p -> p"), 0, p);
    CHECK(check_hilbert_proof(LogicId::K4h, out, F("[0](p -> p)")).ok);
  }
  SUBCASE("composite premises in s4h") {
    std::vector<Formula> prem{F("[0]p"), F("[1]([0]p -> q)")};
    HilbertProof p;
    p.hypotheses = prem;
    p.lines.push_back({F("[0]p"), Just::Hyp, {0}, std::nullopt});
    p.lines.push_back({F("[1]([0]p -> q)"), Just::Hyp, {1}, std::nullopt});
    p.lines.push_back({F("[1]([0]p -> q) -> [0]p -> q"), Just::Axiom, {}, std::nullopt});
    p.lines.push_back({F("[0]p -> q"), Just::MP, {2, 3}, std::nullopt});
    p.lines.push_back({F("q"), Just::MP, {1, 4}, std::nullopt});
    auto out = strong_necessitation(LogicId::S4h, prem, F("q"), 1, p);
    CHECK(check_hilbert_proof(LogicId::S4h, out, F("[1]q")).ok);
    // sequent oracle for the same consequence
    CHECK(prove(LogicId::K4h, S("[0]p, [1]([0]p -> q) => [1]q")));
  }
  SUBCASE("preconditions") {
    HilbertProof p;
    p.lines.push_back({F("p -> p"), Just::Taut, {}, std::nullopt});
    CHECK_THROWS_AS(strong_necessitation(LogicId::KD4h, {}, F("p -> p"), 0, p), PreconditionError);
    CHECK_THROWS_AS(strong_necessitation(LogicId::K4h, {F("[2]q")}, F("p -> p"), 1, p), PreconditionError);
  }
}
