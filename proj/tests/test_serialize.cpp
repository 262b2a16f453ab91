#include <doctest.h>

#include <json.hpp>

#include "hml/search.hpp"
#include "hml/serialize.hpp"
#include "hml/simulate.hpp"
#include "support.hpp"

using namespace hml;
using hml::testing::F;

TEST_CASE("derivation JSON shape") {
  auto d = prove_formula(LogicId::K4h, F("[0](p -> p)"));
  REQUIRE(d);
  auto j = nlohmann::json::parse(derivation_to_json(*d));
  CHECK(j["sequent"]["left"].empty());
  CHECK(j["sequent"]["right"][0] == "[0](p -> p)");
  CHECK(j["rule"] == "Box4hR");
  CHECK(j["data"]["n"] == 0);
  CHECK(j["premises"].size() == 1);
}

TEST_CASE("derivation JSON round trip") {
  for (const char* s : {"[0](p -> q) -> [0]p -> [0]q", "[1]([0]p -> p)", "-[0]bot"}) {
    CAPTURE(s);
    for (LogicId l : {LogicId::K4h, LogicId::KD4h, LogicId::S4h}) {
      auto d = prove_formula(l, F(s));
      if (!d) continue;
      std::string text = derivation_to_json(*d);
      Proof back = derivation_from_json(text);
      CHECK(derivation_to_json(back) == text);
      CHECK(check_derivation(l, back).ok);
    }
  }
}

TEST_CASE("hilbert JSON round trip") {
  auto d = prove_formula(LogicId::K4h, F("[0]p -> [2][0]p"));
  REQUIRE(d);
  HilbertProof h = hilbert_from_derivation(LogicId::K4h, *d);
  std::string text = hilbert_to_json(h);
  HilbertProof back = hilbert_from_json(text);
  CHECK(hilbert_to_json(back) == text);
  CHECK(check_hilbert_proof(LogicId::K4h, back, F("[0]p -> [2][0]p")).ok);
}

TEST_CASE("malformed JSON") {
  CHECK_THROWS_AS(derivation_from_json("{"), SyntaxError);
  CHECK_THROWS_AS(derivation_from_json("[]"), SyntaxError);
  CHECK_THROWS_AS(derivation_from_json(R"({"sequent":{"left":[],"right":["p"]},"rule":"Nope"})"), SyntaxError);
  CHECK_THROWS_AS(derivation_from_json(R"({"sequent":{"left":[],"right":[1]},"rule":"Ax"})"), SyntaxError);
  CHECK_THROWS_AS(hilbert_from_json(R"({"lines":[{"formula":"p","rule":"Guess","args":[]}]})"), SyntaxError);
  CHECK_THROWS_AS(hilbert_from_json(R"({"lines":[{"formula":"p","rule":"Axiom","args":["Q"]}]})"), SyntaxError);
}

TEST_CASE("reading does not check") {
  Proof d = derivation_from_json(R"({"sequent":{"left":[],"right":["p"]},"rule":"Ax","data":{},"premises":[]})");
  CHECK_FALSE(check_derivation(LogicId::K4h, d).ok);
}
