#include "hml/serialize.hpp"

#include <json.hpp>
#include <unordered_map>

namespace hml {

using nlohmann::json;

namespace {

json formulas(const std::vector<Formula>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

std::vector<Formula> read_formulas(const json& j) {
  if (!j.is_array()) throw SyntaxError("expected an array of formulas");
  std::vector<Formula> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw SyntaxError("formulas are written as strings");
    out.push_back(parse_formula(x.get<std::string>()));
  }
  return out;
}

json to_json(const Proof& d, std::unordered_map<const Derivation*, json>& memo) {
  if (auto it = memo.find(d.get()); it != memo.end()) return it->second;
  json j;
  j["sequent"] = {{"left", formulas(d->conclusion().left)}, {"right", formulas(d->conclusion().right)}};
  j["rule"] = std::string(rule_name(d->rule()));
  json data = json::object();
  if (d->data().principal) data["principal"] = to_string(*d->data().principal);
  if (d->data().n >= 0) data["n"] = d->data().n;
  if (d->data().side >= 0) data["side"] = d->data().side;
  j["data"] = data;
  json ps = json::array();
  for (const auto& p : d->premises()) ps.push_back(to_json(p, memo));
  j["premises"] = ps;
  memo.emplace(d.get(), j);
  return j;
}

Proof from_json(const json& j) {
  if (!j.is_object()) throw SyntaxError("derivation node must be an object");
  try {
    const json& s = j.at("sequent");
    Sequent seq{read_formulas(s.at("left")), read_formulas(s.at("right"))};
    auto rule = rule_from_name(j.at("rule").get<std::string>());
    if (!rule) throw SyntaxError("unknown rule " + j.at("rule").dump());
    RuleData data;
    if (j.contains("data")) {
      const json& x = j.at("data");
      if (x.contains("principal")) data.principal = parse_formula(x.at("principal").get<std::string>());
      if (x.contains("n")) data.n = x.at("n").get<int>();
      if (x.contains("side")) data.side = x.at("side").get<int>();
    }
    std::vector<Proof> ps;
    if (j.contains("premises"))
      for (const auto& p : j.at("premises")) ps.push_back(from_json(p));
    return std::make_shared<const Derivation>(std::move(seq), *rule, std::move(ps), data);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("derivation JSON: ") + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("JSON: ") + e.what());
  }
}

}  // namespace

std::string derivation_to_json(const Proof& d, int indent) {
  std::unordered_map<const Derivation*, json> memo;
  return to_json(d, memo).dump(indent);
}

Proof derivation_from_json(std::string_view text) { return from_json(parse_json(text)); }

std::string hilbert_to_json(const HilbertProof& p, int indent) {
  json j;
  j["hypotheses"] = formulas(p.hypotheses);
  json lines = json::array();
  for (const auto& ln : p.lines) {
    json args = json::array();
    if (ln.rule == Just::Axiom) {
      if (ln.scheme) args.push_back(std::string(scheme_name(*ln.scheme)));
    } else {
      for (int a : ln.args) args.push_back(a);
    }
    lines.push_back({{"formula", to_string(ln.formula)}, {"rule", std::string(just_name(ln.rule))}, {"args", args}});
  }
  j["lines"] = lines;
  return j.dump(indent);
}

HilbertProof hilbert_from_json(std::string_view text) {
  json j = parse_json(text);
  HilbertProof p;
  try {
    if (j.contains("hypotheses")) p.hypotheses = read_formulas(j.at("hypotheses"));
    for (const auto& x : j.at("lines")) {
      HilbertLine ln{parse_formula(x.at("formula").get<std::string>()), Just::Taut, {}, std::nullopt};
      auto rule = just_from_name(x.at("rule").get<std::string>());
      if (!rule) throw SyntaxError("unknown justification " + x.at("rule").dump());
      ln.rule = *rule;
      if (x.contains("args"))
        for (const auto& a : x.at("args")) {
          if (a.is_string()) {
            auto s = scheme_from_name(a.get<std::string>());
            if (!s) throw SyntaxError("unknown axiom scheme " + a.dump());
            ln.scheme = *s;
          } else {
            ln.args.push_back(a.get<int>());
          }
        }
      p.lines.push_back(std::move(ln));
    }
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("Hilbert proof JSON: ") + e.what());
  }
  return p;
}

}  // namespace hml
