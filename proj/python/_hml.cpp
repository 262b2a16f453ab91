#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hml/cutelim.hpp"
#include "hml/hilbert_build.hpp"
#include "hml/props.hpp"
#include "hml/serialize.hpp"
#include "hml/simulate.hpp"
#include "hml/translate.hpp"

namespace py = pybind11;
using namespace hml;

namespace {

LogicId logic(const std::string& name) {
  auto id = logic_from_name(name);
  if (!id) throw PreconditionError("unknown logic '" + name + "'");
  return *id;
}

SearchOptions budget(std::size_t nodes) {
  SearchOptions o;
  o.node_budget = nodes;
  return o;
}

py::object derivation_or_none(const std::optional<Proof>& d) {
  if (!d) return py::none();
  return py::str(derivation_to_json(*d));
}

}  // namespace

PYBIND11_MODULE(_hml, m) {
  m.doc() = "Hierarchical provability logics: parsing, proof search, proof checking, translations";

  auto base = py::register_exception<Error>(m, "HmlError");
  py::register_exception<SyntaxError>(m, "SyntaxError", base.ptr());
  py::register_exception<NestingError>(m, "NestingError", base.ptr());
  py::register_exception<SortError>(m, "SortError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", base.ptr());
  py::register_exception<NotXProof>(m, "NotXProof", base.ptr());

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse_formula(text); }), py::arg("text"))
      .def_property_readonly("rank", &Formula::rank)
      .def_property_readonly("complexity", &Formula::complexity)
      .def_property_readonly("is_hierarchical", &Formula::is_hierarchical)
      .def_property_readonly("is_unimodal", &Formula::is_unimodal)
      .def("__str__", [](const Formula& f) { return to_string(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + to_string(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); });

  m.def("parse", [](const std::string& t) { return to_string(parse_formula(t)); }, py::arg("text"),
        "Parse a formula and print it in normal form.");
  m.def("is_wff", [](const std::string& t) { return is_wff_h(parse_raw(t)); }, py::arg("text"));
  m.def("rank", [](const std::string& t) { return parse_formula(t).rank(); }, py::arg("text"));

  m.def(
      "prove",
      [](const std::string& lg, const std::string& input, std::size_t nodes) {
        if (input.find("=>") != std::string::npos)
          return derivation_or_none(prove(logic(lg), parse_sequent(input), budget(nodes)));
        return derivation_or_none(decide(logic(lg), parse_formula(input), budget(nodes)).derivation);
      },
      py::arg("logic"), py::arg("input"), py::arg("node_budget") = SearchOptions{}.node_budget,
      "Derivation JSON of a formula or sequent, or None when not provable.");
  m.def(
      "decide",
      [](const std::string& lg, const std::string& f, std::size_t nodes) {
        return decide(logic(lg), parse_formula(f), budget(nodes)).provable;
      },
      py::arg("logic"), py::arg("formula"), py::arg("node_budget") = SearchOptions{}.node_budget);

  m.def(
      "check_derivation",
      [](const std::string& lg, const std::string& json) {
        auto r = check_derivation(logic(lg), derivation_from_json(json));
        return py::make_tuple(r.ok, r.message);
      },
      py::arg("logic"), py::arg("json"));
  m.def(
      "check_hilbert",
      [](const std::string& lg, const std::string& json, std::optional<std::string> goal) {
        std::optional<Formula> g;
        if (goal) g = parse_formula(*goal);
        auto r = check_hilbert_proof(logic(lg), hilbert_from_json(json), g);
        return py::make_tuple(r.ok, r.message);
      },
      py::arg("logic"), py::arg("json"), py::arg("goal") = py::none());
  m.def(
      "hilbert_from_derivation",
      [](const std::string& lg, const std::string& json) {
        return hilbert_to_json(hilbert_from_derivation(logic(lg), derivation_from_json(json)));
      },
      py::arg("logic"), py::arg("json"));
  m.def(
      "derivation_from_hilbert",
      [](const std::string& lg, const std::string& json) {
        return derivation_to_json(derivation_from_hilbert(logic(lg), hilbert_from_json(json)));
      },
      py::arg("logic"), py::arg("json"));
  m.def(
      "eliminate_cuts",
      [](const std::string& lg, const std::string& json) {
        return derivation_to_json(eliminate_cuts(logic(lg), derivation_from_json(json)));
      },
      py::arg("logic"), py::arg("json"));
  m.def(
      "strong_necessitation",
      [](const std::string& lg, const std::vector<std::string>& premises, const std::string& a, int n,
         const std::string& json) {
        std::vector<Formula> ps;
        for (const auto& p : premises) ps.push_back(parse_formula(p));
        return hilbert_to_json(strong_necessitation(logic(lg), ps, parse_formula(a), n, hilbert_from_json(json)));
      },
      py::arg("logic"), py::arg("premises"), py::arg("a"), py::arg("n"), py::arg("json"));

  m.def("t_translate", [](const std::string& f) { return to_string(t_translate(parse_formula(f))); });
  m.def("s_translate", [](const std::string& f) { return to_string(s_translate(parse_formula(f))); });
  m.def("forgetful", [](const std::string& f) {
    auto [u, w] = forgetful_f(parse_formula(f));
    return py::make_tuple(to_string(u), to_string(w));
  });
  m.def("check_witness", [](const std::string& w, const std::string& f) {
    return check_witness(parse_witness(w), parse_formula(f));
  });
  m.def("apply_witness", [](const std::string& f, const std::string& w) {
    return to_string(apply_witness(parse_formula(f), parse_witness(w)));
  });
  m.def("canonical_witness", [](const std::string& f) { return to_string(canonical_witness(parse_formula(f))); });
  m.def(
      "normalize_indices_gl",
      [](const std::string& f, int target) { return to_string(normalize_indices_gl(parse_formula(f), target)); },
      py::arg("formula"), py::arg("target") = 0);

  m.def(
      "split",
      [](const std::string& lg, int n, const std::string& a, int k, const std::string& b) {
        return std::string(split_name(disjunction_split(logic(lg), n, parse_formula(a), k, parse_formula(b))));
      },
      py::arg("logic"), py::arg("n"), py::arg("a"), py::arg("m"), py::arg("b"));
  m.def(
      "gen_corpus",
      [](std::uint64_t seed, std::size_t count, int depth, int max_index) {
        std::vector<std::string> out;
        for (const auto& f : gen_corpus(seed, count, depth, max_index)) out.push_back(to_string(f));
        return out;
      },
      py::arg("seed"), py::arg("count"), py::arg("max_depth"), py::arg("max_index"));
}
