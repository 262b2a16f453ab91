// hml: command-line front end.
//
// Exit codes: 0 success or provable, 1 not provable or invalid input,
// 2 usage or I/O error (and logics without a decision procedure),
// 3 resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hml/cutelim.hpp"
#include "hml/props.hpp"
#include "hml/search.hpp"
#include "hml/serialize.hpp"
#include "hml/translate.hpp"

namespace {

using namespace hml;

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LogicId logic_arg(const std::string& name) {
  auto id = logic_from_name(name);
  if (!id) throw CLI::ValidationError("--logic", "unknown logic '" + name + "'");
  return *id;
}

int cmd_parse(const std::string& text) {
  std::cout << to_string(parse_formula(text)) << "\n";
  return kOk;
}

int cmd_check_wff(const std::string& text) {
  RawFormula raw = parse_raw(text);
  if (is_wff_h(raw)) {
    std::cout << "ok\n";
    return kOk;
  }
  try {
    build(raw);
  } catch (const NestingError& e) {
    std::cout << "NestingError: " << e.what() << "\n";
    return kNo;
  } catch (const SortError& e) {
    std::cout << "SortError: " << e.what() << "\n";
    return kNo;
  }
  std::cout << "not an L-infinity formula\n";
  return kNo;
}

int cmd_prove(LogicId logic, const std::string& text, std::size_t budget) {
  SearchOptions opt;
  opt.node_budget = budget;
  std::optional<Proof> d;
  if (text.find("=>") != std::string::npos) {
    if (logic == LogicId::GLh || !has_calculus(logic))
      throw Unsupported("sequent input needs a logic with a sequent calculus");
    d = prove(logic, parse_sequent(text), opt);
  } else {
    Verdict v = decide(logic, parse_formula(text), opt);
    d = v.derivation;
  }
  if (!d) {
    std::cout << "not provable\n";
    return kNo;
  }
  std::cout << derivation_to_json(*d) << "\n";
  return kOk;
}

int cmd_check_proof(const std::string& system, LogicId logic, const std::string& file,
                    const std::string& goal) {
  std::string text = read_input(file);
  CheckResult r;
  if (system == "hilbert") {
    std::optional<Formula> g;
    if (!goal.empty()) g = parse_formula(goal);
    r = check_hilbert_proof(logic, hilbert_from_json(text), g);
  } else {
    Proof d = derivation_from_json(text);
    r = check_derivation(logic, d);
    if (r && !goal.empty() && !(d->conclusion() == parse_sequent(goal))) r = {false, "endsequent differs from goal"};
  }
  if (!r) {
    std::cout << "invalid: " << r.message << "\n";
    return kNo;
  }
  std::cout << "valid\n";
  return kOk;
}

int cmd_cutelim(LogicId logic, const std::string& file) {
  Proof d = derivation_from_json(read_input(file));
  if (auto r = check_derivation(logic, d); !r) {
    std::cout << "invalid: " << r.message << "\n";
    return kNo;
  }
  std::cout << derivation_to_json(eliminate_cuts(logic, d)) << "\n";
  return kOk;
}

int cmd_translate(const std::string& dir, const std::string& text) {
  if (dir == "t") {
    std::cout << to_string(t_translate(parse_h(text))) << "\n";
  } else if (dir == "s") {
    Formula b = parse_u(text);
    if (!classify_x(b).member()) {
      std::cout << "not in X: " << to_string(b) << "\n";
      return kNo;
    }
    std::cout << to_string(s_translate(b)) << "\n";
  } else {
    auto [f, w] = forgetful_f(parse_h(text));
    std::cout << to_string(f) << "\n" << to_string(w) << "\n";
  }
  return kOk;
}

int cmd_witness(const std::string& formula, const std::string& witness) {
  Formula b = parse_u(formula);
  Witness w = parse_witness(witness);
  if (!check_witness(w, b)) {
    std::cout << "invalid\n";
    return kNo;
  }
  std::cout << "valid\n" << to_string(apply_witness(b, w)) << "\n";
  return kOk;
}

int cmd_split(LogicId logic, int n, const std::string& a, int m, const std::string& b, std::size_t budget) {
  SearchOptions opt;
  opt.node_budget = budget;
  Split s = disjunction_split(logic, n, parse_h(a), m, parse_h(b), opt);
  std::cout << split_name(s) << "\n";
  return s == Split::NotTheorem ? kNo : kOk;
}

int cmd_corpus(std::uint64_t seed, std::size_t count, int depth, int max_index, LogicId logic, std::size_t budget) {
  SearchOptions opt;
  opt.node_budget = budget;
  if (logic == LogicId::KD45h || logic == LogicId::S5h)
    throw Unsupported("no decision procedure for " + std::string(logic_name(logic)));
  auto corpus = gen_corpus(seed, count, depth, max_index);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    nlohmann::ordered_json j;
    j["index"] = i;
    j["formula"] = to_string(corpus[i]);
    j["logic"] = std::string(logic_name(logic));
    try {
      j["provable"] = decide(logic, corpus[i], opt).provable;
    } catch (const ResourceLimit&) {
      j["provable"] = nullptr;
      j["error"] = "resource-limit";
    }
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for hierarchical provability logics"};
  app.require_subcommand(1);
  std::size_t budget = SearchOptions{}.node_budget;
  app.add_option("--budget", budget, "Node budget of proof search")->capture_default_str();

  std::string text, logic_name_arg, system, file, goal, dir, witness, a, b;
  int n = 0, m = 0, depth = 4, max_index = 3;
  std::uint64_t seed = 0;
  std::size_t count = 100;

  auto* parse = app.add_subcommand("parse", "Parse and print a formula");
  parse->add_option("formula", text)->required();

  auto* wff = app.add_subcommand("check-wff", "Check the index-nesting constraint");
  wff->add_option("formula", text)->required();

  auto* prv = app.add_subcommand("prove", "Search for a cut-free derivation");
  prv->add_option("--logic", logic_name_arg)->required();
  prv->add_option("input", text, "Formula or sequent 'A, B => C'")->required();

  auto* chk = app.add_subcommand("check-proof", "Check a proof object (JSON)");
  chk->add_option("--system", system)->required()->check(CLI::IsMember({"hilbert", "sequent"}));
  chk->add_option("--logic", logic_name_arg)->required();
  chk->add_option("--goal", goal, "Expected conclusion (formula or sequent)");
  chk->add_option("file", file, "Path, or - for stdin")->required();

  auto* cut = app.add_subcommand("cutelim", "Eliminate cuts from a derivation (JSON)");
  cut->add_option("--logic", logic_name_arg)->required();
  cut->add_option("file", file, "Path, or - for stdin")->required();

  auto* tr = app.add_subcommand("translate", "Apply translation t, s or f");
  tr->add_option("--dir", dir)->required()->check(CLI::IsMember({"t", "s", "f"}));
  tr->add_option("formula", text)->required();

  auto* wit = app.add_subcommand("witness", "Check a witness against a uni-modal formula");
  wit->add_option("--formula", text)->required();
  wit->add_option("--check", witness)->required();

  auto* spl = app.add_subcommand("split", "Strong disjunction property: which of [n]A | [m]B");
  spl->add_option("--logic", logic_name_arg)->required();
  spl->add_option("n", n)->required();
  spl->add_option("A", a)->required();
  spl->add_option("m", m)->required();
  spl->add_option("B", b)->required();

  auto* cor = app.add_subcommand("corpus", "Decide a generated corpus, one JSON line per formula");
  cor->add_option("--seed", seed)->required();
  cor->add_option("--count", count)->required();
  cor->add_option("--depth", depth)->required();
  cor->add_option("--max-index", max_index)->required();
  cor->add_option("--logic", logic_name_arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse) return cmd_parse(text);
    if (*wff) return cmd_check_wff(text);
    if (*prv) return cmd_prove(logic_arg(logic_name_arg), text, budget);
    if (*chk) return cmd_check_proof(system, logic_arg(logic_name_arg), file, goal);
    if (*cut) return cmd_cutelim(logic_arg(logic_name_arg), file);
    if (*tr) return cmd_translate(dir, text);
    if (*wit) return cmd_witness(text, witness);
    if (*spl) return cmd_split(logic_arg(logic_name_arg), n, a, m, b, budget);
    if (*cor) return cmd_corpus(seed, count, depth, max_index, logic_arg(logic_name_arg), budget);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kLimit;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const hml::Error& e) {
    std::cerr << e.what() << "\n";
    return kNo;
  }
  return kUsage;
}
