#include "hml/sequent.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <unordered_set>
#include <utility>

namespace hml {

bool same_multiset(std::span<const Formula> a, std::span<const Formula> b) {
  if (a.size() != b.size()) return false;
  std::vector<Formula> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

bool operator==(const Sequent& a, const Sequent& b) {
  return same_multiset(a.left, b.left) && same_multiset(a.right, b.right);
}

std::size_t count_of(std::span<const Formula> ms, const Formula& f) {
  return static_cast<std::size_t>(std::count(ms.begin(), ms.end(), f));
}

bool contains(std::span<const Formula> ms, const Formula& f) {
  return std::find(ms.begin(), ms.end(), f) != ms.end();
}

std::vector<Formula> remove_one(std::span<const Formula> ms, const Formula& f) {
  std::vector<Formula> out(ms.begin(), ms.end());
  auto it = std::find(out.begin(), out.end(), f);
  if (it == out.end()) throw PreconditionError("formula not present: " + to_string(f));
  out.erase(it);
  return out;
}

std::vector<Formula> remove_all(std::span<const Formula> ms, const Formula& f) {
  std::vector<Formula> out;
  for (const auto& g : ms)
    if (g != f) out.push_back(g);
  return out;
}

std::vector<Formula> concat(std::span<const Formula> a, std::span<const Formula> b) {
  std::vector<Formula> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Formula> as_set(std::span<const Formula> ms) {
  std::vector<Formula> out(ms.begin(), ms.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.left.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.left[i]);
  }
  out += s.left.empty() ? "=>" : " =>";
  for (std::size_t i = 0; i < s.right.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.right[i]);
  }
  return out;
}

namespace {

std::vector<Formula> parse_side(std::string_view text) {
  std::vector<Formula> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = std::all_of(piece.begin(), piece.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(parse_formula(piece));
    else if (!out.empty() || end != text.size()) throw SyntaxError("empty formula in sequent");
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text) {
  auto arrow = text.find("=>");
  if (arrow == std::string_view::npos) return Sequent{{}, {parse_formula(text)}};
  if (text.find("=>", arrow + 2) != std::string_view::npos)
    throw SyntaxError("more than one '=>' in sequent");
  Sequent s{parse_side(text.substr(0, arrow)), parse_side(text.substr(arrow + 2))};
  bool ibox = false, ubox = false;
  for (const auto* side : {&s.left, &s.right})
    for (const auto& f : *side) {
      ibox = ibox || f.has_indexed_box();
      ubox = ubox || f.has_plain_box();
    }
  if (ibox && ubox) throw SortError("sequent mixes indexed and plain boxes");
  return s;
}

Formula sequent_formula(const Sequent& s) {
  Formula rhs = big_or(s.right);
  if (s.left.empty()) return rhs;
  return Formula::imp(big_and(s.left), rhs);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 25> kRuleNames{{
    {Rule::Ax, "Ax"},         {Rule::BotL, "BotL"},     {Rule::TopR, "TopR"},
    {Rule::wL, "wL"},         {Rule::wR, "wR"},         {Rule::cL, "cL"},
    {Rule::cR, "cR"},         {Rule::Cut, "Cut"},       {Rule::AndL, "AndL"},
    {Rule::AndR, "AndR"},     {Rule::OrL, "OrL"},       {Rule::OrR, "OrR"},
    {Rule::ImpL, "ImpL"},     {Rule::ImpR, "ImpR"},     {Rule::NegL, "NegL"},
    {Rule::NegR, "NegR"},     {Rule::Box4hR, "Box4hR"}, {Rule::BoxDhR, "BoxDhR"},
    {Rule::BoxhL, "BoxhL"},   {Rule::BoxShR, "BoxShR"}, {Rule::Box4R, "Box4R"},
    {Rule::BoxDR, "BoxDR"},   {Rule::BoxSR, "BoxSR"},   {Rule::BoxL, "BoxL"},
    {Rule::GLR, "GLR"},
}};

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

}  // namespace

std::string_view rule_name(Rule r) {
  for (auto [id, name] : kRuleNames)
    if (id == r) return name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (auto [id, n] : kRuleNames)
    if (n == name) return id;
  return std::nullopt;
}

bool is_structural(Rule r) {
  return r == Rule::wL || r == Rule::wR || r == Rule::cL || r == Rule::cR;
}

bool is_right_modal(Rule r) {
  switch (r) {
    case Rule::Box4hR:
    case Rule::BoxDhR:
    case Rule::BoxShR:
    case Rule::Box4R:
    case Rule::BoxDR:
    case Rule::BoxSR:
    case Rule::GLR:
      return true;
    default:
      return false;
  }
}

bool rule_in_calculus(LogicId calculus, Rule r) {
  if (static_cast<int>(r) <= static_cast<int>(Rule::NegR)) return true;
  switch (calculus) {
    case LogicId::K4h:
      return r == Rule::Box4hR;
    case LogicId::KD4h:
      return r == Rule::Box4hR || r == Rule::BoxDhR;
    case LogicId::S4h:
      return r == Rule::BoxShR || r == Rule::BoxhL;
    case LogicId::K4:
    case LogicId::K4Q:
      return r == Rule::Box4R;
    case LogicId::KD4:
      return r == Rule::Box4R || r == Rule::BoxDR;
    case LogicId::S4:
    case LogicId::S4Q:
      return r == Rule::BoxSR || r == Rule::BoxL;
    case LogicId::GL:
      return r == Rule::GLR;
    default:
      return false;
  }
}

Derivation::Derivation(Sequent conclusion, Rule rule, std::vector<Proof> premises, RuleData data)
    : conclusion_(std::move(conclusion)),
      rule_(rule),
      premises_(std::move(premises)),
      data_(std::move(data)) {
  for (const auto& p : premises_) {
    height_ = std::max(height_, p->height() + 1);
    size_ = sat_add(size_, p->tree_size());
    max_cut_ = std::max(max_cut_, p->max_cut_complexity());
  }
  if (rule_ == Rule::Cut && data_.principal)
    max_cut_ = std::max(max_cut_, data_.principal->complexity());
}

std::vector<std::size_t> cut_complexities(const Proof& d) {
  std::vector<std::size_t> out;
  std::vector<const Derivation*> stack{d.get()};
  while (!stack.empty()) {
    const Derivation* n = stack.back();
    stack.pop_back();
    if (n->cut_free()) continue;
    if (n->rule() == Rule::Cut) out.push_back(n->principal().complexity());
    for (const auto& p : n->premises()) stack.push_back(p.get());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------
// Local rule checking

namespace rules {

std::vector<Formula> modal_premise_left(Rule r, int n, std::span<const Formula> context,
                                        const std::optional<Formula>& principal) {
  std::vector<Formula> out;
  for (const auto& c : context) {
    switch (r) {
      case Rule::Box4hR:
      case Rule::BoxDhR:
      case Rule::BoxShR:
        if (!c.is_box() || c.index() > n)
          throw PreconditionError("context formula " + to_string(c) + " is not a box of index <= " +
                                  std::to_string(n));
        if (c.index() == n) {
          out.push_back(c.child());
        } else {
          if (r != Rule::BoxShR) out.push_back(c.child());
          out.push_back(c);
        }
        break;
      case Rule::Box4R:
      case Rule::BoxDR:
      case Rule::GLR:
        if (!c.is_ubox()) throw PreconditionError("context formula " + to_string(c) + " is not boxed");
        out.push_back(c.child());
        out.push_back(c);
        break;
      case Rule::BoxSR:
        if (!c.is_ubox()) throw PreconditionError("context formula " + to_string(c) + " is not boxed");
        out.push_back(c);
        break;
      default:
        throw PreconditionError("not a right modal rule");
    }
  }
  if (r == Rule::GLR && principal) out.push_back(*principal);
  return out;
}

}  // namespace rules

namespace {

std::string node_label(const Derivation& d) {
  return std::string(rule_name(d.rule())) + " node concluding " + to_string(d.conclusion());
}

std::optional<std::string> check_sort(LogicId calculus, const Sequent& s) {
  bool hier = is_hierarchical(calculus);
  for (const auto* side : {&s.left, &s.right})
    for (const auto& f : *side) {
      if (hier && f.has_plain_box())
        return "plain box in a hierarchical calculus: " + to_string(f);
      if (!hier && f.has_indexed_box())
        return "indexed box in a uni-modal calculus: " + to_string(f);
    }
  return std::nullopt;
}

std::optional<std::string> check_local(const Derivation& d) {
  const Sequent& c = d.conclusion();
  const auto& ps = d.premises();
  const auto& pr = d.data().principal;
  auto need_premises = [&](std::size_t k) -> std::optional<std::string> {
    if (ps.size() != k) return "expected " + std::to_string(k) + " premises, found " + std::to_string(ps.size());
    return std::nullopt;
  };
  auto need_principal = [&](std::optional<Kind> k) -> std::optional<std::string> {
    if (!pr) return std::string("missing principal formula");
    if (k && pr->kind() != *k) return "principal formula has the wrong shape: " + to_string(*pr);
    return std::nullopt;
  };
  auto mismatch = [&]() -> std::optional<std::string> {
    return std::string("conclusion does not follow from the premises");
  };
  auto P = [&](std::size_t i) -> const Sequent& { return ps[i]->conclusion(); };
  auto has = [](const std::vector<Formula>& v, const Formula& f) { return contains(v, f); };

#define HML_TRY(expr)                  \
  if (auto err_ = (expr); err_) return err_;

  switch (d.rule()) {
    case Rule::Ax:
      HML_TRY(need_premises(0));
      HML_TRY(need_principal(std::nullopt));
      if (!(c.left.size() == 1 && c.right.size() == 1 && c.left[0] == *pr && c.right[0] == *pr))
        return std::string("axiom must be exactly A => A");
      return std::nullopt;
    case Rule::BotL:
      HML_TRY(need_premises(0));
      if (!(c.left.size() == 1 && c.right.empty() && c.left[0].is(Kind::Bot)))
        return std::string("axiom must be exactly bot =>");
      return std::nullopt;
    case Rule::TopR:
      HML_TRY(need_premises(0));
      if (!(c.left.empty() && c.right.size() == 1 && c.right[0].is(Kind::Top)))
        return std::string("axiom must be exactly => top");
      return std::nullopt;
    case Rule::wL:
    case Rule::wR: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(std::nullopt));
      bool left = d.rule() == Rule::wL;
      const auto& grow = left ? c.left : c.right;
      const auto& keep = left ? c.right : c.left;
      const auto& pgrow = left ? P(0).left : P(0).right;
      const auto& pkeep = left ? P(0).right : P(0).left;
      if (!same_multiset(keep, pkeep) || !same_multiset(grow, concat(pgrow, std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::cL:
    case Rule::cR: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(std::nullopt));
      bool left = d.rule() == Rule::cL;
      const auto& grow = left ? c.left : c.right;
      const auto& keep = left ? c.right : c.left;
      const auto& pgrow = left ? P(0).left : P(0).right;
      const auto& pkeep = left ? P(0).right : P(0).left;
      if (!has(grow, *pr)) return std::string("contracted formula absent from conclusion");
      if (!same_multiset(keep, pkeep) || !same_multiset(pgrow, concat(grow, std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::Cut: {
      HML_TRY(need_premises(2));
      HML_TRY(need_principal(std::nullopt));
      if (!has(P(0).right, *pr) || !has(P(1).left, *pr))
        return std::string("cut formula missing from a premise");
      if (!same_multiset(c.left, concat(P(0).left, remove_one(P(1).left, *pr))) ||
          !same_multiset(c.right, concat(remove_one(P(0).right, *pr), P(1).right)))
        return mismatch();
      return std::nullopt;
    }
    case Rule::AndL: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(Kind::And));
      if (d.data().side != 0 && d.data().side != 1) return std::string("AndL side must be 0 or 1");
      const Formula& part = d.data().side == 0 ? pr->left() : pr->right();
      if (!has(P(0).left, part)) return std::string("active conjunct missing from premise");
      if (!same_multiset(c.right, P(0).right) ||
          !same_multiset(c.left, concat(remove_one(P(0).left, part), std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::OrR: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(Kind::Or));
      if (d.data().side != 0 && d.data().side != 1) return std::string("OrR side must be 0 or 1");
      const Formula& part = d.data().side == 0 ? pr->left() : pr->right();
      if (!has(P(0).right, part)) return std::string("active disjunct missing from premise");
      if (!same_multiset(c.left, P(0).left) ||
          !same_multiset(c.right, concat(remove_one(P(0).right, part), std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::AndR: {
      HML_TRY(need_premises(2));
      HML_TRY(need_principal(Kind::And));
      if (!has(P(0).right, pr->left()) || !has(P(1).right, pr->right()))
        return std::string("active conjunct missing from premise");
      auto right = concat(remove_one(P(0).right, pr->left()), remove_one(P(1).right, pr->right()));
      right.push_back(*pr);
      if (!same_multiset(c.left, concat(P(0).left, P(1).left)) || !same_multiset(c.right, right))
        return mismatch();
      return std::nullopt;
    }
    case Rule::OrL: {
      HML_TRY(need_premises(2));
      HML_TRY(need_principal(Kind::Or));
      if (!has(P(0).left, pr->left()) || !has(P(1).left, pr->right()))
        return std::string("active disjunct missing from premise");
      auto left = concat(remove_one(P(0).left, pr->left()), remove_one(P(1).left, pr->right()));
      left.push_back(*pr);
      if (!same_multiset(c.left, left) || !same_multiset(c.right, concat(P(0).right, P(1).right)))
        return mismatch();
      return std::nullopt;
    }
    case Rule::ImpL: {
      HML_TRY(need_premises(2));
      HML_TRY(need_principal(Kind::Imp));
      if (!has(P(0).right, pr->left()) || !has(P(1).left, pr->right()))
        return std::string("active subformula missing from premise");
      auto left = concat(P(0).left, remove_one(P(1).left, pr->right()));
      left.push_back(*pr);
      if (!same_multiset(c.left, left) ||
          !same_multiset(c.right, concat(remove_one(P(0).right, pr->left()), P(1).right)))
        return mismatch();
      return std::nullopt;
    }
    case Rule::ImpR: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(Kind::Imp));
      if (!has(P(0).left, pr->left()) || !has(P(0).right, pr->right()))
        return std::string("active subformula missing from premise");
      if (!same_multiset(c.left, remove_one(P(0).left, pr->left())) ||
          !same_multiset(c.right, concat(remove_one(P(0).right, pr->right()), std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::NegL:
    case Rule::NegR: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(Kind::Neg));
      bool left = d.rule() == Rule::NegL;
      const auto& from = left ? P(0).right : P(0).left;
      const auto& to = left ? P(0).left : P(0).right;
      const auto& cfrom = left ? c.right : c.left;
      const auto& cto = left ? c.left : c.right;
      if (!has(from, pr->child())) return std::string("negated formula missing from premise");
      if (!same_multiset(cfrom, remove_one(from, pr->child())) ||
          !same_multiset(cto, concat(to, std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::BoxhL:
    case Rule::BoxL: {
      HML_TRY(need_premises(1));
      HML_TRY(need_principal(d.rule() == Rule::BoxhL ? Kind::Box : Kind::UBox));
      if (!has(P(0).left, pr->child())) return std::string("unboxed formula missing from premise");
      if (!same_multiset(c.right, P(0).right) ||
          !same_multiset(c.left, concat(remove_one(P(0).left, pr->child()), std::vector{*pr})))
        return mismatch();
      return std::nullopt;
    }
    case Rule::Box4hR:
    case Rule::BoxShR:
    case Rule::BoxDhR:
    case Rule::Box4R:
    case Rule::BoxSR:
    case Rule::BoxDR:
    case Rule::GLR: {
      HML_TRY(need_premises(1));
      Rule r = d.rule();
      bool dual = r == Rule::BoxDhR || r == Rule::BoxDR;
      bool hier = r == Rule::Box4hR || r == Rule::BoxShR || r == Rule::BoxDhR;
      int n = -1;
      if (dual) {
        if (!c.right.empty() || !P(0).right.empty())
          return std::string("D rule requires empty right sides");
        if (hier) {
          n = d.data().n;
          if (n < 0) return std::string("BoxDhR needs an index n >= 0");
        }
      } else {
        HML_TRY(need_principal(hier ? Kind::Box : Kind::UBox));
        if (c.right.size() != 1 || c.right[0] != *pr)
          return std::string("conclusion right side must be exactly the principal box");
        if (P(0).right.size() != 1 || P(0).right[0] != pr->child())
          return std::string("premise right side must be exactly the unboxed principal");
        if (hier) {
          n = pr->index();
          if (d.data().n >= 0 && d.data().n != n) return std::string("stored index disagrees with principal");
        }
      }
      std::vector<Formula> want;
      try {
        want = rules::modal_premise_left(r, n, c.left, pr);
      } catch (const PreconditionError& e) {
        return std::string(e.what()) + " (side condition n_i < n)";
      }
      if (!same_multiset(P(0).left, want)) return std::string("premise left side does not match the rule");
      return std::nullopt;
    }
  }
#undef HML_TRY
  return std::string("unknown rule");
}

}  // namespace

std::optional<std::string> check_node(LogicId calculus, const Derivation& d) {
  if (!has_calculus(calculus)) return "no sequent calculus for " + std::string(logic_name(calculus));
  if (!rule_in_calculus(calculus, d.rule()))
    return node_label(d) + ": rule not in G(" + std::string(logic_name(calculus)) + ")";
  if (auto e = check_sort(calculus, d.conclusion())) return node_label(d) + ": " + *e;
  if (auto e = check_local(d)) return node_label(d) + ": " + *e;
  return std::nullopt;
}

CheckResult check_derivation(LogicId calculus, const Proof& d) {
  if (!d) return {false, "empty derivation"};
  std::unordered_set<const Derivation*> seen;
  std::vector<const Derivation*> stack{d.get()};
  while (!stack.empty()) {
    const Derivation* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& p : n->premises()) {
      if (!p) return {false, node_label(*n) + ": null premise"};
      stack.push_back(p.get());
    }
    if (auto e = check_node(calculus, *n)) return {false, *e};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Builders

namespace rules {

namespace {

Proof finish(Sequent s, Rule r, std::vector<Proof> ps, RuleData data) {
  auto d = std::make_shared<const Derivation>(std::move(s), r, std::move(ps), std::move(data));
  if (auto e = check_local(*d)) throw PreconditionError(node_label(*d) + ": " + *e);
  return d;
}

RuleData principal(const Formula& f, int side = -1) {
  RuleData d;
  d.principal = f;
  d.side = side;
  return d;
}

}  // namespace

Proof ax(const Formula& a) {
  return finish({{a}, {a}}, Rule::Ax, {}, principal(a));
}

Proof bot_l() {
  return finish({{Formula::bot()}, {}}, Rule::BotL, {}, {});
}

Proof top_r() {
  return finish({{}, {Formula::top()}}, Rule::TopR, {}, {});
}

Proof weaken_left(Proof p, const Formula& a) {
  Sequent s = p->conclusion();
  s.left.push_back(a);
  return finish(std::move(s), Rule::wL, {std::move(p)}, principal(a));
}

Proof weaken_right(Proof p, const Formula& a) {
  Sequent s = p->conclusion();
  s.right.push_back(a);
  return finish(std::move(s), Rule::wR, {std::move(p)}, principal(a));
}

Proof contract_left(Proof p, const Formula& a) {
  Sequent s = p->conclusion();
  s.left = remove_one(s.left, a);
  return finish(std::move(s), Rule::cL, {std::move(p)}, principal(a));
}

Proof contract_right(Proof p, const Formula& a) {
  Sequent s = p->conclusion();
  s.right = remove_one(s.right, a);
  return finish(std::move(s), Rule::cR, {std::move(p)}, principal(a));
}

Proof cut(Proof l, Proof r, const Formula& a) {
  Sequent s{concat(l->conclusion().left, remove_one(r->conclusion().left, a)),
            concat(remove_one(l->conclusion().right, a), r->conclusion().right)};
  return finish(std::move(s), Rule::Cut, {std::move(l), std::move(r)}, principal(a));
}

Proof and_l(Proof p, const Formula& pr, int side) {
  Sequent s = p->conclusion();
  s.left = remove_one(s.left, side == 0 ? pr.left() : pr.right());
  s.left.push_back(pr);
  return finish(std::move(s), Rule::AndL, {std::move(p)}, principal(pr, side));
}

Proof and_r(Proof p0, Proof p1, const Formula& pr) {
  Sequent s{concat(p0->conclusion().left, p1->conclusion().left),
            concat(remove_one(p0->conclusion().right, pr.left()),
                   remove_one(p1->conclusion().right, pr.right()))};
  s.right.push_back(pr);
  return finish(std::move(s), Rule::AndR, {std::move(p0), std::move(p1)}, principal(pr));
}

Proof or_l(Proof p0, Proof p1, const Formula& pr) {
  Sequent s{concat(remove_one(p0->conclusion().left, pr.left()),
                   remove_one(p1->conclusion().left, pr.right())),
            concat(p0->conclusion().right, p1->conclusion().right)};
  s.left.push_back(pr);
  return finish(std::move(s), Rule::OrL, {std::move(p0), std::move(p1)}, principal(pr));
}

Proof or_r(Proof p, const Formula& pr, int side) {
  Sequent s = p->conclusion();
  s.right = remove_one(s.right, side == 0 ? pr.left() : pr.right());
  s.right.push_back(pr);
  return finish(std::move(s), Rule::OrR, {std::move(p)}, principal(pr, side));
}

Proof imp_l(Proof p0, Proof p1, const Formula& pr) {
  Sequent s{concat(p0->conclusion().left, remove_one(p1->conclusion().left, pr.right())),
            concat(remove_one(p0->conclusion().right, pr.left()), p1->conclusion().right)};
  s.left.push_back(pr);
  return finish(std::move(s), Rule::ImpL, {std::move(p0), std::move(p1)}, principal(pr));
}

Proof imp_r(Proof p, const Formula& pr) {
  Sequent s = p->conclusion();
  s.left = remove_one(s.left, pr.left());
  s.right = remove_one(s.right, pr.right());
  s.right.push_back(pr);
  return finish(std::move(s), Rule::ImpR, {std::move(p)}, principal(pr));
}

Proof neg_l(Proof p, const Formula& pr) {
  Sequent s = p->conclusion();
  s.right = remove_one(s.right, pr.child());
  s.left.push_back(pr);
  return finish(std::move(s), Rule::NegL, {std::move(p)}, principal(pr));
}

Proof neg_r(Proof p, const Formula& pr) {
  Sequent s = p->conclusion();
  s.left = remove_one(s.left, pr.child());
  s.right.push_back(pr);
  return finish(std::move(s), Rule::NegR, {std::move(p)}, principal(pr));
}

Proof box4h_r(Proof p, const Formula& pr, std::vector<Formula> context) {
  RuleData d = principal(pr);
  d.n = pr.index();
  return finish({std::move(context), {pr}}, Rule::Box4hR, {std::move(p)}, std::move(d));
}

Proof boxdh_r(Proof p, int n, std::vector<Formula> context) {
  RuleData d;
  d.n = n;
  return finish({std::move(context), {}}, Rule::BoxDhR, {std::move(p)}, std::move(d));
}

Proof boxsh_r(Proof p, const Formula& pr, std::vector<Formula> context) {
  RuleData d = principal(pr);
  d.n = pr.index();
  return finish({std::move(context), {pr}}, Rule::BoxShR, {std::move(p)}, std::move(d));
}

Proof boxh_l(Proof p, const Formula& pr) {
  Sequent s = p->conclusion();
  s.left = remove_one(s.left, pr.child());
  s.left.push_back(pr);
  return finish(std::move(s), Rule::BoxhL, {std::move(p)}, principal(pr));
}

Proof box4_r(Proof p, const Formula& pr, std::vector<Formula> context) {
  return finish({std::move(context), {pr}}, Rule::Box4R, {std::move(p)}, principal(pr));
}

Proof boxd_r(Proof p, std::vector<Formula> context) {
  return finish({std::move(context), {}}, Rule::BoxDR, {std::move(p)}, {});
}

Proof boxs_r(Proof p, const Formula& pr) {
  Sequent s{p->conclusion().left, {pr}};
  return finish(std::move(s), Rule::BoxSR, {std::move(p)}, principal(pr));
}

Proof box_l(Proof p, const Formula& pr) {
  Sequent s = p->conclusion();
  s.left = remove_one(s.left, pr.child());
  s.left.push_back(pr);
  return finish(std::move(s), Rule::BoxL, {std::move(p)}, principal(pr));
}

Proof gl_r(Proof p, const Formula& pr, std::vector<Formula> context) {
  return finish({std::move(context), {pr}}, Rule::GLR, {std::move(p)}, principal(pr));
}

Proof reapply(const Derivation& d, const std::vector<Proof>& p) {
  const RuleData& x = d.data();
  switch (d.rule()) {
    case Rule::Ax:
      return ax(*x.principal);
    case Rule::BotL:
      return bot_l();
    case Rule::TopR:
      return top_r();
    case Rule::wL:
      return weaken_left(p[0], *x.principal);
    case Rule::wR:
      return weaken_right(p[0], *x.principal);
    case Rule::cL:
      return contract_left(p[0], *x.principal);
    case Rule::cR:
      return contract_right(p[0], *x.principal);
    case Rule::Cut:
      return cut(p[0], p[1], *x.principal);
    case Rule::AndL:
      return and_l(p[0], *x.principal, x.side);
    case Rule::AndR:
      return and_r(p[0], p[1], *x.principal);
    case Rule::OrL:
      return or_l(p[0], p[1], *x.principal);
    case Rule::OrR:
      return or_r(p[0], *x.principal, x.side);
    case Rule::ImpL:
      return imp_l(p[0], p[1], *x.principal);
    case Rule::ImpR:
      return imp_r(p[0], *x.principal);
    case Rule::NegL:
      return neg_l(p[0], *x.principal);
    case Rule::NegR:
      return neg_r(p[0], *x.principal);
    case Rule::BoxhL:
      return boxh_l(p[0], *x.principal);
    case Rule::BoxL:
      return box_l(p[0], *x.principal);
    default:
      throw PreconditionError("cannot re-apply " + std::string(rule_name(d.rule())));
  }
}

Proof adapt(Proof d, const Sequent& target) {
  for (int side = 0; side < 2; ++side) {
    const auto& want = side == 0 ? target.left : target.right;
    auto have = as_set(side == 0 ? d->conclusion().left : d->conclusion().right);
    for (const auto& f : have) {
      std::size_t h = count_of(side == 0 ? d->conclusion().left : d->conclusion().right, f);
      std::size_t w = count_of(want, f);
      if (w == 0)
        throw PreconditionError("cannot adapt " + to_string(d->conclusion()) + " to " + to_string(target) +
                                ": " + to_string(f) + " would have to be dropped");
      for (; h > w; --h) d = side == 0 ? contract_left(d, f) : contract_right(d, f);
    }
  }
  for (int side = 0; side < 2; ++side) {
    const auto& want = side == 0 ? target.left : target.right;
    for (const auto& f : as_set(want)) {
      std::size_t h = count_of(side == 0 ? d->conclusion().left : d->conclusion().right, f);
      for (std::size_t w = count_of(want, f); h < w; ++h)
        d = side == 0 ? weaken_left(d, f) : weaken_right(d, f);
    }
  }
  // same multisets; restate the conclusion in the target's element order
  return std::make_shared<const Derivation>(target, d->rule(), d->premises(), d->data());
}

}  // namespace rules

}  // namespace hml
