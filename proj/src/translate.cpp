#include "hml/translate.hpp"

#include <algorithm>
#include <json.hpp>
#include <unordered_map>

namespace hml {

namespace {

using F = Formula;

F remake(const F& f, const std::vector<F>& kids) {
  switch (f.kind()) {
    case Kind::Neg:
      return F::neg(kids[0]);
    case Kind::And:
      return F::conj(kids[0], kids[1]);
    case Kind::Or:
      return F::disj(kids[0], kids[1]);
    case Kind::Imp:
      return F::imp(kids[0], kids[1]);
    case Kind::Box:
      return F::box(f.index(), kids[0]);
    case Kind::UBox:
      return F::ubox(kids[0]);
    default:
      return f;
  }
}

// Elements of a left-nested conjunction, leftmost first.
std::vector<F> conj_elements(F f) {
  std::vector<F> out;
  while (f.is(Kind::And)) {
    out.push_back(f.right());
    F l = f.left();
    f = l;
  }
  out.push_back(f);
  std::reverse(out.begin(), out.end());
  return out;
}

// q0, ..., qm followed by bot, ..., bot: returns (m, n) with n + 1 elements.
std::optional<std::pair<int, int>> match_block(const F& f) {
  std::vector<F> xs = conj_elements(f);
  int m = -1;
  std::size_t i = 0;
  for (; i < xs.size() && xs[i].is_reserved_atom() && xs[i].reserved_index() == static_cast<int>(i); ++i) m = static_cast<int>(i);
  if (m < 0) return std::nullopt;
  for (; i < xs.size(); ++i)
    if (!xs[i].is(Kind::Bot)) return std::nullopt;
  return std::make_pair(m, static_cast<int>(xs.size()) - 1);
}

bool in_x(const F& b);

XClass classify_box(const F& b) {
  XClass out;
  const F& body = b.child();
  if (!body.is(Kind::Imp)) return out;
  auto block = match_block(body.left());
  if (!block) return out;
  const F& core = body.right();
  if (!in_x(core)) return out;
  auto [m, n] = *block;
  if (m == n) {
    if (core.q_rank() >= n) return out;
    out.kind = XClass::Kind::FirstKind;
  } else {
    if (core.q_rank() > m) return out;
    out.kind = XClass::Kind::SecondKind;
    out.m = m;
  }
  out.n = n;
  out.core = core;
  return out;
}

bool in_x(const F& b) {
  switch (b.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return true;
    case Kind::Neg:
      return in_x(b.child());
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return in_x(b.left()) && in_x(b.right());
    case Kind::UBox:
      return classify_box(b).member();
    case Kind::Box:
      return false;
  }
  return false;
}

bool is_xproof_rule_calculus(LogicId c) { return c == LogicId::K4Q || c == LogicId::S4Q; }

void require_xproof(LogicId calculus, const Proof& d) {
  if (!is_xproof_rule_calculus(calculus)) throw PreconditionError("X-proofs live in k4q or s4q");
  if (!d->cut_free()) throw PreconditionError("X-proofs are cut-free");
  if (auto r = check_derivation(calculus, d); !r) throw PreconditionError("input derivation: " + r.message);
}

class Goodifier {
 public:
  explicit Goodifier(LogicId c) : calc_(c) {}

  GoodProof run(const Proof& d) {
    if (auto it = memo_.find(d.get()); it != memo_.end()) return it->second;
    GoodProof out = step(d);
    memo_.emplace(d.get(), out);
    return out;
  }

 private:
  static void add_all(std::vector<F>& to, const std::vector<F>& xs) {
    for (const auto& x : xs)
      if (!contains(to, x)) to.push_back(x);
  }

  GoodProof step(const Proof& d) {
    const Derivation& node = *d;
    if (node.rule() == Rule::Box4R || node.rule() == Rule::BoxSR) return modal(node, d);

    std::vector<GoodProof> sub;
    std::vector<F> sigma;
    for (const auto& p : node.premises()) {
      sub.push_back(run(p));
      add_all(sigma, sub.back().sigma);
    }
    bool same = sigma.empty();
    for (std::size_t i = 0; same && i < sub.size(); ++i) same = sub[i].proof == node.premise(i);
    if (same) return {{}, d};

    std::vector<Proof> ps;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const Sequent& s = node.premise(i)->conclusion();
      ps.push_back(rules::adapt(sub[i].proof, Sequent{concat(sigma, s.left), s.right}));
    }
    Proof p = rules::reapply(node, ps);
    const Sequent& s = node.conclusion();
    return {sigma, rules::adapt(p, Sequent{concat(sigma, s.left), s.right})};
  }

  // Partition the context by q-rank against the conclusion box, push the
  // larger part below the bot-block with sigma_r, and re-apply the rule.
  GoodProof modal(const Derivation& node, const Proof& d) {
    const F& principal = node.principal();
    const int r = principal.q_rank();
    const std::vector<F>& ctx = node.conclusion().left;
    GoodProof sub = run(node.premise());

    std::vector<F> sigma;
    for (const auto& s : sub.sigma) sigma.push_back(sigma_n(s, r));
    std::vector<F> high;
    for (const auto& c : ctx)
      if (c.q_rank() > r) high.push_back(sigma_n(c, r));
    Proof p = sigma_n(sub.proof, r);
    if (sigma.empty() && high.empty() && p == node.premise()) return {{}, d};

    std::vector<F> new_ctx = sigma;
    for (const auto& c : ctx) new_ctx.push_back(sigma_n(c, r));
    Proof q;
    if (node.rule() == Rule::Box4R) {
      p = rules::adapt(p, Sequent{rules::modal_premise_left(Rule::Box4R, -1, new_ctx, principal), {principal.child()}});
      q = rules::box4_r(p, principal, new_ctx);
    } else {
      p = rules::adapt(p, Sequent{new_ctx, {principal.child()}});
      q = rules::boxs_r(p, principal);
    }
    std::vector<F> out_sigma;
    add_all(out_sigma, sigma);
    add_all(out_sigma, high);
    return {out_sigma, rules::adapt(q, Sequent{concat(out_sigma, ctx), node.conclusion().right})};
  }

  LogicId calc_;
  std::unordered_map<const Derivation*, GoodProof> memo_;
};

void witness_numbers(const Witness& w, int& best) {
  if (w.kind == Witness::Kind::Box) best = std::max(best, w.n);
  for (const auto& k : w.kids) witness_numbers(k, best);
}

Witness from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SyntaxError("witness must be a nested array");
  if (j.empty()) return Witness::leaf();
  if (j.size() != 2) throw SyntaxError("witness arrays have zero or two entries");
  if (j[0].is_number_integer()) {
    long long n = j[0].get<long long>();
    if (n < 0 || n > 1'000'000) throw SyntaxError("witness number out of range");
    return Witness::box(static_cast<int>(n), from_json(j[1]));
  }
  return Witness::pair(from_json(j[0]), from_json(j[1]));
}

F normalize(const F& a, bool outer, int target) {
  switch (a.kind()) {
    case Kind::Box: {
      F c = normalize(a.child(), false, target);
      int n = c.rank() + 1;
      if (outer) n = std::max(n, target);
      return F::box(n, c);
    }
    case Kind::UBox:
      throw SortError("normalize_indices_gl expects an indexed formula");
    case Kind::Neg:
      return F::neg(normalize(a.child(), outer, target));
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return remake(a, {normalize(a.left(), outer, target), normalize(a.right(), outer, target)});
    default:
      return a;
  }
}

}  // namespace

Formula q_block(int n) {
  F out = F::reserved(0);
  for (int i = 1; i <= n; ++i) out = F::conj(out, F::reserved(i));
  return out;
}

Formula t_translate(const Formula& a) {
  if (a.has_reserved_atom()) throw PreconditionError("t_translate: input uses reserved atoms q0, q1, ...");
  if (a.has_plain_box()) throw SortError("t_translate expects an indexed formula");
  switch (a.kind()) {
    case Kind::Box:
      return F::ubox(F::imp(q_block(a.index()), t_translate(a.child())));
    case Kind::Neg:
      return F::neg(t_translate(a.child()));
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return remake(a, {t_translate(a.left()), t_translate(a.right())});
    default:
      return a;
  }
}

XClass classify_x(const Formula& b) {
  if (b.is_ubox()) return classify_box(b);
  XClass out;
  if (in_x(b)) out.kind = XClass::Kind::NonBoxedMember;
  return out;
}

Formula s_translate(const Formula& b) {
  switch (b.kind()) {
    case Kind::Atom:
      return b.is_reserved_atom() ? F::top() : b;
    case Kind::Bot:
    case Kind::Top:
      return b;
    case Kind::Neg:
      return F::neg(s_translate(b.child()));
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return remake(b, {s_translate(b.left()), s_translate(b.right())});
    case Kind::UBox: {
      XClass x = classify_box(b);
      if (x.kind == XClass::Kind::FirstKind) return F::box(x.n, s_translate(*x.core));
      if (x.kind == XClass::Kind::SecondKind) return F::top();
      break;
    }
    case Kind::Box:
      break;
  }
  throw PreconditionError("s_translate: " + to_string(b) + " is not in X");
}

Formula sigma_n(const Formula& b, int n) {
  if (b.q_rank() <= n) return b;
  if (b.is_reserved_atom()) return F::bot();
  std::vector<F> kids;
  for (std::size_t i = 0; i < b.arity(); ++i) kids.push_back(sigma_n(i == 0 ? b.left() : b.right(), n));
  return remake(b, kids);
}

Proof sigma_n(const Proof& d, int n) {
  std::unordered_map<const Derivation*, Proof> memo;
  auto go = [&](auto&& self, const Proof& p) -> Proof {
    if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
    bool changed = false;
    auto map = [&](const std::vector<F>& xs) {
      std::vector<F> out;
      for (const auto& x : xs) {
        out.push_back(sigma_n(x, n));
        changed = changed || !out.back().same(x);
      }
      return out;
    };
    Sequent s{map(p->conclusion().left), map(p->conclusion().right)};
    std::vector<Proof> ps;
    for (const auto& q : p->premises()) {
      ps.push_back(self(self, q));
      changed = changed || ps.back() != q;
    }
    RuleData data = p->data();
    if (data.principal) {
      F f = sigma_n(*data.principal, n);
      changed = changed || !f.same(*data.principal);
      data.principal = f;
    }
    Proof out = changed ? std::make_shared<const Derivation>(std::move(s), p->rule(), std::move(ps), data) : p;
    memo.emplace(p.get(), out);
    return out;
  };
  return go(go, d);
}

bool is_good_xproof(LogicId calculus, const Proof& d) {
  require_xproof(calculus, d);
  std::unordered_map<F, bool, FormulaHash> member;
  std::unordered_map<const Derivation*, bool> seen;
  bool good = true;
  auto visit = [&](auto&& self, const Proof& p) -> void {
    if (!seen.emplace(p.get(), true).second) return;
    for (const auto* side : {&p->conclusion().left, &p->conclusion().right})
      for (const auto& f : *side) {
        auto [it, fresh] = member.try_emplace(f, false);
        if (fresh) it->second = in_x(f);
        if (!it->second) throw NotXProof("formula outside X: " + to_string(f));
      }
    if (p->rule() == Rule::Box4R || p->rule() == Rule::BoxSR)
      if (q_rank(p->conclusion().left) > p->principal().q_rank()) good = false;
    for (const auto& q : p->premises()) self(self, q);
  };
  visit(visit, d);
  return good;
}

GoodProof goodify(LogicId calculus, const Proof& d) {
  require_xproof(calculus, d);
  is_good_xproof(calculus, d);  // throws NotXProof on formulas outside X
  Goodifier g(calculus);
  return g.run(d);
}

// --- witnesses ---------------------------------------------------------------

int Witness::max_number() const {
  int best = -1;
  witness_numbers(*this, best);
  return best;
}

bool check_witness(const Witness& w, const Formula& b) {
  switch (b.kind()) {
    case Kind::Atom:
    case Kind::Bot:
    case Kind::Top:
      return w.kind == Witness::Kind::Leaf;
    case Kind::Neg:
      return check_witness(w, b.child());
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return w.kind == Witness::Kind::Pair && check_witness(w.kids[0], b.left()) &&
             check_witness(w.kids[1], b.right());
    case Kind::UBox:
      return w.kind == Witness::Kind::Box && w.n >= 0 && check_witness(w.kids[0], b.child()) &&
             w.n > w.kids[0].max_number();
    case Kind::Box:
      return false;
  }
  return false;
}

Formula apply_witness(const Formula& b, const Witness& w) {
  if (!check_witness(w, b)) throw PreconditionError("witness " + to_string(w) + " does not fit " + to_string(b));
  switch (b.kind()) {
    case Kind::Neg:
      return F::neg(apply_witness(b.child(), w));
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return remake(b, {apply_witness(b.left(), w.kids[0]), apply_witness(b.right(), w.kids[1])});
    case Kind::UBox:
      return F::box(w.n, apply_witness(b.child(), w.kids[0]));
    default:
      return b;
  }
}

std::pair<Formula, Witness> forgetful_f(const Formula& a) {
  switch (a.kind()) {
    case Kind::Neg: {
      auto [f, w] = forgetful_f(a.child());
      return {F::neg(f), w};
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Imp: {
      auto [l, wl] = forgetful_f(a.left());
      auto [r, wr] = forgetful_f(a.right());
      return {remake(a, {l, r}), Witness::pair(wl, wr)};
    }
    case Kind::Box: {
      auto [c, w] = forgetful_f(a.child());
      return {F::ubox(c), Witness::box(a.index(), w)};
    }
    case Kind::UBox:
      throw SortError("forgetful_f expects an indexed formula");
    default:
      return {a, Witness::leaf()};
  }
}

Witness canonical_witness(const Formula& a) {
  if (a.has_reserved_atom()) throw PreconditionError("canonical_witness: input uses reserved atoms");
  switch (a.kind()) {
    case Kind::Neg:
      return canonical_witness(a.child());
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return Witness::pair(canonical_witness(a.left()), canonical_witness(a.right()));
    case Kind::Box: {
      Witness block = Witness::leaf();
      for (int i = 1; i <= a.index(); ++i) block = Witness::pair(block, Witness::leaf());
      return Witness::box(a.index(), Witness::pair(block, canonical_witness(a.child())));
    }
    case Kind::UBox:
      throw SortError("canonical_witness expects an indexed formula");
    default:
      return Witness::leaf();
  }
}

std::string to_string(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Leaf:
      return "[]";
    case Witness::Kind::Pair:
      return "[" + to_string(w.kids[0]) + "," + to_string(w.kids[1]) + "]";
    case Witness::Kind::Box:
      return "[" + std::to_string(w.n) + "," + to_string(w.kids[0]) + "]";
  }
  return "[]";
}

Witness parse_witness(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("witness: ") + e.what());
  }
  return from_json(j);
}

Formula normalize_indices_gl(const Formula& a, int target) { return normalize(a, true, target); }

}  // namespace hml
