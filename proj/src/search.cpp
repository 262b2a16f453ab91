#include "hml/search.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hml {

namespace {

// A set-sequent: both sides sorted and duplicate-free. `used` lists the left
// boxes already unboxed on this branch (reset by every right modal rule).
struct Key {
  std::vector<Formula> l, r, used;
  bool operator==(const Key& o) const { return l == o.l && r == o.r && used == o.used; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = k.l.size() * 31 + k.r.size();
    for (const auto& f : k.l) h = h * 1000003u ^ f.hash();
    h ^= 0x9e3779b97f4a7c15ull;
    for (const auto& f : k.r) h = h * 1000003u ^ f.hash();
    for (const auto& f : k.used) h = h * 1000003u ^ (f.hash() + 7);
    return h;
  }
};

Key make_key(std::vector<Formula> l, std::vector<Formula> r, std::vector<Formula> used = {}) {
  return Key{as_set(l), as_set(r), std::move(used)};
}

std::vector<Formula> with_sorted(std::vector<Formula> v, const Formula& f) {
  v.insert(std::upper_bound(v.begin(), v.end(), f), f);
  return v;
}

std::vector<Formula> without(const std::vector<Formula>& v, const Formula& f) {
  return remove_all(v, f);
}

std::vector<Formula> with(std::vector<Formula> v, const Formula& f) {
  v.push_back(f);
  return v;
}

bool uses_kept_left_box(LogicId c) {
  return c == LogicId::S4h || c == LogicId::S4 || c == LogicId::S4Q;
}

class Searcher {
 public:
  Searcher(LogicId calculus, const SearchOptions& opt) : calc_(calculus), opt_(opt) {}

  Proof solve(const Key& k, bool& dep) {
    if (++nodes_ > opt_.node_budget)
      throw ResourceLimit("proof search exceeded its budget of " + std::to_string(opt_.node_budget) +
                          " nodes");
    if (auto it = success_.find(k); it != success_.end()) return it->second;
    if (failed_.count(k)) return nullptr;
    bool local_dep = false;
    Proof p = expand(k, local_dep);
    if (p) success_.emplace(k, p);
    else if (!local_dep) failed_.insert(k);
    dep = dep || local_dep;
    return p;
  }

 private:
  Sequent target(const Key& k) const { return Sequent{k.l, k.r}; }

  Proof expand(const Key& k, bool& dep) {
    auto next = [&](std::vector<Formula> l, std::vector<Formula> r) {
      return make_key(std::move(l), std::move(r), k.used);
    };
    // axioms
    for (const auto& f : k.l)
      if (std::binary_search(k.r.begin(), k.r.end(), f)) return rules::adapt(rules::ax(f), target(k));
    for (const auto& f : k.l)
      if (f.is(Kind::Bot)) return rules::adapt(rules::bot_l(), target(k));
    for (const auto& f : k.r)
      if (f.is(Kind::Top)) return rules::adapt(rules::top_r(), target(k));

    // non-branching rules
    for (const auto& f : k.l) {
      switch (f.kind()) {
        case Kind::Top:
          return one(k, next(without(k.l, f), k.r), dep,
                     [&](Proof p) { return rules::weaken_left(p, f); });
        case Kind::Neg:
          return one(k, next(without(k.l, f), with(k.r, f.child())), dep,
                     [&](Proof p) { return rules::neg_l(p, f); });
        case Kind::And:
          return one(k, next(with(with(without(k.l, f), f.left()), f.right()), k.r), dep,
                     [&](Proof p) {
                       p = rules::and_l(p, f, 0);
                       if (contains(p->conclusion().left, f.right())) p = rules::and_l(p, f, 1);
                       return p;
                     });
        case Kind::Box:
        case Kind::UBox:
          if (!opt_.propositional_only && uses_kept_left_box(calc_) &&
              !std::binary_search(k.used.begin(), k.used.end(), f)) {
            auto used = with_sorted(k.used, f);
            if (std::binary_search(k.l.begin(), k.l.end(), f.child()))
              return solve(Key{k.l, k.r, std::move(used)}, dep);
            return one(k, make_key(with(k.l, f.child()), k.r, std::move(used)), dep, [&](Proof p) {
              return f.is_box() ? rules::boxh_l(p, f) : rules::box_l(p, f);
            });
          }
          break;
        default:
          break;
      }
    }
    for (const auto& f : k.r) {
      switch (f.kind()) {
        case Kind::Bot:
          return one(k, next(k.l, without(k.r, f)), dep,
                     [&](Proof p) { return rules::weaken_right(p, f); });
        case Kind::Neg:
          return one(k, next(with(k.l, f.child()), without(k.r, f)), dep,
                     [&](Proof p) { return rules::neg_r(p, f); });
        case Kind::Or:
          return one(k, next(k.l, with(with(without(k.r, f), f.left()), f.right())), dep,
                     [&](Proof p) {
                       p = rules::or_r(p, f, 0);
                       if (contains(p->conclusion().right, f.right())) p = rules::or_r(p, f, 1);
                       return p;
                     });
        case Kind::Imp:
          return one(k, next(with(k.l, f.left()), with(without(k.r, f), f.right())), dep,
                     [&](Proof p) { return rules::imp_r(p, f); });
        default:
          break;
      }
    }

    // branching rules
    for (const auto& f : k.l) {
      if (f.is(Kind::Or)) {
        auto rest = without(k.l, f);
        return two(k, next(with(rest, f.left()), k.r), next(with(rest, f.right()), k.r), dep,
                   [&](Proof a, Proof b) { return rules::or_l(a, b, f); });
      }
      if (f.is(Kind::Imp)) {
        auto rest = without(k.l, f);
        return two(k, next(rest, with(k.r, f.left())), next(with(rest, f.right()), k.r), dep,
                   [&](Proof a, Proof b) { return rules::imp_l(a, b, f); });
      }
    }
    for (const auto& f : k.r) {
      if (f.is(Kind::And)) {
        auto rest = without(k.r, f);
        return two(k, next(k.l, with(rest, f.left())), next(k.l, with(rest, f.right())), dep,
                   [&](Proof a, Proof b) { return rules::and_r(a, b, f); });
      }
    }

    if (opt_.propositional_only) return nullptr;
    return modal(k, dep);
  }

  template <class Build>
  Proof one(const Key& k, const Key& prem, bool& dep, Build build) {
    Proof p = solve(prem, dep);
    if (!p) return nullptr;
    return rules::adapt(build(p), target(k));
  }

  template <class Build>
  Proof two(const Key& k, const Key& a, const Key& b, bool& dep, Build build) {
    Proof pa = solve(a, dep);
    if (!pa) return nullptr;
    Proof pb = solve(b, dep);
    if (!pb) return nullptr;
    return rules::adapt(build(pa, pb), target(k));
  }

  // Tries one right modal rule instance with the largest admissible context.
  Proof try_modal(const Key& k, Rule rule, int n, const std::optional<Formula>& principal, bool& dep) {
    std::vector<Formula> ctx;
    for (const auto& c : k.l) {
      if (is_hierarchical(calc_) ? (c.is_box() && c.index() <= n) : c.is_ubox()) ctx.push_back(c);
    }
    std::vector<Formula> prem_left = rules::modal_premise_left(rule, n, ctx, principal);
    std::vector<Formula> prem_right;
    if (principal) prem_right.push_back(principal->child());
    Key prem = make_key(prem_left, prem_right);
    if (std::find(history_.begin(), history_.end(), prem) != history_.end()) {
      dep = true;
      return nullptr;
    }
    history_.push_back(prem);
    Proof p;
    try {
      p = solve(prem, dep);
    } catch (...) {
      history_.pop_back();
      throw;
    }
    history_.pop_back();
    if (!p) return nullptr;
    p = rules::adapt(p, Sequent{prem_left, prem_right});
    Proof d;
    switch (rule) {
      case Rule::Box4hR:
        d = rules::box4h_r(p, *principal, ctx);
        break;
      case Rule::BoxShR:
        d = rules::boxsh_r(p, *principal, ctx);
        break;
      case Rule::BoxDhR:
        d = rules::boxdh_r(p, n, ctx);
        break;
      case Rule::Box4R:
        d = rules::box4_r(p, *principal, ctx);
        break;
      case Rule::BoxSR:
        d = rules::boxs_r(p, *principal);
        break;
      case Rule::BoxDR:
        d = rules::boxd_r(p, ctx);
        break;
      case Rule::GLR:
        d = rules::gl_r(p, *principal, ctx);
        break;
      default:
        return nullptr;
    }
    return rules::adapt(d, target(k));
  }

  Proof modal(const Key& k, bool& dep) {
    Rule right_rule;
    switch (calc_) {
      case LogicId::K4h:
      case LogicId::KD4h:
        right_rule = Rule::Box4hR;
        break;
      case LogicId::S4h:
        right_rule = Rule::BoxShR;
        break;
      case LogicId::K4:
      case LogicId::KD4:
      case LogicId::K4Q:
        right_rule = Rule::Box4R;
        break;
      case LogicId::S4:
      case LogicId::S4Q:
        right_rule = Rule::BoxSR;
        break;
      case LogicId::GL:
        right_rule = Rule::GLR;
        break;
      default:
        throw Unsupported("no calculus for " + std::string(logic_name(calc_)));
    }
    // k.r is sorted by complexity, so candidates come in ascending size.
    for (const auto& f : k.r) {
      if (!f.any_box()) continue;
      if (Proof p = try_modal(k, right_rule, f.is_box() ? f.index() : -1, f, dep)) return p;
    }
    if (calc_ == LogicId::KD4h) {
      int n = 0;
      for (const auto& c : k.l)
        if (c.is_box()) n = std::max(n, c.index() + 1);
      return try_modal(k, Rule::BoxDhR, n, std::nullopt, dep);
    }
    if (calc_ == LogicId::KD4) return try_modal(k, Rule::BoxDR, -1, std::nullopt, dep);
    return nullptr;
  }

  LogicId calc_;
  SearchOptions opt_;
  std::size_t nodes_ = 0;
  std::unordered_map<Key, Proof, KeyHash> success_;
  std::unordered_set<Key, KeyHash> failed_;
  std::vector<Key> history_;
};

}  // namespace

std::optional<Proof> prove(LogicId calculus, const Sequent& s, const SearchOptions& opt) {
  if (!has_calculus(calculus))
    throw Unsupported("no sequent calculus for " + std::string(logic_name(calculus)));
  bool hier = is_hierarchical(calculus);
  for (const auto* side : {&s.left, &s.right})
    for (const auto& f : *side)
      if (hier ? f.has_plain_box() : f.has_indexed_box())
        throw SortError("formula " + to_string(f) + " does not belong to the language of " +
                        std::string(logic_name(calculus)));
  Searcher search(calculus, opt);
  bool dep = false;
  Proof p = search.solve(make_key(s.left, s.right), dep);
  if (!p) return std::nullopt;
  return rules::adapt(p, s);
}

std::optional<Proof> prove_formula(LogicId calculus, const Formula& a, const SearchOptions& opt) {
  return prove(calculus, Sequent{{}, {a}}, opt);
}

}  // namespace hml
