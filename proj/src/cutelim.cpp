#include "hml/cutelim.hpp"

#include <map>
#include <tuple>
#include <unordered_map>

namespace hml {

namespace {

bool introduces_right(const Derivation& d, const Formula& a) {
  switch (d.rule()) {
    case Rule::AndR:
    case Rule::OrR:
    case Rule::ImpR:
    case Rule::NegR:
    case Rule::Box4hR:
    case Rule::BoxShR:
      return d.principal() == a;
    case Rule::TopR:
      return a.is(Kind::Top);
    default:
      return false;
  }
}

bool introduces_left(const Derivation& d, const Formula& a) {
  switch (d.rule()) {
    case Rule::AndL:
    case Rule::OrL:
    case Rule::ImpL:
    case Rule::NegL:
    case Rule::BoxhL:
      return d.principal() == a;
    case Rule::BotL:
      return a.is(Kind::Bot);
    default:
      return false;
  }
}

// Formula the rule consumes from the right side of premise i, if any.
std::optional<Formula> active_right(const Derivation& d, std::size_t i) {
  const RuleData& x = d.data();
  switch (d.rule()) {
    case Rule::AndR:
      return i == 0 ? x.principal->left() : x.principal->right();
    case Rule::OrR:
      return x.side == 0 ? x.principal->left() : x.principal->right();
    case Rule::ImpR:
      return x.principal->right();
    case Rule::NegL:
      return x.principal->child();
    case Rule::ImpL:
      if (i == 0) return x.principal->left();
      return std::nullopt;
    case Rule::Cut:
      if (i == 0) return x.principal;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Formula the rule consumes from the left side of premise i, if any.
std::optional<Formula> active_left(const Derivation& d, std::size_t i) {
  const RuleData& x = d.data();
  switch (d.rule()) {
    case Rule::AndL:
      return x.side == 0 ? x.principal->left() : x.principal->right();
    case Rule::OrL:
      return i == 0 ? x.principal->left() : x.principal->right();
    case Rule::ImpL:
      if (i == 1) return x.principal->right();
      return std::nullopt;
    case Rule::ImpR:
      return x.principal->left();
    case Rule::NegR:
    case Rule::BoxhL:
      return x.principal->child();
    case Rule::Cut:
      if (i == 1) return x.principal;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Proof apply_modal(Rule r, const Proof& p, const RuleData& data, int n, std::vector<Formula> ctx) {
  switch (r) {
    case Rule::Box4hR:
      return rules::box4h_r(p, *data.principal, std::move(ctx));
    case Rule::BoxShR:
      return rules::boxsh_r(p, *data.principal, std::move(ctx));
    case Rule::BoxDhR:
      return rules::boxdh_r(p, n, std::move(ctx));
    default:
      throw PreconditionError("not a hierarchical right modal rule");
  }
}

int modal_index(const Derivation& d) {
  return d.rule() == Rule::BoxDhR ? d.data().n : d.principal().index();
}

class Reducer {
 public:
  Reducer(std::size_t budget, std::size_t* steps) : budget_(budget), steps_(steps) {}

  // Mix: removes every occurrence of a from l's right and r's left.
  Proof mix(const Formula& a, const Proof& l, const Proof& r) {
    auto key = std::make_tuple(a, l.get(), r.get());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.result;
    if (++*steps_ > budget_)
      throw ResourceLimit("cut elimination exceeded its budget of " + std::to_string(budget_) + " steps");
    Proof out = reduce(a, l, r);
    memo_.emplace(key, Entry{l, r, out});
    return out;
  }

 private:
  struct Entry {
    Proof l, r, result;  // l and r keep the key pointers alive
  };
  struct KeyLess {
    bool operator()(const std::tuple<Formula, const Derivation*, const Derivation*>& x,
                    const std::tuple<Formula, const Derivation*, const Derivation*>& y) const {
      if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
      if (std::get<2>(x) != std::get<2>(y)) return std::get<2>(x) < std::get<2>(y);
      return std::get<0>(x) < std::get<0>(y);
    }
  };

  static Sequent target(const Formula& a, const Proof& l, const Proof& r) {
    const Sequent& s = l->conclusion();
    const Sequent& t = r->conclusion();
    return Sequent{concat(s.left, remove_all(t.left, a)), concat(remove_all(s.right, a), t.right)};
  }

  // Mix into a premise only when it actually contains the formula.
  Proof mix_left_premise(const Formula& a, const Proof& p, const Proof& r) {
    return contains(p->conclusion().right, a) ? mix(a, p, r) : p;
  }
  Proof mix_right_premise(const Formula& a, const Proof& l, const Proof& p) {
    return contains(p->conclusion().left, a) ? mix(a, l, p) : p;
  }

  Proof reduce(const Formula& a, const Proof& l, const Proof& r) {
    const Sequent goal = target(a, l, r);
    const Derivation& L = *l;
    const Derivation& R = *r;

    if (!contains(L.conclusion().right, a)) return rules::adapt(l, goal);
    if (!contains(R.conclusion().left, a)) return rules::adapt(r, goal);
    if (L.rule() == Rule::Ax) return rules::adapt(r, goal);
    if (R.rule() == Rule::Ax) return rules::adapt(l, goal);

    if ((L.rule() == Rule::wR || L.rule() == Rule::cR) && L.principal() == a)
      return rules::adapt(mix(a, L.premise(), r), goal);
    if ((R.rule() == Rule::wL || R.rule() == Rule::cL) && R.principal() == a)
      return rules::adapt(mix(a, l, R.premise()), goal);

    // Push the cut upwards into a side whose last rule does not introduce a;
    // when both qualify, into the taller one (left on ties).
    const bool up_left = !introduces_right(L, a);
    const bool up_right = !is_right_modal(R.rule()) && !introduces_left(R, a);
    if (up_left && (!up_right || L.height() >= R.height())) return push_left(a, l, r, goal);
    if (up_right) return push_right(a, l, r, goal);

    return rules::adapt(principal_case(a, l, r, goal), goal);
  }

  Proof push_left(const Formula& a, const Proof& l, const Proof& r, const Sequent& goal) {
    const Derivation& L = *l;
    std::vector<Proof> ps;
    for (std::size_t i = 0; i < L.premises().size(); ++i) {
      Proof q = mix_left_premise(a, L.premise(i), r);
      if (active_right(L, i) == a) q = rules::weaken_right(q, a);
      ps.push_back(q);
    }
    return rules::adapt(rules::reapply(L, ps), goal);
  }

  Proof push_right(const Formula& a, const Proof& l, const Proof& r, const Sequent& goal) {
    const Derivation& R = *r;
    std::vector<Proof> ps;
    for (std::size_t i = 0; i < R.premises().size(); ++i) {
      Proof q = mix_right_premise(a, l, R.premise(i));
      if (active_left(R, i) == a) q = rules::weaken_left(q, a);
      ps.push_back(q);
    }
    return rules::adapt(rules::reapply(R, ps), goal);
  }

  Proof principal_case(const Formula& a, const Proof& l, const Proof& r, const Sequent& goal) {
    const Derivation& L = *l;
    const Derivation& R = *r;
    if (is_right_modal(R.rule())) return modal_case(a, l, r);

    switch (L.rule()) {
      case Rule::AndR: {  // against AndL
        int i = R.data().side;
        Proof y = mix_left_premise(a, L.premise(i), r);
        Proof x = mix_right_premise(a, l, R.premise());
        return mix(i == 0 ? a.left() : a.right(), y, x);
      }
      case Rule::OrR: {  // against OrL
        int i = L.data().side;
        Proof y = mix_left_premise(a, L.premise(), r);
        Proof x = mix_right_premise(a, l, R.premise(i));
        return mix(i == 0 ? a.left() : a.right(), y, x);
      }
      case Rule::ImpR: {  // against ImpL
        Proof y = mix_left_premise(a, L.premise(), r);      // B, ... => C, ...
        Proof x0 = mix_right_premise(a, l, R.premise(0));   // ... => B, ...
        Proof x1 = mix_right_premise(a, l, R.premise(1));   // C, ... => ...
        Proof u = mix(a.left(), x0, y);
        return mix(a.right(), u, x1);
      }
      case Rule::NegR: {  // against NegL
        Proof y = mix_left_premise(a, L.premise(), r);      // B, ... => ...
        Proof x = mix_right_premise(a, l, R.premise());     // ... => B, ...
        return mix(a.child(), x, y);
      }
      case Rule::BoxShR: {  // against BoxhL
        const int n = a.index();
        Proof x = mix_right_premise(a, l, R.premise());     // B, ... => D'
        Proof w = mix(a.child(), L.premise(), x);           // sigma..., [m]gamma..., ... => D'
        for (const auto& c : L.conclusion().left) {
          if (c.index() != n) continue;
          while (count_of(w->conclusion().left, c.child()) > count_of(goal.left, c.child()))
            w = rules::boxh_l(w, c);
        }
        return w;
      }
      default:
        throw PreconditionError("no principal reduction for " + std::string(rule_name(L.rule())) + " against " +
                                std::string(rule_name(R.rule())));
    }
  }

  // a = [n]B introduced by a right modal rule on the left; the right proof
  // ends in a right modal rule of index k >= n with a in its context.
  Proof modal_case(const Formula& a, const Proof& l, const Proof& r) {
    const Derivation& L = *l;
    const Derivation& R = *r;
    if (!is_right_modal(L.rule())) throw PreconditionError("unexpected modal cut configuration");
    const int n = a.index();
    const int k = modal_index(R);
    const Rule rr = R.rule();
    const Formula& body = a.child();

    std::vector<Formula> ctx = concat(L.conclusion().left, remove_all(R.conclusion().left, a));
    const Sequent& prem = R.premise()->conclusion();
    Sequent new_prem{rules::modal_premise_left(rr, k, ctx, R.data().principal), prem.right};

    Proof q;
    if (n == k) {
      q = mix(body, L.premise(), R.premise());
    } else if (rr == Rule::BoxShR) {
      q = mix(a, l, R.premise());
    } else {
      q = mix(a, l, R.premise());
      q = mix(body, L.premise(), q);
    }
    q = rules::adapt(q, new_prem);
    return apply_modal(rr, q, R.data(), k, ctx);
  }

  std::size_t budget_;
  std::size_t* steps_;
  std::map<std::tuple<Formula, const Derivation*, const Derivation*>, Entry, KeyLess> memo_;
};

void require_calculus(LogicId c) {
  if (c != LogicId::K4h && c != LogicId::KD4h && c != LogicId::S4h)
    throw PreconditionError("cut elimination is provided for k4h, kd4h and s4h");
}

class Eliminator {
 public:
  Eliminator(LogicId c, CutElimStats* stats, std::size_t budget)
      : calc_(c), stats_(stats), reducer_(budget, &steps_) {}

  Proof run(const Proof& d) {
    Proof out = walk(d);
    if (stats_) stats_->steps = steps_;
    return out;
  }

 private:
  Proof walk(const Proof& d) {
    if (d->cut_free()) return d;
    if (auto it = done_.find(d.get()); it != done_.end()) return it->second;
    std::vector<Proof> ps;
    bool changed = false;
    for (const auto& p : d->premises()) {
      ps.push_back(walk(p));
      changed = changed || ps.back() != p;
    }
    Proof out;
    if (d->rule() == Rule::Cut) {
      const Formula& a = d->principal();
      out = rules::adapt(reducer_.mix(a, ps[0], ps[1]), d->conclusion());
      if (stats_) stats_->eliminated.push_back(a.complexity());
    } else {
      out = changed ? std::make_shared<const Derivation>(d->conclusion(), d->rule(), ps, d->data()) : d;
    }
    done_.emplace(d.get(), out);
    return out;
  }

  LogicId calc_;
  CutElimStats* stats_;
  std::size_t steps_ = 0;
  Reducer reducer_;
  std::unordered_map<const Derivation*, Proof> done_;
};

}  // namespace

bool is_dproof(const DProof& d) { return d.proof && d.proof->max_cut_complexity() < d.bound; }

DProof reduce_principal(LogicId calculus, const Formula& a, const DProof& left, const DProof& right) {
  require_calculus(calculus);
  const std::size_t d = a.complexity();
  if (left.bound != d || right.bound != d || !is_dproof(left) || !is_dproof(right))
    throw PreconditionError("inputs must be d-proofs for d = complexity of the cut formula");
  if (!contains(left.proof->conclusion().right, a) || !contains(right.proof->conclusion().left, a))
    throw PreconditionError("cut formula missing from an endsequent");
  for (const auto* p : {&left.proof, &right.proof})
    if (auto r = check_derivation(calculus, *p); !r) throw PreconditionError(r.message);
  std::size_t steps = 0;
  Reducer red(20'000'000, &steps);
  return DProof{red.mix(a, left.proof, right.proof), d};
}

Proof eliminate_cuts(LogicId calculus, const Proof& d, CutElimStats* stats, std::size_t step_budget) {
  require_calculus(calculus);
  if (auto r = check_derivation(calculus, d); !r) throw PreconditionError("input derivation: " + r.message);
  Eliminator e(calculus, stats, step_budget);
  return e.run(d);
}

}  // namespace hml
