#include "hml/simulate.hpp"

#include <unordered_map>

#include "hml/hilbert_build.hpp"
#include "hml/search.hpp"

namespace hml {

namespace {

void require_hierarchical_calculus(LogicId c) {
  if (c != LogicId::K4h && c != LogicId::KD4h && c != LogicId::S4h)
    throw PreconditionError("simulation is provided for k4h, kd4h and s4h");
}

// --- derivation -> Hilbert ---------------------------------------------------

class ToHilbert {
 public:
  explicit ToHilbert(ProofBuilder& b) : b_(b) {}

  int line(const Proof& d) {
    if (auto it = memo_.find(d.get()); it != memo_.end()) return it->second;
    std::vector<int> prem;
    for (const auto& p : d->premises()) prem.push_back(line(p));
    Formula f = sequent_formula(d->conclusion());
    int out;
    switch (d->rule()) {
      case Rule::Ax:
      case Rule::BotL:
      case Rule::TopR:
        out = b_.taut(f);
        break;
      case Rule::BoxhL: {
        const Formula& pr = d->principal();
        int th = b_.axiom(Scheme::Th, Formula::imp(pr, pr.child()));
        out = b_.combine({prem[0], th}, f);
        break;
      }
      case Rule::Box4hR:
      case Rule::BoxShR:
      case Rule::BoxDhR:
        out = modal(*d, prem[0], f);
        break;
      case Rule::Box4R:
      case Rule::BoxDR:
      case Rule::BoxSR:
      case Rule::BoxL:
      case Rule::GLR:
        throw PreconditionError("uni-modal rule in a hierarchical derivation");
      default:
        out = b_.combine(prem, f);
    }
    memo_.emplace(d.get(), out);
    return out;
  }

 private:
  // A line c -> [n]x for some c in the context.
  int source(const Formula& x, const std::vector<Formula>& ctx, int n) {
    for (const auto& c : ctx)
      if (c == x && c.is_box() && c.index() < n) return b_.lift_box(c.index(), n, c.child());
    for (const auto& c : ctx)
      if (c.is_box() && c.index() == n && c.child() == x) return b_.taut(Formula::imp(c, c));
    for (const auto& c : ctx)
      if (c.is_box() && c.index() < n && c.child() == x) return b_.raise(c.index(), n, x);
    throw PreconditionError("no context source for premise formula " + to_string(x));
  }

  int modal(const Derivation& d, int prem_line, const Formula& target) {
    const bool dual = d.rule() == Rule::BoxDhR;
    const int n = dual ? d.data().n : d.principal().index();
    const Formula goal = dual ? Formula::bot() : d.principal().child();
    const auto& ctx = d.conclusion().left;
    const auto& xs = d.premise()->conclusion().left;

    std::vector<int> from;
    int to_box;
    if (xs.empty()) {
      to_box = b_.nec(n, prem_line);
    } else {
      for (const auto& x : xs) from.push_back(source(x, ctx, n));
      from.push_back(b_.box_conj(n, xs));
      int kh = b_.axiom(Scheme::Kh, scheme_instance(Scheme::Kh, n, big_and(xs), goal));
      to_box = b_.mp(b_.nec(n, prem_line), kh);
    }
    from.push_back(to_box);
    if (dual) from.push_back(b_.axiom(Scheme::Dh, scheme_instance(Scheme::Dh, n, goal)));
    return b_.combine(from, target);
  }

  ProofBuilder& b_;
  std::unordered_map<const Derivation*, int> memo_;
};

// --- Hilbert -> derivation ---------------------------------------------------

Proof right_modal(LogicId c, Proof p, const Formula& principal, const std::vector<Formula>& ctx) {
  Rule r = c == LogicId::S4h ? Rule::BoxShR : Rule::Box4hR;
  p = rules::adapt(p, Sequent{rules::modal_premise_left(r, principal.index(), ctx, principal), {principal.child()}});
  return r == Rule::BoxShR ? rules::boxsh_r(p, principal, ctx) : rules::box4h_r(p, principal, ctx);
}

}  // namespace

HilbertProof hilbert_from_derivation(LogicId calculus, const Proof& d) {
  require_hierarchical_calculus(calculus);
  if (auto r = check_derivation(calculus, d); !r) throw PreconditionError("input derivation: " + r.message);
  ProofBuilder b;
  ToHilbert conv(b);
  int last = conv.line(d);
  HilbertProof p = b.take();
  if (last != static_cast<int>(p.lines.size())) p.lines.push_back(p.lines[last - 1]);
  return p;
}

HilbertProof hilbert_from_premises(LogicId calculus, const std::vector<Formula>& premises, const Proof& d) {
  const Sequent& s = d->conclusion();
  if (s.right.size() != 1 || !same_multiset(s.left, premises))
    throw PreconditionError("derivation must end in premises => a");
  HilbertProof h = hilbert_from_derivation(calculus, d);
  ProofBuilder b(premises);
  std::vector<int> map(h.lines.size() + 1);
  for (std::size_t i = 0; i < h.lines.size(); ++i) {
    const HilbertLine& ln = h.lines[i];
    switch (ln.rule) {
      case Just::Taut:
        map[i + 1] = b.taut(ln.formula);
        break;
      case Just::Axiom:
        map[i + 1] = b.axiom(*ln.scheme, ln.formula);
        break;
      case Just::MP:
        map[i + 1] = b.mp(map[ln.args[0]], map[ln.args[1]]);
        break;
      case Just::Nec:
        map[i + 1] = b.nec(ln.args[0], map[ln.args[1]]);
        break;
      case Just::Hyp:
        throw PreconditionError("unexpected hypothesis line");
    }
  }
  std::vector<int> from;
  for (std::size_t k = 0; k < premises.size(); ++k) from.push_back(b.hyp(k));
  from.push_back(map.back());
  int last = b.combine(from, s.right[0]);
  HilbertProof out = b.take();
  if (last != static_cast<int>(out.lines.size())) out.lines.push_back(out.lines[last - 1]);
  return out;
}

Proof axiom_derivation(LogicId c, const AxiomMatch& m) {
  require_hierarchical_calculus(c);
  using F = Formula;
  const int n = m.n;
  const bool s4 = c == LogicId::S4h;
  switch (m.scheme) {
    case Scheme::Kh: {
      const F& a = m.parts[0];
      const F& b = m.parts[1];
      F ab = F::imp(a, b);
      Proof e = rules::imp_l(rules::ax(a), rules::ax(b), ab);  // A, A -> B => B
      Proof boxed = right_modal(c, e, F::box(n, b), {F::box(n, ab), F::box(n, a)});
      Proof inner = rules::imp_r(boxed, F::imp(F::box(n, a), F::box(n, b)));
      return rules::imp_r(inner, scheme_instance(Scheme::Kh, n, a, b));
    }
    case Scheme::H: {
      const F& a = m.parts[0];
      Proof p = s4 ? rules::boxh_l(rules::ax(a), F::box(n, a)) : rules::weaken_left(rules::ax(a), F::box(n, a));
      return rules::imp_r(right_modal(c, p, F::box(n + 1, a), {F::box(n, a)}), scheme_instance(Scheme::H, n, a));
    }
    case Scheme::Fourh: {
      const F& a = m.parts[0];
      F boxed = F::box(n, a);
      Proof p = s4 ? rules::ax(boxed) : rules::weaken_left(rules::ax(boxed), a);
      return rules::imp_r(right_modal(c, p, F::box(n + 1, boxed), {boxed}), scheme_instance(Scheme::Fourh, n, a));
    }
    case Scheme::Dh: {
      if (c != LogicId::KD4h) break;
      F bb = F::box(n, F::bot());
      Proof p = rules::weaken_left(rules::bot_l(), bb);
      p = rules::boxdh_r(p, n + 1, {bb});
      return rules::neg_r(p, F::neg(bb));
    }
    case Scheme::Th: {
      if (!s4) break;
      const F& a = m.parts[0];
      return rules::imp_r(rules::boxh_l(rules::ax(a), F::box(n, a)), scheme_instance(Scheme::Th, n, a));
    }
    default:
      break;
  }
  throw PreconditionError("axiom " + std::string(scheme_name(m.scheme)) + " has no derivation in G(" +
                          std::string(logic_name(c)) + ")");
}

Proof derivation_from_hilbert(LogicId calculus, const HilbertProof& p) {
  require_hierarchical_calculus(calculus);
  if (!p.hypotheses.empty()) throw PreconditionError("derivation_from_hilbert needs a proof without hypotheses");
  if (auto r = check_hilbert_proof(calculus, p); !r) throw PreconditionError("input proof: " + r.message);

  std::vector<Proof> out(p.lines.size() + 1);
  SearchOptions prop;
  prop.propositional_only = true;
  for (std::size_t idx = 0; idx < p.lines.size(); ++idx) {
    const HilbertLine& line = p.lines[idx];
    const int l = static_cast<int>(idx) + 1;
    switch (line.rule) {
      case Just::Taut: {
        auto d = prove(calculus, Sequent{{}, {line.formula}}, prop);
        if (!d) throw PreconditionError("tautology without a propositional derivation: " + to_string(line.formula));
        out[l] = *d;
        break;
      }
      case Just::Axiom: {
        auto m = line.scheme ? match_scheme(*line.scheme, line.formula) : is_axiom_instance(calculus, line.formula);
        out[l] = axiom_derivation(calculus, *m);
        break;
      }
      case Just::MP: {
        const Formula& a = p.lines[line.args[0] - 1].formula;
        const Formula& ab = p.lines[line.args[1] - 1].formula;
        Proof e = rules::imp_l(rules::ax(a), rules::ax(ab.right()), ab);  // A, A -> B => B
        Proof c1 = rules::cut(out[line.args[0]], e, a);                   // A -> B => B
        out[l] = rules::cut(out[line.args[1]], c1, ab);                   // => B
        break;
      }
      case Just::Nec:
        out[l] = right_modal(calculus, out[line.args[1]], line.formula, {});
        break;
      case Just::Hyp:
        throw PreconditionError("hypothesis line in derivation_from_hilbert");
    }
  }
  return out.back();
}

}  // namespace hml
