#include "hml/hilbert_build.hpp"

#include "hml/tautology.hpp"

namespace hml {

Formula box_at(int n, const Formula& a) { return n < 0 ? Formula::ubox(a) : Formula::box(n, a); }

namespace {

Scheme k_scheme(int n) { return n < 0 ? Scheme::K : Scheme::Kh; }

Formula k_instance(int n, const Formula& a, const Formula& b) {
  return Formula::imp(box_at(n, Formula::imp(a, b)), Formula::imp(box_at(n, a), box_at(n, b)));
}

}  // namespace

ProofBuilder::ProofBuilder(std::vector<Formula> hypotheses) { proof_.hypotheses = std::move(hypotheses); }

int ProofBuilder::push(const Formula& f, Just rule, std::vector<int> args, bool dep, std::optional<Scheme> scheme) {
  if (auto it = free_.find(f); it != free_.end()) return it->second;
  proof_.lines.push_back(HilbertLine{f, rule, std::move(args), scheme});
  dep_.push_back(dep);
  int line = static_cast<int>(proof_.lines.size());
  if (!dep) free_.emplace(f, line);
  return line;
}

int ProofBuilder::hyp(std::size_t k) {
  if (k >= proof_.hypotheses.size()) throw PreconditionError("hypothesis index out of range");
  if (auto it = hyp_lines_.find(k); it != hyp_lines_.end()) return it->second;
  int line = push(proof_.hypotheses[k], Just::Hyp, {static_cast<int>(k)}, true);
  hyp_lines_.emplace(k, line);
  return line;
}

int ProofBuilder::taut(const Formula& f) {
  if (auto it = free_.find(f); it != free_.end()) return it->second;
  if (!tautology(f)) throw PreconditionError("not a tautology: " + to_string(f));
  return push(f, Just::Taut, {}, false);
}

int ProofBuilder::axiom(Scheme s, const Formula& f) {
  if (!match_scheme(s, f))
    throw PreconditionError(to_string(f) + " is not an instance of " + std::string(scheme_name(s)));
  return push(f, Just::Axiom, {}, false, s);
}

int ProofBuilder::mp(int a, int imp) {
  const Formula ab = formula(imp);
  if (!ab.is(Kind::Imp) || ab.left() != formula(a))
    throw PreconditionError("modus ponens mismatch: " + to_string(formula(a)) + " with " + to_string(ab));
  return push(ab.right(), Just::MP, {a, imp}, depends(a) || depends(imp));
}

int ProofBuilder::nec(int n, int line) {
  if (depends(line)) throw PreconditionError("necessitation of a hypothesis-dependent line");
  Formula f = box_at(n, formula(line));
  return push(f, Just::Nec, n < 0 ? std::vector<int>{line} : std::vector<int>{n, line}, false);
}

int ProofBuilder::combine(const std::vector<int>& from, const Formula& target) {
  if (auto it = free_.find(target); it != free_.end()) return it->second;
  Formula t = target;
  for (auto it = from.rbegin(); it != from.rend(); ++it) t = Formula::imp(formula(*it), t);
  int cur = taut(t);
  for (int l : from) cur = mp(l, cur);
  return cur;
}

int ProofBuilder::box_mono(int n, int imp_line) {
  const Formula ab = formula(imp_line);
  if (!ab.is(Kind::Imp)) throw PreconditionError("box_mono needs an implication");
  int boxed = nec(n, imp_line);
  int k = axiom(k_scheme(n), k_instance(n, ab.left(), ab.right()));
  return mp(boxed, k);
}

int ProofBuilder::box_conj(int n, const std::vector<Formula>& xs) {
  if (xs.empty()) throw PreconditionError("box_conj needs at least one conjunct");
  Formula boxes = box_at(n, xs[0]);
  Formula body = xs[0];
  int line = taut(Formula::imp(boxes, boxes));
  for (std::size_t j = 1; j < xs.size(); ++j) {
    Formula next = Formula::conj(body, xs[j]);
    int pair = taut(Formula::imp(body, Formula::imp(xs[j], next)));
    int m1 = box_mono(n, pair);
    int k2 = axiom(k_scheme(n), k_instance(n, xs[j], next));
    Formula next_boxes = Formula::conj(boxes, box_at(n, xs[j]));
    line = combine({line, m1, k2}, Formula::imp(next_boxes, box_at(n, next)));
    boxes = next_boxes;
    body = next;
  }
  return line;
}

int ProofBuilder::raise(int m, int n, const Formula& a) {
  if (m > n) throw PreconditionError("raise needs m <= n");
  std::vector<int> steps;
  for (int i = m; i < n; ++i) steps.push_back(axiom(Scheme::H, scheme_instance(Scheme::H, i, a)));
  return combine(steps, Formula::imp(Formula::box(m, a), Formula::box(n, a)));
}

int ProofBuilder::lift_box(int m, int n, const Formula& a) {
  if (m >= n) throw PreconditionError("lift_box needs m < n");
  Formula boxed = Formula::box(m, a);
  int four = axiom(Scheme::Fourh, scheme_instance(Scheme::Fourh, m, a));
  if (n == m + 1) return four;
  int up = raise(m + 1, n, boxed);
  return combine({four, up}, Formula::imp(boxed, Formula::box(n, boxed)));
}

// ---------------------------------------------------------------------------
// Strong necessitation

namespace {

// Appends a line equal to `line` at the end, so the proof ends with it.
HilbertProof ending_with(ProofBuilder& b, int line) {
  HilbertProof p = b.take();
  if (line != static_cast<int>(p.lines.size())) p.lines.push_back(p.lines[line - 1]);
  return p;
}

// Z-lift of the hypothesis-free lines 1..last: returns for each line l a line
// proving Z -> (line l)^Z.
std::vector<int> z_lift(ProofBuilder& b, LogicId logic, int last, const Formula& z, int n) {
  std::vector<int> lifted(last + 1, 0);
  for (int l = 1; l <= last; ++l) {
    const HilbertLine line = b.proof().lines[l - 1];
    const Formula& g = line.formula;
    Formula target = Formula::imp(z, z_translate(g, z, n));
    if (g.rank() < n) {
      lifted[l] = b.combine({l}, target);
      continue;
    }
    auto zt = [&](const Formula& f) { return z_translate(f, z, n); };
    switch (line.rule) {
      case Just::Taut:
        lifted[l] = b.taut(target);
        break;
      case Just::MP:
        lifted[l] = b.combine({lifted[line.args[0]], lifted[line.args[1]]}, target);
        break;
      case Just::Nec: {
        int boxed = b.nec(line.args[0], lifted[line.args[1]]);
        lifted[l] = b.combine({boxed}, target);
        break;
      }
      case Just::Axiom: {
        auto m = line.scheme ? match_scheme(*line.scheme, g) : is_axiom_instance(logic, g);
        if (!m) throw PreconditionError("line " + std::to_string(l) + " is not an axiom");
        const int i = m->n;
        switch (m->scheme) {
          case Scheme::Kh: {
            Formula a1 = Formula::imp(z, zt(m->parts[0]));
            Formula b1 = Formula::imp(z, zt(m->parts[1]));
            Formula ab = Formula::imp(z, Formula::imp(zt(m->parts[0]), zt(m->parts[1])));
            int t = b.taut(Formula::imp(ab, Formula::imp(a1, b1)));
            int k1 = b.box_mono(i, t);
            int k2 = b.axiom(Scheme::Kh, scheme_instance(Scheme::Kh, i, a1, b1));
            lifted[l] = b.combine({k1, k2}, target);
            break;
          }
          case Scheme::H: {
            const Formula& a = m->parts[0];
            if (i >= n) {
              lifted[l] = b.combine({b.axiom(Scheme::H, scheme_instance(Scheme::H, i, Formula::imp(z, zt(a))))},
                                    target);
            } else {  // i == n - 1
              int h = b.axiom(Scheme::H, scheme_instance(Scheme::H, i, a));
              int k = b.box_mono(n, b.taut(Formula::imp(a, Formula::imp(z, a))));
              lifted[l] = b.combine({h, k}, target);
            }
            break;
          }
          case Scheme::Fourh: {
            Formula x = zt(Formula::box(i, m->parts[0]));
            int four = b.axiom(Scheme::Fourh, Formula::imp(x, Formula::box(i + 1, x)));
            int k = b.box_mono(i + 1, b.taut(Formula::imp(x, Formula::imp(z, x))));
            lifted[l] = b.combine({four, k}, target);
            break;
          }
          case Scheme::Th: {
            Formula body = Formula::imp(z, zt(m->parts[0]));
            int th = b.axiom(Scheme::Th, Formula::imp(Formula::box(i, body), body));
            lifted[l] = b.combine({th}, target);
            break;
          }
          default:
            throw PreconditionError("strong necessitation does not support axiom " +
                                    std::string(scheme_name(m->scheme)));
        }
        break;
      }
      case Just::Hyp:
        throw PreconditionError("z_lift expects a hypothesis-free proof");
    }
  }
  return lifted;
}

}  // namespace

HilbertProof strong_necessitation(LogicId logic, const std::vector<Formula>& premises, const Formula& a,
                                  int n, const HilbertProof& proof_of_a) {
  if (logic != LogicId::K4h && logic != LogicId::S4h)
    throw PreconditionError("strong necessitation is provided for k4h and s4h");
  if (n < 0 || a.rank() >= n) throw PreconditionError("n must exceed the rank of the conclusion");
  for (const auto& p : premises)
    if (!p.is_box() || p.index() > n)
      throw PreconditionError("premise " + to_string(p) + " is not a box of index <= " + std::to_string(n));
  if (!same_multiset(proof_of_a.hypotheses, premises) || proof_of_a.hypotheses.size() != premises.size())
    throw PreconditionError("the input proof must use exactly the given premises as hypotheses");
  for (std::size_t k = 0; k < premises.size(); ++k)
    if (proof_of_a.hypotheses[k] != premises[k])
      throw PreconditionError("hypotheses must be listed in the order of the premises");
  if (auto r = check_hilbert_proof(logic, proof_of_a, a); !r) throw PreconditionError("input proof: " + r.message);

  ProofBuilder b(premises);
  const auto& src = proof_of_a.lines;

  // Replay, turning every line into P -> line (deduction step).
  Formula all = big_and(premises);
  std::vector<int> free_line(src.size() + 1, 0), cond_line(src.size() + 1, 0);
  std::vector<bool> dep(src.size() + 1, false);
  for (std::size_t idx = 0; idx < src.size(); ++idx) {
    const int l = static_cast<int>(idx) + 1;
    const HilbertLine& line = src[idx];
    switch (line.rule) {
      case Just::Taut:
        free_line[l] = b.taut(line.formula);
        break;
      case Just::Axiom: {
        auto m = line.scheme ? match_scheme(*line.scheme, line.formula) : is_axiom_instance(logic, line.formula);
        free_line[l] = b.axiom(m->scheme, line.formula);
        break;
      }
      case Just::Nec:
        free_line[l] = b.nec(line.args[0], free_line[line.args[1]]);
        break;
      case Just::Hyp:
        dep[l] = true;
        break;
      case Just::MP: {
        int i = line.args[0], j = line.args[1];
        dep[l] = dep[i] || dep[j];
        if (!dep[l]) free_line[l] = b.mp(free_line[i], free_line[j]);
        break;
      }
    }
    if (premises.empty()) continue;
    Formula cond = Formula::imp(all, line.formula);
    if (!dep[l]) cond_line[l] = b.combine({free_line[l]}, cond);
    else if (line.rule == Just::Hyp) cond_line[l] = b.taut(cond);
    else cond_line[l] = b.combine({cond_line[line.args[0]], cond_line[line.args[1]]}, cond);
  }
  const int last = static_cast<int>(src.size());
  if (premises.empty()) return ending_with(b, b.nec(n, free_line[last]));

  std::vector<Formula> tops, lows;  // bodies of [n]-premises; lower premises as boxes
  std::vector<std::size_t> top_hyp, low_hyp;
  for (std::size_t k = 0; k < premises.size(); ++k) {
    if (premises[k].index() == n) {
      tops.push_back(premises[k].child());
      top_hyp.push_back(k);
    } else {
      lows.push_back(premises[k]);
      low_hyp.push_back(k);
    }
  }

  std::vector<Formula> w = tops;  // the conjunction boxed by the final Kh step
  w.insert(w.end(), lows.begin(), lows.end());
  Formula body_goal = Formula::imp(big_and(w), a);
  int w_line;
  if (tops.empty()) {
    w_line = b.combine({cond_line[last]}, body_goal);
  } else {
    std::vector<Formula> top_boxes;
    for (const auto& c : tops) top_boxes.push_back(Formula::box(n, c));
    Formula rest = lows.empty() ? a : Formula::imp(big_and(lows), a);
    Formula f = Formula::imp(big_and(top_boxes), rest);
    int f_line = b.combine({cond_line[last]}, f);
    Formula z = big_and(tops);
    std::vector<int> lifted = z_lift(b, logic, f_line, z, n);
    std::vector<int> from{lifted[f_line]};
    for (const auto& c : tops) from.push_back(b.nec(n, b.taut(Formula::imp(z, c))));
    w_line = b.combine(from, body_goal);
  }

  int kh = b.mp(b.nec(n, w_line), b.axiom(Scheme::Kh, scheme_instance(Scheme::Kh, n, big_and(w), a)));
  std::vector<int> boxed;
  for (std::size_t k : top_hyp) boxed.push_back(b.hyp(k));
  for (std::size_t idx = 0; idx < low_hyp.size(); ++idx) {
    const Formula& p = lows[idx];
    boxed.push_back(b.mp(b.hyp(low_hyp[idx]), b.lift_box(p.index(), n, p.child())));
  }
  boxed.push_back(b.box_conj(n, w));
  boxed.push_back(kh);
  return ending_with(b, b.combine(boxed, Formula::box(n, a)));
}

}  // namespace hml
