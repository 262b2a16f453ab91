#include "hml/hilbert.hpp"

#include <algorithm>
#include <array>

#include "hml/tautology.hpp"

namespace hml {

namespace {

constexpr std::array<std::pair<Just, std::string_view>, 5> kJustNames{{
    {Just::Taut, "taut"},
    {Just::Axiom, "axiom"},
    {Just::MP, "mp"},
    {Just::Nec, "nec"},
    {Just::Hyp, "hyp"},
}};

bool is_box_at(const Formula& f, int n) { return f.is_box() && f.index() == n; }

}  // namespace

std::string_view just_name(Just j) {
  for (auto [id, name] : kJustNames)
    if (id == j) return name;
  return "?";
}

std::optional<Just> just_from_name(std::string_view name) {
  for (auto [id, n] : kJustNames)
    if (n == name) return id;
  return std::nullopt;
}

std::optional<AxiomMatch> match_scheme(Scheme s, const Formula& a) {
  using enum Kind;
  auto found = [&](int n, std::vector<Formula> parts) {
    return std::optional<AxiomMatch>(AxiomMatch{s, n, std::move(parts)});
  };
  switch (s) {
    case Scheme::H:
      // [n]A -> [n+1]A
      if (a.is(Imp) && a.left().is_box() && is_box_at(a.right(), a.left().index() + 1) &&
          a.left().child() == a.right().child())
        return found(a.left().index(), {a.left().child()});
      break;
    case Scheme::Kh:
    case Scheme::K: {
      // [n](A -> B) -> ([n]A -> [n]B)
      bool indexed = s == Scheme::Kh;
      if (!a.is(Imp) || !a.right().is(Imp)) break;
      const Formula& ab = a.left();
      const Formula& ba = a.right().left();
      const Formula& bb = a.right().right();
      if (!(indexed ? ab.is_box() : ab.is_ubox()) || !ab.child().is(Imp)) break;
      if (!(indexed ? ba.is_box() : ba.is_ubox()) || !(indexed ? bb.is_box() : bb.is_ubox())) break;
      if (indexed && (ba.index() != ab.index() || bb.index() != ab.index())) break;
      if (ab.child().left() != ba.child() || ab.child().right() != bb.child()) break;
      return found(indexed ? ab.index() : -1, {ba.child(), bb.child()});
    }
    case Scheme::Fourh:
      // [n]A -> [n+1][n]A
      if (a.is(Imp) && a.left().is_box() && is_box_at(a.right(), a.left().index() + 1) &&
          a.right().child() == a.left())
        return found(a.left().index(), {a.left().child()});
      break;
    case Scheme::Four:
      if (a.is(Imp) && a.left().is_ubox() && a.right().is_ubox() && a.right().child() == a.left())
        return found(-1, {a.left().child()});
      break;
    case Scheme::Dh:
      if (a.is(Neg) && a.child().is_box() && a.child().child().is(Bot)) return found(a.child().index(), {});
      break;
    case Scheme::D:
      if (a.is(Neg) && a.child().is_ubox() && a.child().child().is(Bot)) return found(-1, {});
      break;
    case Scheme::Lh:
    case Scheme::L: {
      // [n+1]([n]A -> A) -> [n]A
      bool indexed = s == Scheme::Lh;
      if (!a.is(Imp)) break;
      const Formula& goal = a.right();
      const Formula& hyp = a.left();
      if (!(indexed ? goal.is_box() : goal.is_ubox())) break;
      if (!(indexed ? is_box_at(hyp, goal.index() + 1) : hyp.is_ubox())) break;
      if (!hyp.child().is(Imp) || hyp.child().left() != goal || hyp.child().right() != goal.child()) break;
      return found(indexed ? goal.index() : -1, {goal.child()});
    }
    case Scheme::Th:
    case Scheme::T:
      if (a.is(Imp) && (s == Scheme::Th ? a.left().is_box() : a.left().is_ubox()) &&
          a.left().child() == a.right())
        return found(s == Scheme::Th ? a.left().index() : -1, {a.right()});
      break;
    case Scheme::Fiveh:
      // -[n]A -> [n+1]-[n]A
      if (a.is(Imp) && a.left().is(Neg) && a.left().child().is_box() &&
          is_box_at(a.right(), a.left().child().index() + 1) && a.right().child() == a.left())
        return found(a.left().child().index(), {a.left().child().child()});
      break;
  }
  return std::nullopt;
}

std::optional<AxiomMatch> is_axiom_instance(LogicId logic, const Formula& a) {
  for (Scheme s : axiom_schemes(logic))
    if (auto m = match_scheme(s, a)) return m;
  return std::nullopt;
}

Formula scheme_instance(Scheme s, int n, const Formula& a, const std::optional<Formula>& b) {
  using F = Formula;
  switch (s) {
    case Scheme::H:
      return F::imp(F::box(n, a), F::box(n + 1, a));
    case Scheme::Kh:
      if (!b) throw PreconditionError("Kh needs two parts");
      return F::imp(F::box(n, F::imp(a, *b)), F::imp(F::box(n, a), F::box(n, *b)));
    case Scheme::Fourh:
      return F::imp(F::box(n, a), F::box(n + 1, F::box(n, a)));
    case Scheme::Dh:
      return F::neg(F::box(n, F::bot()));
    case Scheme::Lh:
      return F::imp(F::box(n + 1, F::imp(F::box(n, a), a)), F::box(n, a));
    case Scheme::Th:
      return F::imp(F::box(n, a), a);
    case Scheme::Fiveh:
      return F::imp(F::neg(F::box(n, a)), F::box(n + 1, F::neg(F::box(n, a))));
    case Scheme::K:
      if (!b) throw PreconditionError("K needs two parts");
      return F::imp(F::ubox(F::imp(a, *b)), F::imp(F::ubox(a), F::ubox(*b)));
    case Scheme::Four:
      return F::imp(F::ubox(a), F::ubox(F::ubox(a)));
    case Scheme::D:
      return F::neg(F::ubox(F::bot()));
    case Scheme::T:
      return F::imp(F::ubox(a), a);
    case Scheme::L:
      return F::imp(F::ubox(F::imp(F::ubox(a), a)), F::ubox(a));
  }
  throw PreconditionError("unknown scheme");
}

CheckResult check_hilbert_proof(LogicId logic, const HilbertProof& p, const std::optional<Formula>& goal) {
  const bool hier = is_hierarchical(logic);
  auto sorted = [&](const Formula& f) { return hier ? !f.has_plain_box() : !f.has_indexed_box(); };
  for (std::size_t k = 0; k < p.hypotheses.size(); ++k)
    if (!sorted(p.hypotheses[k]))
      return {false, "hypothesis " + std::to_string(k) + " is not in the language of " +
                         std::string(logic_name(logic))};
  if (p.lines.empty()) return {false, "proof has no lines"};

  std::vector<bool> dep(p.lines.size(), false);
  for (std::size_t idx = 0; idx < p.lines.size(); ++idx) {
    const HilbertLine& line = p.lines[idx];
    const int cur = static_cast<int>(idx) + 1;
    auto fail = [&](const std::string& why) {
      return CheckResult{false, "line " + std::to_string(cur) + " (" + std::string(just_name(line.rule)) +
                                    "): " + why};
    };
    auto ref = [&](int i) { return i >= 1 && i < cur; };
    const Formula& f = line.formula;
    if (!sorted(f)) return fail("formula is not in the language of " + std::string(logic_name(logic)));

    switch (line.rule) {
      case Just::Taut:
        if (!tautology(f)) return fail("not a tautology: " + to_string(f));
        break;
      case Just::Axiom: {
        if (line.scheme) {
          const auto& schemes = axiom_schemes(logic);
          if (std::find(schemes.begin(), schemes.end(), *line.scheme) == schemes.end())
            return fail("scheme " + std::string(scheme_name(*line.scheme)) + " is not an axiom of " +
                        std::string(logic_name(logic)));
          if (!match_scheme(*line.scheme, f))
            return fail("not an instance of " + std::string(scheme_name(*line.scheme)));
        } else if (!is_axiom_instance(logic, f)) {
          return fail("not an axiom of " + std::string(logic_name(logic)) + ": " + to_string(f));
        }
        break;
      }
      case Just::MP: {
        if (line.args.size() != 2 || !ref(line.args[0]) || !ref(line.args[1]))
          return fail("expects two earlier line numbers");
        const Formula& a = p.lines[line.args[0] - 1].formula;
        const Formula& ab = p.lines[line.args[1] - 1].formula;
        if (!ab.is(Kind::Imp) || ab.left() != a || ab.right() != f)
          return fail("line " + std::to_string(line.args[1]) + " is not line " + std::to_string(line.args[0]) +
                      " -> this formula");
        dep[idx] = dep[line.args[0] - 1] || dep[line.args[1] - 1];
        break;
      }
      case Just::Nec: {
        int i;
        if (hier) {
          if (line.args.size() != 2 || !ref(line.args[1])) return fail("expects an index and an earlier line");
          i = line.args[1];
          const Formula& a = p.lines[i - 1].formula;
          if (line.args[0] <= a.rank())
            return fail("index " + std::to_string(line.args[0]) + " does not exceed the rank of line " +
                        std::to_string(i));
          if (!is_box_at(f, line.args[0]) || f.child() != a) return fail("formula is not [n] applied to the line");
        } else {
          if (line.args.size() != 1 || !ref(line.args[0])) return fail("expects an earlier line");
          i = line.args[0];
          if (!f.is_ubox() || f.child() != p.lines[i - 1].formula) return fail("formula is not [] applied to the line");
        }
        if (dep[i - 1]) return fail("necessitation of a line that depends on a hypothesis");
        break;
      }
      case Just::Hyp: {
        if (line.args.size() != 1 || line.args[0] < 0 ||
            static_cast<std::size_t>(line.args[0]) >= p.hypotheses.size())
          return fail("hypothesis index out of range");
        if (p.hypotheses[line.args[0]] != f) return fail("formula differs from the hypothesis");
        dep[idx] = true;
        break;
      }
    }
  }
  if (goal && p.lines.back().formula != *goal)
    return {false, "last line proves " + to_string(p.lines.back().formula) + ", not the goal " + to_string(*goal)};
  return {};
}

Formula z_translate(const Formula& a, const Formula& z, int n) {
  if (n < 0 || z.rank() >= n)
    throw PreconditionError("z_translate needs rank(z) < n");
  if (a.rank() < n) return a;
  switch (a.kind()) {
    case Kind::Neg:
      return Formula::neg(z_translate(a.child(), z, n));
    case Kind::And:
      return Formula::conj(z_translate(a.left(), z, n), z_translate(a.right(), z, n));
    case Kind::Or:
      return Formula::disj(z_translate(a.left(), z, n), z_translate(a.right(), z, n));
    case Kind::Imp:
      return Formula::imp(z_translate(a.left(), z, n), z_translate(a.right(), z, n));
    case Kind::Box:
      // here a.index() >= n since rank(a) >= n
      return Formula::box(a.index(), Formula::imp(z, z_translate(a.child(), z, n)));
    default:
      throw SortError("z_translate applies to indexed formulas only");
  }
}

}  // namespace hml
