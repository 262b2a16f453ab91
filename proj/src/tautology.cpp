#include "hml/tautology.hpp"

#include <vector>

namespace hml {

namespace {

// G3 on work lists. `lits_l`/`lits_r` hold the opaque leaves seen so far.
class Skeleton {
 public:
  bool valid(std::vector<Formula> l, std::vector<Formula> r, std::vector<Formula> lits_l,
             std::vector<Formula> lits_r) {
    while (true) {
      // non-branching steps first
      bool moved = false;
      for (std::size_t i = 0; i < l.size() && !moved; ++i) {
        Formula f = l[i];
        switch (f.kind()) {
          case Kind::Bot:
            return true;
          case Kind::Top:
            l.erase(l.begin() + i);
            moved = true;
            break;
          case Kind::Neg:
            l.erase(l.begin() + i);
            r.push_back(f.child());
            moved = true;
            break;
          case Kind::And:
            l.erase(l.begin() + i);
            l.push_back(f.left());
            l.push_back(f.right());
            moved = true;
            break;
          case Kind::Or:
          case Kind::Imp:
            break;
          default:
            l.erase(l.begin() + i);
            if (contains(lits_r, f)) return true;
            lits_l.push_back(f);
            moved = true;
        }
      }
      for (std::size_t i = 0; i < r.size() && !moved; ++i) {
        Formula f = r[i];
        switch (f.kind()) {
          case Kind::Top:
            return true;
          case Kind::Bot:
            r.erase(r.begin() + i);
            moved = true;
            break;
          case Kind::Neg:
            r.erase(r.begin() + i);
            l.push_back(f.child());
            moved = true;
            break;
          case Kind::Or:
            r.erase(r.begin() + i);
            r.push_back(f.left());
            r.push_back(f.right());
            moved = true;
            break;
          case Kind::Imp:
            r.erase(r.begin() + i);
            l.push_back(f.left());
            r.push_back(f.right());
            moved = true;
            break;
          case Kind::And:
            break;
          default:
            r.erase(r.begin() + i);
            if (contains(lits_l, f)) return true;
            lits_r.push_back(f);
            moved = true;
        }
      }
      if (moved) continue;

      for (std::size_t i = 0; i < l.size(); ++i) {
        Formula f = l[i];
        auto rest = l;
        rest.erase(rest.begin() + i);
        if (f.is(Kind::Or)) {
          auto a = rest, b = rest;
          a.push_back(f.left());
          b.push_back(f.right());
          return valid(a, r, lits_l, lits_r) && valid(b, r, lits_l, lits_r);
        }
        // Imp
        auto r2 = r;
        r2.push_back(f.left());
        auto b = rest;
        b.push_back(f.right());
        return valid(rest, r2, lits_l, lits_r) && valid(b, r, lits_l, lits_r);
      }
      for (std::size_t i = 0; i < r.size(); ++i) {
        Formula f = r[i];
        auto rest = r;
        rest.erase(rest.begin() + i);
        auto a = rest, b = rest;
        a.push_back(f.left());
        b.push_back(f.right());
        return valid(l, a, lits_l, lits_r) && valid(l, b, lits_l, lits_r);
      }
      return false;
    }
  }

 private:
  static bool contains(const std::vector<Formula>& v, const Formula& f) {
    for (const auto& g : v)
      if (g == f) return true;
    return false;
  }
};

}  // namespace

bool skeleton_valid(std::span<const Formula> left, std::span<const Formula> right) {
  Skeleton s;
  return s.valid({left.begin(), left.end()}, {right.begin(), right.end()}, {}, {});
}

bool tautology(const Formula& a) {
  Formula f = a;
  return skeleton_valid({}, std::span<const Formula>(&f, 1));
}

}  // namespace hml
