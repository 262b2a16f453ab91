#pragma once

// Shared helpers for the test executables: short parsers and two
// independent semantic oracles (truth tables, small Kripke frames).

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hml/formula.hpp"
#include "hml/sequent.hpp"

namespace hml::testing {

inline Formula F(const std::string& s) { return parse_formula(s); }
inline Sequent S(const std::string& s) { return parse_sequent(s); }

inline void collect_atoms(const Formula& a, std::set<std::string>& out) {
  if (a.is(Kind::Atom)) {
    out.insert(a.name());
    return;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) collect_atoms(i == 0 ? a.left() : a.right(), out);
}

// Truth-table evaluation; boxed subformulas are looked up as opaque atoms.
inline bool eval_table(const Formula& a, const std::function<bool(const Formula&)>& leaf) {
  switch (a.kind()) {
    case Kind::Bot:
      return false;
    case Kind::Top:
      return true;
    case Kind::Neg:
      return !eval_table(a.child(), leaf);
    case Kind::And:
      return eval_table(a.left(), leaf) && eval_table(a.right(), leaf);
    case Kind::Or:
      return eval_table(a.left(), leaf) || eval_table(a.right(), leaf);
    case Kind::Imp:
      return !eval_table(a.left(), leaf) || eval_table(a.right(), leaf);
    default:
      return leaf(a);
  }
}

inline void collect_skeleton_atoms(const Formula& a, std::vector<Formula>& out) {
  switch (a.kind()) {
    case Kind::Bot:
    case Kind::Top:
      return;
    case Kind::Neg:
      collect_skeleton_atoms(a.child(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      collect_skeleton_atoms(a.left(), out);
      collect_skeleton_atoms(a.right(), out);
      return;
    default:
      for (const auto& x : out)
        if (x == a) return;
      out.push_back(a);
  }
}

/// Brute-force truth table over the skeleton atoms (at most 20).
inline bool truth_table_valid(const Formula& a) {
  std::vector<Formula> atoms;
  collect_skeleton_atoms(a, atoms);
  if (atoms.size() > 20) throw std::runtime_error("too many atoms for a truth table");
  for (std::uint32_t v = 0; v < (1u << atoms.size()); ++v) {
    auto leaf = [&](const Formula& x) {
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == x) return ((v >> i) & 1u) != 0;
      return false;
    };
    if (!eval_table(a, leaf)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kripke frames with at most 8 worlds; truth sets are bitmasks. Every box,
// indexed or plain, is read with the single accessibility relation, which is
// sound for the hierarchical logics through their forgetful images.

struct Frame {
  int worlds = 0;
  std::vector<std::uint8_t> succ;  // succ[w]: bitmask of successors
};

inline std::uint8_t box_set(const Frame& fr, std::uint8_t body) {
  std::uint8_t out = 0;
  for (int w = 0; w < fr.worlds; ++w)
    if ((fr.succ[w] & ~body) == 0) out |= static_cast<std::uint8_t>(1u << w);
  return out;
}

inline std::uint8_t eval_kripke(const Formula& a, const Frame& fr, const std::vector<std::string>& atoms,
                                const std::vector<std::uint8_t>& val) {
  const std::uint8_t all = static_cast<std::uint8_t>((1u << fr.worlds) - 1);
  switch (a.kind()) {
    case Kind::Atom:
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == a.name()) return val[i];
      return 0;
    case Kind::Bot:
      return 0;
    case Kind::Top:
      return all;
    case Kind::Neg:
      return all & ~eval_kripke(a.child(), fr, atoms, val);
    case Kind::And:
      return eval_kripke(a.left(), fr, atoms, val) & eval_kripke(a.right(), fr, atoms, val);
    case Kind::Or:
      return eval_kripke(a.left(), fr, atoms, val) | eval_kripke(a.right(), fr, atoms, val);
    case Kind::Imp:
      return all & (~eval_kripke(a.left(), fr, atoms, val) | eval_kripke(a.right(), fr, atoms, val));
    case Kind::Box:
    case Kind::UBox:
      return box_set(fr, eval_kripke(a.child(), fr, atoms, val));
  }
  return 0;
}

enum class FrameClass { Transitive, Serial, Reflexive, Strict };

/// All transitive frames on 1..max_worlds worlds in the class, where Serial
/// adds seriality, Reflexive reflexivity and Strict irreflexivity (the finite
/// frames of GL).
inline std::vector<Frame> frames(FrameClass cls, int max_worlds) {
  std::vector<Frame> out;
  for (int n = 1; n <= max_worlds; ++n) {
    const int bits = n * n;
    for (std::uint32_t code = 0; code < (1u << bits); ++code) {
      Frame fr{n, std::vector<std::uint8_t>(n, 0)};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((code >> (i * n + j)) & 1u) fr.succ[i] |= static_cast<std::uint8_t>(1u << j);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < n; ++j)
          if ((fr.succ[i] >> j) & 1u)
            if ((fr.succ[j] & ~fr.succ[i]) != 0) ok = false;
        bool self = (fr.succ[i] >> i) & 1u;
        if (cls == FrameClass::Serial && fr.succ[i] == 0) ok = false;
        if (cls == FrameClass::Reflexive && !self) ok = false;
        if (cls == FrameClass::Strict && self) ok = false;
      }
      if (ok) out.push_back(fr);
    }
  }
  return out;
}

/// True iff a holds at every world of every frame under every valuation of
/// its atoms.
inline bool kripke_valid(const Formula& a, const std::vector<Frame>& frs) {
  std::set<std::string> names;
  collect_atoms(a, names);
  std::vector<std::string> atoms(names.begin(), names.end());
  for (const auto& fr : frs) {
    const std::uint8_t all = static_cast<std::uint8_t>((1u << fr.worlds) - 1);
    const std::uint64_t combos = 1ull << (fr.worlds * atoms.size());
    std::vector<std::uint8_t> val(atoms.size());
    for (std::uint64_t c = 0; c < combos; ++c) {
      for (std::size_t i = 0; i < atoms.size(); ++i)
        val[i] = static_cast<std::uint8_t>((c >> (i * fr.worlds)) & all);
      if (eval_kripke(a, fr, atoms, val) != all) return false;
    }
  }
  return true;
}

}  // namespace hml::testing
