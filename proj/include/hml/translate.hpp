#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hml/sequent.hpp"

namespace hml {

// --- translation into uni-modal logic over the reserved atoms q0, q1, ... ---

/// q0 & q1 & ... & qn, left-nested.
Formula q_block(int n);

/// [n]A becomes [](q0 & ... & qn -> A'); homomorphic elsewhere.
/// Throws PreconditionError on reserved atoms, SortError on plain boxes.
Formula t_translate(const Formula& a);

struct XClass {
  enum class Kind { NotInX, NonBoxedMember, FirstKind, SecondKind };
  Kind kind = Kind::NotInX;
  int m = -1;  // SecondKind only: last q of the block
  int n = -1;  // length of the block minus one
  std::optional<Formula> core;

  bool member() const { return kind != Kind::NotInX; }
  bool boxed() const { return kind == Kind::FirstKind || kind == Kind::SecondKind; }
};

/// Syntactic membership in X. First kind: [](q0 & ... & qn -> B) with every
/// q in B below n. Second kind: [](q0 & ... & qm & bot & ... & bot -> B)
/// with the block running to n > m and every q in B at most m.
XClass classify_x(const Formula& b);

/// Inverse of t on X: q atoms and second-kind boxes go to top.
Formula s_translate(const Formula& b);

/// Replaces every qi with i > n by bot.
Formula sigma_n(const Formula& b, int n);
/// The same substitution applied to every formula of a derivation.
Proof sigma_n(const Proof& d, int n);

/// Every formula of d is in X and each Box4R/BoxSR conclusion box has q-rank
/// at least that of every context formula. Throws NotXProof.
bool is_good_xproof(LogicId calculus, const Proof& d);

struct GoodProof {
  std::vector<Formula> sigma;  // second-kind boxes added on the left
  Proof proof;                 // of sigma, G => D
};

/// Makes an X-proof good by adding second-kind boxes to the antecedent.
GoodProof goodify(LogicId calculus, const Proof& d);

// --- witnesses ---------------------------------------------------------------

/// Index assignment for the boxes of a uni-modal formula: a leaf at atoms and
/// constants, a pair at binary connectives, the child's witness unchanged at
/// negation, and (n, w) at boxes.
struct Witness {
  enum class Kind { Leaf, Pair, Box };
  Kind kind = Kind::Leaf;
  int n = 0;
  std::vector<Witness> kids;

  static Witness leaf() { return {}; }
  static Witness pair(Witness a, Witness b) { return {Kind::Pair, 0, {std::move(a), std::move(b)}}; }
  static Witness box(int n, Witness w) { return {Kind::Box, n, {std::move(w)}}; }

  /// Largest number occurring, -1 if none.
  int max_number() const;
  bool operator==(const Witness&) const = default;
};

bool check_witness(const Witness& w, const Formula& b);
/// b(w): every box gets the index the witness assigns to it.
Formula apply_witness(const Formula& b, const Witness& w);
/// A^f together with the witness that recovers A.
std::pair<Formula, Witness> forgetful_f(const Formula& a);
/// Witness for t_translate(a) giving each box the index of the box it translates.
Witness canonical_witness(const Formula& a);

/// Nested-array text: leaf [], pair [w1,w2], box [n,w].
std::string to_string(const Witness& w);
/// Throws SyntaxError.
Witness parse_witness(std::string_view text);

/// Every box gets the least admissible index (rank of its scope plus one);
/// boxes not inside another box get at least `target`.
Formula normalize_indices_gl(const Formula& a, int target = 0);

}  // namespace hml
