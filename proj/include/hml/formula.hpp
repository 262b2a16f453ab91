#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hml/errors.hpp"

namespace hml {

enum class Kind : std::uint8_t { Atom, Bot, Top, Neg, And, Or, Imp, Box, UBox };

// Formulas are immutable trees shared by reference. One type covers both
// sorts: a formula is hierarchical when it holds no plain box and uni-modal
// when it holds no indexed box (box-free formulas are both). The builders
// refuse mixed trees and enforce the index-nesting constraint.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula bot();
  static Formula top();
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  /// Indexed box; throws NestingError unless n > rank(a).
  static Formula box(int n, Formula a);
  /// Plain (uni-modal) box.
  static Formula ubox(Formula a);
  static Formula reserved(int i) { return atom("q" + std::to_string(i)); }

  Kind kind() const { return node_->kind; }
  int index() const { return node_->index; }
  const std::string& name() const { return node_->name; }
  const Formula& child() const { return node_->kids[0]; }
  const Formula& left() const { return node_->kids[0]; }
  const Formula& right() const { return node_->kids[1]; }
  std::size_t arity() const;

  /// Largest box index, -1 when there is none.
  int rank() const { return node_->rank; }
  /// Largest i such that q_i occurs, -1 when there is none.
  int q_rank() const { return node_->q_rank; }
  /// Node count; every box counts once.
  std::size_t complexity() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  bool is(Kind k) const { return node_->kind == k; }
  bool is_box() const { return node_->kind == Kind::Box; }
  bool is_ubox() const { return node_->kind == Kind::UBox; }
  bool any_box() const { return is_box() || is_ubox(); }
  bool has_indexed_box() const { return node_->has_ibox; }
  bool has_plain_box() const { return node_->has_ubox; }
  bool is_hierarchical() const { return !node_->has_ubox; }
  bool is_unimodal() const { return !node_->has_ibox; }
  /// True for q0, q1, ...
  bool is_reserved_atom() const { return node_->reserved >= 0; }
  int reserved_index() const { return node_->reserved; }
  bool has_reserved_atom() const { return node_->has_reserved; }

  bool same(const Formula& o) const { return node_ == o.node_; }

 private:
  struct Node {
    Kind kind;
    int index = -1;
    std::string name;
    std::vector<Formula> kids;
    int rank = -1;
    int q_rank = -1;
    int reserved = -1;
    std::size_t size = 1;
    std::size_t hash = 0;
    bool has_ibox = false;
    bool has_ubox = false;
    bool has_reserved = false;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, int index, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

/// Total structural order: by complexity, then shape. Deterministic across
/// processes.
int compare(const Formula& a, const Formula& b);

inline bool operator==(const Formula& a, const Formula& b) {
  return a.same(b) || (a.hash() == b.hash() && compare(a, b) == 0);
}
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
inline bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// rank of a list: the maximum over members, -1 when empty.
int rank(std::span<const Formula> fs);
int q_rank(std::span<const Formula> fs);

/// Left-nested conjunction a0 & a1 & ...; top when empty.
Formula big_and(std::span<const Formula> fs);
/// Left-nested disjunction; bot when empty.
Formula big_or(std::span<const Formula> fs);
inline Formula iff(const Formula& a, const Formula& b) {
  return Formula::conj(Formula::imp(a, b), Formula::imp(b, a));
}

/// Simultaneous substitution at atom leaves. Throws NestingError or SortError
/// if the result is ill-formed.
Formula subst_atoms(const Formula& a, const std::map<std::string, Formula>& m);

// ---------------------------------------------------------------------------
// Raw trees: parse results before the nesting constraint is enforced.

struct RawFormula {
  Kind kind = Kind::Atom;
  int index = -1;
  std::string name;
  std::vector<RawFormula> kids;
};

/// Parses any formula text; only syntax is checked.
RawFormula parse_raw(std::string_view text);
/// True iff the tree uses indexed boxes only and every box index strictly
/// exceeds the rank of its child.
bool is_wff_h(const RawFormula& raw);
/// Builds a Formula; throws NestingError / SortError on ill-formed trees.
Formula build(const RawFormula& raw);

/// Parses an L-infinity formula (indexed boxes only).
Formula parse_h(std::string_view text);
/// Parses a uni-modal formula (plain boxes only).
Formula parse_u(std::string_view text);
/// Parses a formula of either sort.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(to_string(a)) == a.
std::string to_string(const Formula& a);
std::string to_string(const RawFormula& a);

}  // namespace hml
