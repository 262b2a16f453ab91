#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hml/formula.hpp"
#include "hml/logic.hpp"

namespace hml {

/// Multiset-pair sequent left => right. Element order is kept for printing
/// only; equality is multiset equality.
struct Sequent {
  std::vector<Formula> left;
  std::vector<Formula> right;
};

bool same_multiset(std::span<const Formula> a, std::span<const Formula> b);
bool operator==(const Sequent& a, const Sequent& b);

std::size_t count_of(std::span<const Formula> ms, const Formula& f);
bool contains(std::span<const Formula> ms, const Formula& f);
/// Removes one occurrence; throws PreconditionError if absent.
std::vector<Formula> remove_one(std::span<const Formula> ms, const Formula& f);
std::vector<Formula> remove_all(std::span<const Formula> ms, const Formula& f);
std::vector<Formula> concat(std::span<const Formula> a, std::span<const Formula> b);
/// Sorted, duplicate-free copy.
std::vector<Formula> as_set(std::span<const Formula> ms);

/// "A, B => C"; an empty side prints as nothing.
std::string to_string(const Sequent& s);
/// Parses "A, B => C". Text without "=>" is read as "=> text".
Sequent parse_sequent(std::string_view text);
/// The formula a sequent stands for: conj(left) -> disj(right), or just
/// disj(right) when the left side is empty.
Formula sequent_formula(const Sequent& s);

enum class Rule {
  Ax,
  BotL,
  TopR,
  wL,
  wR,
  cL,
  cR,
  Cut,
  AndL,
  AndR,
  OrL,
  OrR,
  ImpL,
  ImpR,
  NegL,
  NegR,
  Box4hR,
  BoxDhR,
  BoxhL,
  BoxShR,
  Box4R,
  BoxDR,
  BoxSR,
  BoxL,
  GLR,
};

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
bool is_structural(Rule r);
/// Right modal rules (conclusion right side is a single box or empty).
bool is_right_modal(Rule r);
/// Whether the rule belongs to the named calculus.
bool rule_in_calculus(LogicId calculus, Rule r);

struct RuleData {
  /// Principal (or cut, or weakened/contracted) formula.
  std::optional<Formula> principal;
  /// Box index of a hierarchical right modal rule.
  int n = -1;
  /// Which conjunct (AndL) or disjunct (OrR): 0 or 1.
  int side = -1;
};

class Derivation;
using Proof = std::shared_ptr<const Derivation>;

/// Rule-labelled proof tree. Nodes are immutable and may be shared.
class Derivation {
 public:
  Derivation(Sequent conclusion, Rule rule, std::vector<Proof> premises, RuleData data = {});

  const Sequent& conclusion() const { return conclusion_; }
  Rule rule() const { return rule_; }
  const std::vector<Proof>& premises() const { return premises_; }
  const Proof& premise(std::size_t i = 0) const { return premises_.at(i); }
  const RuleData& data() const { return data_; }
  const Formula& principal() const { return *data_.principal; }

  std::size_t height() const { return height_; }
  /// Number of nodes counted as a tree (saturates at SIZE_MAX).
  std::size_t tree_size() const { return size_; }
  bool cut_free() const { return max_cut_ == 0; }
  /// Largest complexity of a cut formula, 0 when cut-free.
  std::size_t max_cut_complexity() const { return max_cut_; }

 private:
  Sequent conclusion_;
  Rule rule_;
  std::vector<Proof> premises_;
  RuleData data_;
  std::size_t height_ = 1;
  std::size_t size_ = 1;
  std::size_t max_cut_ = 0;
};

/// Complexities of all cut formulas, one entry per Cut node occurrence in the tree.
std::vector<std::size_t> cut_complexities(const Proof& d);

struct CheckResult {
  bool ok = true;
  /// First failing node and the violated condition, empty when ok.
  std::string message;
  explicit operator bool() const { return ok; }
};

/// True iff every node is a correct instance of a rule of the calculus.
CheckResult check_derivation(LogicId calculus, const Proof& d);
/// Local check of one node against its premises' conclusions.
std::optional<std::string> check_node(LogicId calculus, const Derivation& d);

// Builders. Each computes the conclusion from its premises (modal rules take
// the conclusion context explicitly) and throws PreconditionError if the step
// is not a rule instance.
namespace rules {

Proof ax(const Formula& a);
Proof bot_l();
Proof top_r();
Proof weaken_left(Proof p, const Formula& a);
Proof weaken_right(Proof p, const Formula& a);
Proof contract_left(Proof p, const Formula& a);
Proof contract_right(Proof p, const Formula& a);
Proof cut(Proof left, Proof right, const Formula& a);
Proof and_l(Proof p, const Formula& principal, int side);
Proof and_r(Proof p0, Proof p1, const Formula& principal);
Proof or_l(Proof p0, Proof p1, const Formula& principal);
Proof or_r(Proof p, const Formula& principal, int side);
Proof imp_l(Proof p0, Proof p1, const Formula& principal);
Proof imp_r(Proof p, const Formula& principal);
Proof neg_l(Proof p, const Formula& principal);
Proof neg_r(Proof p, const Formula& principal);
Proof box4h_r(Proof p, const Formula& principal, std::vector<Formula> context);
Proof boxdh_r(Proof p, int n, std::vector<Formula> context);
Proof boxsh_r(Proof p, const Formula& principal, std::vector<Formula> context);
Proof boxh_l(Proof p, const Formula& principal);
Proof box4_r(Proof p, const Formula& principal, std::vector<Formula> context);
Proof boxd_r(Proof p, std::vector<Formula> context);
Proof boxs_r(Proof p, const Formula& principal);
Proof box_l(Proof p, const Formula& principal);
Proof gl_r(Proof p, const Formula& principal, std::vector<Formula> context);

/// Premise left side required by a right modal rule for the given
/// conclusion context (hierarchical rules use index n).
std::vector<Formula> modal_premise_left(Rule r, int n, std::span<const Formula> context,
                                        const std::optional<Formula>& principal);

/// The rule of d applied to new premises, for every rule whose conclusion is
/// determined by its premises (all but the right modal rules).
Proof reapply(const Derivation& d, const std::vector<Proof>& premises);

/// Contractions then weakenings turning d's endsequent into target. Requires
/// every formula of d's endsequent to occur in target.
Proof adapt(Proof d, const Sequent& target);

}  // namespace rules

}  // namespace hml
