#pragma once

#include <cstddef>
#include <optional>

#include "hml/sequent.hpp"

namespace hml {

struct SearchOptions {
  /// Maximum number of search nodes before ResourceLimit is thrown.
  std::size_t node_budget = 5'000'000;
  /// Treat boxed formulas as atoms and never apply a modal rule.
  bool propositional_only = false;
};

/// Backward proof search in the cut-free calculus of `calculus` (K4h, KD4h,
/// S4h, K4, KD4, S4, GL, K4Q, S4Q). Returns a cut-free derivation whose
/// endsequent is exactly `s`, or nothing when `s` is not derivable.
std::optional<Proof> prove(LogicId calculus, const Sequent& s, const SearchOptions& opt = {});

/// Convenience: prove => a.
std::optional<Proof> prove_formula(LogicId calculus, const Formula& a, const SearchOptions& opt = {});

}  // namespace hml
