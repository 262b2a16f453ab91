#pragma once

#include <cstddef>
#include <vector>

#include "hml/sequent.hpp"

namespace hml {

/// Length of a formula: its node count, one per box.
inline std::size_t complexity(const Formula& a) { return a.complexity(); }

/// A derivation whose cut formulas all have complexity strictly below `bound`.
struct DProof {
  Proof proof;
  std::size_t bound = 0;
};

bool is_dproof(const DProof& d);

/// One application of the principal lemma. `left` ends in G => D with a in D,
/// `right` in G' => D' with a in G'. Both must be d-proofs for
/// d = complexity(a). Returns a d-proof of G, G' - a => D - a, D' where "- a"
/// removes every occurrence.
DProof reduce_principal(LogicId calculus, const Formula& a, const DProof& left, const DProof& right);

struct CutElimStats {
  /// Complexity of each cut removed, in elimination order.
  std::vector<std::size_t> eliminated;
  /// Calls of the reduction step (including recursive ones).
  std::size_t steps = 0;
};

/// Cut-free derivation of the same endsequent. Cuts are removed topmost
/// first. Throws ResourceLimit after `step_budget` reduction steps.
Proof eliminate_cuts(LogicId calculus, const Proof& d, CutElimStats* stats = nullptr,
                     std::size_t step_budget = 20'000'000);

}  // namespace hml
