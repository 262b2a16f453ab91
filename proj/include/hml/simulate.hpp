#pragma once

#include "hml/hilbert.hpp"
#include "hml/sequent.hpp"

namespace hml {

/// Hilbert proof of sequent_formula(endsequent) in the Hilbert logic of the
/// same name. `d` must check in K4h, KD4h or S4h (cuts allowed).
HilbertProof hilbert_from_derivation(LogicId calculus, const Proof& d);

/// Hilbert proof of a from the given hypotheses, where `d` derives
/// premises => a (left side equal to the premises as a multiset).
HilbertProof hilbert_from_premises(LogicId calculus, const std::vector<Formula>& premises, const Proof& d);

/// Derivation of => goal, with cuts simulating modus ponens. `p` must check
/// without hypotheses in K4h, KD4h or S4h.
Proof derivation_from_hilbert(LogicId calculus, const HilbertProof& p);

/// The fixed derivation of an axiom instance in the given calculus.
Proof axiom_derivation(LogicId calculus, const AxiomMatch& m);

}  // namespace hml
