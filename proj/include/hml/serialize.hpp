#pragma once

#include <string>
#include <string_view>

#include "hml/hilbert.hpp"
#include "hml/sequent.hpp"

namespace hml {

// JSON forms of proof objects. Formulas are written as text in the module
// syntax. Readers throw SyntaxError on malformed input and do not check the
// proof; use check_derivation / check_hilbert_proof for that.

/// {"sequent": {"left": [...], "right": [...]}, "rule": name,
///  "data": {"principal", "n", "side"}, "premises": [...]}
std::string derivation_to_json(const Proof& d, int indent = -1);
Proof derivation_from_json(std::string_view text);

/// {"hypotheses": [...], "lines": [{"formula", "rule", "args"}]}; axiom
/// lines carry the scheme name as their only argument.
std::string hilbert_to_json(const HilbertProof& p, int indent = -1);
HilbertProof hilbert_from_json(std::string_view text);

}  // namespace hml
