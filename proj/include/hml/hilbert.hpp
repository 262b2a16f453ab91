#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hml/formula.hpp"
#include "hml/logic.hpp"
#include "hml/sequent.hpp"

namespace hml {

enum class Just { Taut, Axiom, MP, Nec, Hyp };

std::string_view just_name(Just j);
std::optional<Just> just_from_name(std::string_view name);

// Argument conventions (line references are 1-based, hypotheses 0-based):
//   Taut   {}
//   Axiom  {} ; `scheme` may name the intended scheme
//   MP     {i, j}  line i proves A, line j proves A -> B
//   Nec    {n, i}  for indexed boxes, {i} for the plain box
//   Hyp    {k}
struct HilbertLine {
  Formula formula;
  Just rule = Just::Taut;
  std::vector<int> args;
  std::optional<Scheme> scheme;
};

struct HilbertProof {
  std::vector<Formula> hypotheses;
  std::vector<HilbertLine> lines;

  const Formula& conclusion() const { return lines.back().formula; }
};

struct AxiomMatch {
  Scheme scheme;
  /// Box index of the instance (-1 for uni-modal schemes).
  int n = -1;
  /// The scheme's formula parameters: A, or A and B for K-type schemes.
  std::vector<Formula> parts;
};

/// Matches `a` against the axiom schemes of `logic` in fixed order.
std::optional<AxiomMatch> is_axiom_instance(LogicId logic, const Formula& a);
/// Matches `a` against one scheme, ignoring which logic it belongs to.
std::optional<AxiomMatch> match_scheme(Scheme s, const Formula& a);
/// Instance of an indexed scheme at index n (parts as in AxiomMatch).
Formula scheme_instance(Scheme s, int n, const Formula& a, const std::optional<Formula>& b = std::nullopt);

/// Checks every line; when `goal` is given, the last line must equal it.
/// The message names the first failing line.
CheckResult check_hilbert_proof(LogicId logic, const HilbertProof& p,
                                const std::optional<Formula>& goal = std::nullopt);

/// A^Z relative to level n: boxes of index >= n get Z prefixed to their body.
Formula z_translate(const Formula& a, const Formula& z, int n);

/// Turns a proof of `a` from `premises` (each a box of index <= n) into a
/// proof of [n]a from the same premises. Logic must be K4h or S4h.
HilbertProof strong_necessitation(LogicId logic, const std::vector<Formula>& premises,
                                  const Formula& a, int n, const HilbertProof& proof_of_a);

}  // namespace hml
