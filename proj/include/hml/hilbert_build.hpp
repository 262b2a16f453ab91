#pragma once

#include <unordered_map>
#include <vector>

#include "hml/hilbert.hpp"

namespace hml {

/// Incremental construction of Hilbert proofs. Every method returns the
/// 1-based number of a line proving the requested formula; a formula already
/// proven without hypotheses is reused instead of repeated.
///
/// Box helpers take an index n >= 0 for indexed boxes and n < 0 for the
/// plain box.
class ProofBuilder {
 public:
  explicit ProofBuilder(std::vector<Formula> hypotheses = {});

  int hyp(std::size_t k);
  /// Throws PreconditionError if f is not a tautology.
  int taut(const Formula& f);
  int axiom(Scheme s, const Formula& f);
  int mp(int a, int imp);
  int nec(int n, int line);

  const Formula& formula(int line) const { return proof_.lines.at(line - 1).formula; }
  bool depends(int line) const { return dep_.at(line - 1); }

  /// Proves `target` from the given lines with one tautology and a chain of
  /// modus ponens: from L1, ..., Lk and |- L1 -> ... -> Lk -> target.
  int combine(const std::vector<int>& from, const Formula& target);
  /// From a hypothesis-free line A -> B, a line [n]A -> [n]B.
  int box_mono(int n, int imp_line);
  /// [n]X1 & ... & [n]Xk -> [n](X1 & ... & Xk), both sides left-nested.
  int box_conj(int n, const std::vector<Formula>& xs);
  /// [m]A -> [n]A for m <= n, by a chain of H instances.
  int raise(int m, int n, const Formula& a);
  /// [m]A -> [n][m]A for m < n: one 4h instance then H.
  int lift_box(int m, int n, const Formula& a);

  const HilbertProof& proof() const { return proof_; }
  HilbertProof take() { return std::move(proof_); }

 private:
  int push(const Formula& f, Just rule, std::vector<int> args, bool dep,
           std::optional<Scheme> scheme = std::nullopt);

  HilbertProof proof_;
  std::vector<bool> dep_;
  std::unordered_map<Formula, int, FormulaHash> free_;
  std::unordered_map<std::size_t, int> hyp_lines_;
};

/// Box builder: indexed for n >= 0, plain for n < 0.
Formula box_at(int n, const Formula& a);

}  // namespace hml
