#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hml/hilbert.hpp"
#include "hml/search.hpp"
#include "hml/sequent.hpp"

namespace hml {

struct Verdict {
  bool provable = false;
  LogicId logic = LogicId::K4h;
  /// For glh the derivation is a GL derivation of the forgetful image.
  std::optional<Proof> derivation;
  std::optional<HilbertProof> hilbert;
};

/// Theoremhood of a in the given logic. Hierarchical logics take indexed
/// formulas, uni-modal ones plain formulas (SortError otherwise).
/// Throws Unsupported for kd45h and s5h, ResourceLimit from search.
Verdict decide(LogicId logic, const Formula& a, const SearchOptions& opt = {});

/// GLh decided through GL on the forgetful image.
Verdict gl_h_decide(const Formula& a, const SearchOptions& opt = {});

enum class Split { Left, Right, NotTheorem };
const char* split_name(Split s);

/// For |- [n]a | [m]b, names a disjunct whose body is a theorem, read off the
/// first non-structural rule of a cut-free proof. Supports k4h, kd4h, s4h,
/// glh.
Split disjunction_split(LogicId logic, int n, const Formula& a, int m, const Formula& b,
                        const SearchOptions& opt = {});

/// Deterministic random L-infinity formulas over atoms p, q, r and the
/// constants. Depth counts nodes on the longest path (a leaf has depth 1).
std::vector<Formula> gen_corpus(std::uint64_t seed, std::size_t count, int max_depth, int max_index);

}  // namespace hml
