#pragma once

#include <span>

#include "hml/formula.hpp"

namespace hml {

/// Classical validity of the propositional skeleton: every boxed subformula
/// is an opaque atom.
bool tautology(const Formula& a);

/// Classical validity of the skeleton of left => right.
bool skeleton_valid(std::span<const Formula> left, std::span<const Formula> right);

}  // namespace hml
