#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hml {

enum class LogicId { K4h, KD4h, S4h, GLh, KD45h, S5h, K4, KD4, S4, GL, K4Q, S4Q };

/// Axiom schemes, in the fixed matching order H, Kh, 4h, Dh, Lh, Th, 5h
/// followed by the uni-modal K, 4, D, T, L.
enum class Scheme { H, Kh, Fourh, Dh, Lh, Th, Fiveh, K, Four, D, T, L };

inline constexpr LogicId kAllLogics[] = {LogicId::K4h, LogicId::KD4h, LogicId::S4h, LogicId::GLh,
                                         LogicId::KD45h, LogicId::S5h, LogicId::K4, LogicId::KD4,
                                         LogicId::S4, LogicId::GL, LogicId::K4Q, LogicId::S4Q};

/// Lowercase CLI name: k4h, kd4h, s4h, glh, kd45h, s5h, k4, kd4, s4, gl, k4q, s4q.
std::string_view logic_name(LogicId l);
std::optional<LogicId> logic_from_name(std::string_view name);

std::string_view scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

/// Language of indexed boxes (the *h logics).
bool is_hierarchical(LogicId l);
/// Axiom schemes of the logic's Hilbert system, in matching order.
const std::vector<Scheme>& axiom_schemes(LogicId l);
/// Logics with a cut-free sequent calculus in this library.
bool has_calculus(LogicId l);

}  // namespace hml
