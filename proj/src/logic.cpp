#include "hml/logic.hpp"

#include <array>
#include <utility>

namespace hml {

namespace {

constexpr std::array<std::pair<LogicId, std::string_view>, 12> kLogicNames{{
    {LogicId::K4h, "k4h"},
    {LogicId::KD4h, "kd4h"},
    {LogicId::S4h, "s4h"},
    {LogicId::GLh, "glh"},
    {LogicId::KD45h, "kd45h"},
    {LogicId::S5h, "s5h"},
    {LogicId::K4, "k4"},
    {LogicId::KD4, "kd4"},
    {LogicId::S4, "s4"},
    {LogicId::GL, "gl"},
    {LogicId::K4Q, "k4q"},
    {LogicId::S4Q, "s4q"},
}};

constexpr std::array<std::pair<Scheme, std::string_view>, 12> kSchemeNames{{
    {Scheme::H, "H"},
    {Scheme::Kh, "Kh"},
    {Scheme::Fourh, "4h"},
    {Scheme::Dh, "Dh"},
    {Scheme::Lh, "Lh"},
    {Scheme::Th, "Th"},
    {Scheme::Fiveh, "5h"},
    {Scheme::K, "K"},
    {Scheme::Four, "4"},
    {Scheme::D, "D"},
    {Scheme::T, "T"},
    {Scheme::L, "L"},
}};

}  // namespace

std::string_view logic_name(LogicId l) {
  for (auto [id, name] : kLogicNames)
    if (id == l) return name;
  return "?";
}

std::optional<LogicId> logic_from_name(std::string_view name) {
  for (auto [id, n] : kLogicNames)
    if (n == name) return id;
  return std::nullopt;
}

std::string_view scheme_name(Scheme s) {
  for (auto [id, name] : kSchemeNames)
    if (id == s) return name;
  return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
  for (auto [id, n] : kSchemeNames)
    if (n == name) return id;
  return std::nullopt;
}

bool is_hierarchical(LogicId l) {
  switch (l) {
    case LogicId::K4h:
    case LogicId::KD4h:
    case LogicId::S4h:
    case LogicId::GLh:
    case LogicId::KD45h:
    case LogicId::S5h:
      return true;
    default:
      return false;
  }
}

const std::vector<Scheme>& axiom_schemes(LogicId l) {
  using S = Scheme;
  static const std::vector<S> k4h{S::H, S::Kh, S::Fourh};
  static const std::vector<S> kd4h{S::H, S::Kh, S::Fourh, S::Dh};
  static const std::vector<S> s4h{S::H, S::Kh, S::Fourh, S::Th};
  static const std::vector<S> glh{S::H, S::Kh, S::Fourh, S::Lh};
  static const std::vector<S> kd45h{S::H, S::Kh, S::Fourh, S::Dh, S::Fiveh};
  static const std::vector<S> s5h{S::H, S::Kh, S::Fourh, S::Th, S::Fiveh};
  static const std::vector<S> k4{S::K, S::Four};
  static const std::vector<S> kd4{S::K, S::Four, S::D};
  static const std::vector<S> s4{S::K, S::Four, S::T};
  static const std::vector<S> gl{S::K, S::Four, S::L};
  switch (l) {
    case LogicId::K4h:
      return k4h;
    case LogicId::KD4h:
      return kd4h;
    case LogicId::S4h:
      return s4h;
    case LogicId::GLh:
      return glh;
    case LogicId::KD45h:
      return kd45h;
    case LogicId::S5h:
      return s5h;
    case LogicId::K4:
    case LogicId::K4Q:
      return k4;
    case LogicId::KD4:
      return kd4;
    case LogicId::S4:
    case LogicId::S4Q:
      return s4;
    case LogicId::GL:
      return gl;
  }
  return k4h;
}

bool has_calculus(LogicId l) {
  return l != LogicId::GLh && l != LogicId::KD45h && l != LogicId::S5h;
}

}  // namespace hml
