#ifndef FCNLAB_PARAMETER_HPP
#define FCNLAB_PARAMETER_HPP

#include <array>
#include <string>
#include <string_view>

namespace fcnlab {

/// The set properties whose minimum sizes this library computes.
enum class ParameterKind {
  DOM,     // dominating
  IDOM,    // independent dominating
  TDOM,    // total dominating
  CDOM,    // connected dominating
  DDOM,    // double dominating
  TWODOM,  // 2-dominating
  DIM,     // resolving (metric dimension)
  RDOM,    // resolving dominating
  RIDOM,   // resolving independent dominating
  RTDOM,   // resolving total dominating
  RCDOM,   // resolving connected dominating
  QDDOM,   // quasi-double dominating pair
};

inline constexpr std::array<ParameterKind, 12> kAllKinds{
    ParameterKind::DOM,   ParameterKind::IDOM,   ParameterKind::TDOM,
    ParameterKind::CDOM,  ParameterKind::DDOM,   ParameterKind::TWODOM,
    ParameterKind::DIM,   ParameterKind::RDOM,   ParameterKind::RIDOM,
    ParameterKind::RTDOM, ParameterKind::RCDOM,  ParameterKind::QDDOM};

/// "DOM", "TWODOM", ...
std::string_view kind_name(ParameterKind k);
/// Conventional symbol, e.g. "gamma_t", "dim".
std::string_view kind_symbol(ParameterKind k);
/// Case-insensitive; accepts the names above plus "2dom".
ParameterKind parse_kind(std::string_view name);

bool needs_resolving(ParameterKind k);
bool needs_connected(ParameterKind k);

}  // namespace fcnlab

#endif  // FCNLAB_PARAMETER_HPP
