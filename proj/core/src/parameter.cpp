#include "fcnlab/parameter.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fcnlab {

std::string_view kind_name(ParameterKind k) {
  switch (k) {
    case ParameterKind::DOM: return "DOM";
    case ParameterKind::IDOM: return "IDOM";
    case ParameterKind::TDOM: return "TDOM";
    case ParameterKind::CDOM: return "CDOM";
    case ParameterKind::DDOM: return "DDOM";
    case ParameterKind::TWODOM: return "TWODOM";
    case ParameterKind::DIM: return "DIM";
    case ParameterKind::RDOM: return "RDOM";
    case ParameterKind::RIDOM: return "RIDOM";
    case ParameterKind::RTDOM: return "RTDOM";
    case ParameterKind::RCDOM: return "RCDOM";
    case ParameterKind::QDDOM: return "QDDOM";
  }
  return "?";
}

std::string_view kind_symbol(ParameterKind k) {
  switch (k) {
    case ParameterKind::DOM: return "gamma";
    case ParameterKind::IDOM: return "gamma_i";
    case ParameterKind::TDOM: return "gamma_t";
    case ParameterKind::CDOM: return "gamma_c";
    case ParameterKind::DDOM: return "gamma_x2";
    case ParameterKind::TWODOM: return "gamma_2";
    case ParameterKind::DIM: return "dim";
    case ParameterKind::RDOM: return "gamma_r";
    case ParameterKind::RIDOM: return "gamma_ri";
    case ParameterKind::RTDOM: return "gamma_rt";
    case ParameterKind::RCDOM: return "gamma_rc";
    case ParameterKind::QDDOM: return "gamma_qx2";
  }
  return "?";
}

ParameterKind parse_kind(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "2DOM") return ParameterKind::TWODOM;
  for (auto k : kAllKinds) {
    if (upper == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown parameter kind '" + std::string(name) + "'");
}

bool needs_resolving(ParameterKind k) {
  return k == ParameterKind::DIM || k == ParameterKind::RDOM ||
         k == ParameterKind::RIDOM || k == ParameterKind::RTDOM ||
         k == ParameterKind::RCDOM;
}

bool needs_connected(ParameterKind k) {
  return k == ParameterKind::CDOM || k == ParameterKind::RCDOM;
}

}  // namespace fcnlab
