#ifndef FCNLAB_CONSTRUCTIONS_HPP
#define FCNLAB_CONSTRUCTIONS_HPP

#include "fcnlab/parameter.hpp"
#include "fcnlab/verifiers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fcnlab {

/// Reading of the neighbourhood rule used for TWODOM, RDOM and RIDOM.
enum class ConstructionVariant {
  Literal,      // union of N(v) over every v whose label ends in 01
  TwinClosure,  // all p00 and p11: the two degree-2 neighbours of each p01
};

std::string_view variant_name(ConstructionVariant v);
ConstructionVariant parse_variant(std::string_view name);

/// Explicit certificate family for one parameter on FCN(l).
struct ConstructionRule {
  ParameterKind kind = ParameterKind::DOM;
  std::size_t anchor_level = 1;
  /// Labels at anchor_level (empty for the neighbourhood rule, which is
  /// applied directly at every level).
  std::vector<std::string> base;
  /// Human-readable description of the step from l-1 to l.
  std::string step;
};

/// Kinds that have a construction; DIM and QDDOM don't.
bool has_construction(ParameterKind kind);
/// Throws std::invalid_argument for kinds without a construction.
ConstructionRule construction_rule(ParameterKind kind);

/// Labels of the set for FCN(level), sorted. Purely syntactic: nothing here
/// checks the set has the property. Throws std::invalid_argument when level
/// is below the rule's anchor or above 7.
std::vector<std::string> construct_labels(ParameterKind kind, std::size_t level,
                                          ConstructionVariant variant = ConstructionVariant::Literal);

/// construct_labels resolved against fcn(level).
Certificate construct(ParameterKind kind, std::size_t level,
                      ConstructionVariant variant = ConstructionVariant::Literal);

/// Value obtained by iterating the claimed recursion from its anchor.
/// Level-0 anchors that aren't stated as theorems are the exhaustive values
/// on FCN(0) = C4. nullopt where no value is claimed (QDDOM, and RIDOM at
/// level 0, where C4 has no independent resolving dominating set).
std::optional<std::size_t> formula_value(ParameterKind kind, std::size_t level);

}  // namespace fcnlab

#endif  // FCNLAB_CONSTRUCTIONS_HPP
