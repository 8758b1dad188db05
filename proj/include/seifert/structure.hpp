#ifndef SEIFERT_STRUCTURE_HPP
#define SEIFERT_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "seifert/action.hpp"

namespace seifert {

enum class SplittingClass {
  direct_like,  // every element preserves fiber orientation
  semidirect,   // an orientation-reversing involution splits off a Z/2
  no_splitting_found,
};

std::string to_string(SplittingClass c);

struct StructureReport {
  std::vector<Element> fop_subgroup;
  std::size_t fop_index = 1;
  Integer rotation_order = 1;
  std::optional<Element> splitting_element;
  SplittingClass classification = SplittingClass::direct_like;
};

/// Elements preserving the fiber orientation (alpha = +1).
std::vector<Element> fop_subgroup(const ExtendedActionData& data);

/// Order of the cyclic group of circle rotations theta1(g), alpha(g) = +1.
Integer rotation_order(const ExtendedActionData& data);

/// Lowest-index g with alpha(g) = -1 and g^2 = 1.
std::optional<Element> find_splitting(const ExtendedActionData& data);

StructureReport structure_report(const ExtendedActionData& data);

/// key: value lines, element lists as {a,b,...}.
std::string format(const StructureReport& r, std::size_t group_order);

}  // namespace seifert

#endif  // SEIFERT_STRUCTURE_HPP
