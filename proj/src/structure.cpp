#include "seifert/structure.hpp"

namespace seifert {

std::string to_string(SplittingClass c) {
  switch (c) {
    case SplittingClass::direct_like: return "direct-like";
    case SplittingClass::semidirect: return "semidirect";
    case SplittingClass::no_splitting_found: return "no-splitting-found";
  }
  return "unknown";
}

std::vector<Element> fop_subgroup(const ExtendedActionData& d) {
  require_action(d);
  std::vector<Element> out;
  for (Element g = 0; g < d.group.order(); ++g)
    if (d.alpha[g] == 1) out.push_back(g);
  return out;
}

Integer rotation_order(const ExtendedActionData& d) {
  require_action(d);
  Integer n = 1;
  for (Element g = 0; g < d.group.order(); ++g)
    if (d.alpha[g] == 1) n = lcm(n, d.theta1[g].order());
  return n;
}

std::optional<Element> find_splitting(const ExtendedActionData& d) {
  require_action(d);
  for (Element g = 0; g < d.group.order(); ++g)
    if (d.alpha[g] == -1 && d.group.mul(g, g) == d.group.identity()) return g;
  return std::nullopt;
}

StructureReport structure_report(const ExtendedActionData& d) {
  StructureReport r;
  r.fop_subgroup = fop_subgroup(d);
  r.fop_index = d.group.order() / r.fop_subgroup.size();
  r.rotation_order = rotation_order(d);
  r.splitting_element = find_splitting(d);
  if (r.fop_index == 1)
    r.classification = SplittingClass::direct_like;
  else if (r.splitting_element)
    r.classification = SplittingClass::semidirect;
  else
    r.classification = SplittingClass::no_splitting_found;
  return r;
}

std::string format(const StructureReport& r, std::size_t group_order) {
  std::string fop = "{";
  for (std::size_t k = 0; k < r.fop_subgroup.size(); ++k) fop += (k ? "," : "") + std::to_string(r.fop_subgroup[k]);
  fop += "}";
  return "order: " + std::to_string(group_order) + "\n" +
         "fop_subgroup: " + fop + "\n" +
         "fop_index: " + std::to_string(r.fop_index) + "\n" +
         "rotation_order: " + r.rotation_order.str() + "\n" +
         "splitting_element: " + (r.splitting_element ? std::to_string(*r.splitting_element) : "none") + "\n" +
         "classification: " + to_string(r.classification) + "\n";
}

}  // namespace seifert
