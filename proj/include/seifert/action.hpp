#ifndef SEIFERT_ACTION_HPP
#define SEIFERT_ACTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seifert/group.hpp"
#include "seifert/obstruction.hpp"
#include "seifert/presentation.hpp"
#include "seifert/rational.hpp"
#include "seifert/torus.hpp"

namespace seifert {

/// Zero-based images: perm[i] is the image of boundary component i.
using Permutation = std::vector<std::size_t>;

/// Boundary data of an extended product action of `group` on S^1 x F, where
/// F has one boundary circle per entry of `pairs`. Element g acts on the
/// circle factor by u -> theta1(g) u^alpha(g) and carries boundary circle i
/// to beta(g)(i) by v -> theta2(i, g) v^alpha(g).
struct ExtendedActionData {
  FiniteGroup group;
  std::vector<SeifertPair> pairs;
  std::vector<int> alpha;                          // indexed by element, values +-1
  std::vector<RationalAngle> theta1;               // indexed by element
  std::vector<Permutation> beta;                   // indexed by element
  std::vector<std::vector<RationalAngle>> theta2;  // theta2[g][i]

  std::size_t n_boundary() const { return pairs.size(); }

  /// Trivial data: alpha = +1, zero angles, identity permutations.
  static ExtendedActionData trivial(FiniteGroup group, std::vector<SeifertPair> pairs);
};

enum class ActionCondition {
  shape,             // table sizes disagree with the group or the boundary count
  alpha_homomorphism,
  theta1_crossed,    // theta1(gh) = theta1(g) + alpha(g) theta1(h)
  beta_permutation,
  beta_homomorphism, // beta(gh) = beta(g) o beta(h)
  filling_compatible,// beta(g)(i) = j only if pairs[i] = pairs[j]
  theta2_crossed,    // theta2(i, gh) = theta2(beta(h)(i), g) + alpha(g) theta2(i, h)
};

std::string to_string(ActionCondition c);

struct ActionViolation {
  ActionCondition condition;
  std::string detail;
};

/// Every violated condition, checked over all element pairs and boundary
/// components. Empty means the data defines an action.
std::vector<ActionViolation> verify_action(const ExtendedActionData& data);

/// Throws DomainError with the first violation.
void require_action(const ExtendedActionData& data);

struct BoundaryImage {
  std::size_t target;
  TorusAutomorphism map;

  friend bool operator==(const BoundaryImage&, const BoundaryImage&) = default;
};

/// How g carries T_i to T_beta(g)(i) in the product framing of the boundary tori.
BoundaryImage boundary_action(const ExtendedActionData& data, Element g, std::size_t i);

/// The same map pulled back through the gluing to the filled solid torus
/// boundary, from the closed form
///   (-q theta1 + p theta2, y theta1 - x theta2), matrix alpha * id.
BoundaryImage induced_filling_action(const ExtendedActionData& data, Element g, std::size_t i);

/// A point of the solid torus S^1 x D: longitude angle, radius in [0, 1], meridian angle.
struct SolidTorusPoint {
  RationalAngle u;
  Fraction r;
  RationalAngle v;

  friend bool operator==(const SolidTorusPoint&, const SolidTorusPoint&) = default;
};

/// Radial extension of a boundary map whose matrix is +-id. Points on the
/// core circle (r = 0) are reported with v = 0.
SolidTorusPoint solid_torus_eval(const TorusAutomorphism& filling_action, const SolidTorusPoint& p);

/// Size of the beta-orbit of each boundary component.
std::vector<std::size_t> boundary_orbit_numbers(const ExtendedActionData& data);

/// Decides b = sum b_i #Orb(alpha_i) using the distinct boundary orbit numbers
/// together with caller-supplied orbit numbers of regular fibers. Throws
/// DomainError when the data's pairs do not normalize to pres's critical pairs.
std::optional<ObstructionWitness> action_obstruction_check(const ExtendedActionData& data,
                                                           const NormalizedPresentation& pres,
                                                           std::span<const Integer> regular_orbit_numbers = {});

/// Elements acting trivially on all boundary data; a normal subgroup.
std::vector<Element> kernel_on_boundary(const ExtendedActionData& data);

// Action file:
//   group: <path, relative to the action file>
//   pairs: (q1,p1) (q2,p2) ...
//   <g>: alpha=+-1 theta1=a/b beta=(j1,...,jn) theta2=t1,...,tn
// One line per element; beta is one-line notation on components 1..n.
ExtendedActionData parse_action(std::string_view text, const std::string& base_dir);
ExtendedActionData read_action_file(const std::string& path);
std::string format_action(const ExtendedActionData& data, const std::string& group_path);

}  // namespace seifert

#endif  // SEIFERT_ACTION_HPP
