#ifndef SEIFERT_ORBIFOLD_HPP
#define SEIFERT_ORBIFOLD_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

/// Thurston data set (n1,...,nk; m1,...,ml) of a 2-orbifold over a genus-g
/// surface: k cone points and l corner reflectors. Corner reflectors sit on a
/// mirror boundary, so they require with_boundary.
struct OrbifoldData {
  Integer genus = 0;
  std::vector<Integer> cone_orders;
  std::vector<Integer> corner_orders;
  bool with_boundary = false;

  friend bool operator==(const OrbifoldData&, const OrbifoldData&) = default;
};

/// Throws DomainError on orders < 2, negative genus, or corners without boundary.
void require_valid(const OrbifoldData& o);

/// chi = (2 - 2g) - sum(1 - 1/n_i) - 1/2 sum(1 - 1/m_j). Closed underlying surfaces only.
Fraction euler_characteristic(const OrbifoldData& o);

enum class Geometry { spherical, euclidean, hyperbolic };
Geometry geometry_sign(const OrbifoldData& o);
std::string to_string(Geometry g);

/// Orbit sizes available to a point of the surface under an effective action
/// of a group of the given order with this quotient: N/n_i, N/(2 m_j), and N.
std::set<Integer> possible_orbit_numbers(const Integer& group_order, const OrbifoldData& quotient);

/// "genus:g cone:(n1,...,nk) corner:(m1,...,ml)"; a nonempty corner list
/// implies with_boundary.
OrbifoldData parse_orbifold(std::string_view text);
std::string format(const OrbifoldData& o);

}  // namespace seifert

#endif  // SEIFERT_ORBIFOLD_HPP
