#ifndef SEIFERT_TORUS_HPP
#define SEIFERT_TORUS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "seifert/presentation.hpp"
#include "seifert/rational.hpp"

namespace seifert {

/// A self-map of the torus up to its action on homology with rotation phases:
///
///   (u, v) -> (c1 u^m11 v^m12, c2 u^m21 v^m22),  c_k = exp(2 pi i phase_k).
///
/// Additively this is the affine map z -> M z + phase on (Q/Z)^2.
struct TorusAutomorphism {
  Integer m11 = 1, m12 = 0;
  Integer m21 = 0, m22 = 1;
  RationalAngle phase1;
  RationalAngle phase2;

  /// Throws DomainError unless |det| = 1.
  TorusAutomorphism() = default;
  TorusAutomorphism(Integer a, Integer b, Integer c, Integer d,
                    RationalAngle t1 = {}, RationalAngle t2 = {});

  static TorusAutomorphism identity() { return {}; }
  /// Matrix s * identity with the given phases.
  static TorusAutomorphism scalar(int s, RationalAngle t1 = {}, RationalAngle t2 = {});

  Integer det() const { return m11 * m22 - m12 * m21; }
  Integer trace() const { return m11 + m22; }
  bool matrix_is_identity() const { return m11 == 1 && m12 == 0 && m21 == 0 && m22 == 1; }
  bool is_identity() const { return matrix_is_identity() && phase1.is_zero() && phase2.is_zero(); }

  /// Image of the point with angles (s, t).
  std::pair<RationalAngle, RationalAngle> apply(const RationalAngle& s, const RationalAngle& t) const;

  friend bool operator==(const TorusAutomorphism&, const TorusAutomorphism&) = default;
};

/// f o g.
TorusAutomorphism compose(const TorusAutomorphism& f, const TorusAutomorphism& g);
TorusAutomorphism inverse(const TorusAutomorphism& f);
TorusAutomorphism power(const TorusAutomorphism& f, unsigned k);

/// Least k >= 1 with f^k = id, or nullopt if f has infinite order.
std::optional<Integer> order(const TorusAutomorphism& f);

/// Order of the matrix part alone; one of 1, 2, 3, 4, 6 or nullopt.
std::optional<unsigned> matrix_order(const TorusAutomorphism& f);

/// d^-1 o f o d.
TorusAutomorphism conjugate_by_gluing(const TorusAutomorphism& f, const TorusAutomorphism& d);

/// The gluing map of a filled solid torus: matrix [[x, p], [y, q]] with zero phases.
TorusAutomorphism gluing_automorphism(const GluingPair& gp);
TorusAutomorphism gluing_automorphism(const SeifertPair& pair);

/// "[[a,b],[c,d]] + (t1, t2)"
std::string format(const TorusAutomorphism& f);
TorusAutomorphism parse_torus_automorphism(std::string_view text);
std::ostream& operator<<(std::ostream& os, const TorusAutomorphism& f);

}  // namespace seifert

#endif  // SEIFERT_TORUS_HPP
