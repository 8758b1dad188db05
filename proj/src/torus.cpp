#include "seifert/torus.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace seifert {

TorusAutomorphism::TorusAutomorphism(Integer a, Integer b, Integer c, Integer d,
                                     RationalAngle t1, RationalAngle t2)
    : m11(std::move(a)), m12(std::move(b)), m21(std::move(c)), m22(std::move(d)),
      phase1(std::move(t1)), phase2(std::move(t2)) {
  if (abs(det()) != 1) throw DomainError("torus automorphism must have determinant +-1, got " + det().str());
}

TorusAutomorphism TorusAutomorphism::scalar(int s, RationalAngle t1, RationalAngle t2) {
  return {s, 0, 0, s, std::move(t1), std::move(t2)};
}

std::pair<RationalAngle, RationalAngle> TorusAutomorphism::apply(const RationalAngle& s,
                                                                 const RationalAngle& t) const {
  return {angle_scale(s, m11) + angle_scale(t, m12) + phase1,
          angle_scale(s, m21) + angle_scale(t, m22) + phase2};
}

TorusAutomorphism compose(const TorusAutomorphism& f, const TorusAutomorphism& g) {
  // M_f (M_g z + c_g) + c_f
  auto [c1, c2] = f.apply(g.phase1, g.phase2);
  return {f.m11 * g.m11 + f.m12 * g.m21, f.m11 * g.m12 + f.m12 * g.m22,
          f.m21 * g.m11 + f.m22 * g.m21, f.m21 * g.m12 + f.m22 * g.m22,
          c1, c2};
}

TorusAutomorphism inverse(const TorusAutomorphism& f) {
  Integer d = f.det();  // +-1, so dividing by d is multiplying by d
  TorusAutomorphism linear(d * f.m22, -d * f.m12, -d * f.m21, d * f.m11);
  auto [c1, c2] = linear.apply(f.phase1, f.phase2);
  linear.phase1 = -c1;
  linear.phase2 = -c2;
  return linear;
}

TorusAutomorphism power(const TorusAutomorphism& f, unsigned k) {
  TorusAutomorphism acc, base = f;
  while (k > 0) {
    if (k & 1u) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1u;
  }
  return acc;
}

std::optional<unsigned> matrix_order(const TorusAutomorphism& f) {
  // Finite order in GL(2,Z) is decided by the characteristic polynomial:
  // det 1 needs |trace| <= 1 or M = +-I; det -1 needs trace 0.
  const Integer det = f.det(), tr = f.trace();
  const bool plus_minus_id = f.m12 == 0 && f.m21 == 0 && f.m11 == f.m22;
  const bool finite = det == 1 ? (abs(tr) <= 1 || plus_minus_id) : tr == 0;

  TorusAutomorphism m(f.m11, f.m12, f.m21, f.m22);
  TorusAutomorphism acc = m;
  for (unsigned k = 1; k <= 12; ++k) {
    if (acc.matrix_is_identity()) {
      if (!finite) throw std::logic_error("matrix_order: iteration and trace test disagree");
      return k;
    }
    acc = compose(acc, m);
  }
  if (finite) throw std::logic_error("matrix_order: iteration and trace test disagree");
  return std::nullopt;
}

std::optional<Integer> order(const TorusAutomorphism& f) {
  auto k = matrix_order(f);
  if (!k) return std::nullopt;
  // f^k is a pure translation; its order is the lcm of the phase denominators.
  TorusAutomorphism fk = power(f, *k);
  return Integer(*k) * lcm(fk.phase1.order(), fk.phase2.order());
}

TorusAutomorphism conjugate_by_gluing(const TorusAutomorphism& f, const TorusAutomorphism& d) {
  return compose(inverse(d), compose(f, d));
}

TorusAutomorphism gluing_automorphism(const GluingPair& gp) {
  return {gp.x, gp.attached_pair.p, gp.y, gp.attached_pair.q};
}

TorusAutomorphism gluing_automorphism(const SeifertPair& pair) {
  return gluing_automorphism(gluing_pair(pair));
}

std::string format(const TorusAutomorphism& f) {
  return "[[" + f.m11.str() + "," + f.m12.str() + "],[" + f.m21.str() + "," + f.m22.str() + "]] + (" +
         f.phase1.str() + ", " + f.phase2.str() + ")";
}

TorusAutomorphism parse_torus_automorphism(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto expect = [&](std::string_view lit) {
    if (s.compare(pos, lit.size(), lit) != 0) fail("expected '" + std::string(lit) + "'");
    pos += lit.size();
  };
  auto token = [&](std::string_view stops) {
    std::size_t start = pos;
    while (pos < s.size() && stops.find(s[pos]) == std::string_view::npos) ++pos;
    if (pos == start) fail("expected a number");
    return std::string_view(s).substr(start, pos - start);
  };
  expect("[[");
  Integer a = parse_integer(token(","));
  expect(",");
  Integer b = parse_integer(token("]"));
  expect("],[");
  Integer c = parse_integer(token(","));
  expect(",");
  Integer d = parse_integer(token("]"));
  expect("]]");
  RationalAngle t1, t2;
  if (pos < s.size()) {
    expect("+(");
    t1 = RationalAngle::parse(token(","));
    expect(",");
    t2 = RationalAngle::parse(token(")"));
    expect(")");
  }
  if (pos != s.size()) fail("trailing input");
  return {a, b, c, d, t1, t2};
}

std::ostream& operator<<(std::ostream& os, const TorusAutomorphism& f) { return os << format(f); }

}  // namespace seifert
