#include "seifert/orbifold.hpp"

#include <cctype>

namespace seifert {

void require_valid(const OrbifoldData& o) {
  if (o.genus < 0) throw DomainError("orbifold genus must be nonnegative");
  for (const auto& n : o.cone_orders)
    if (n < 2) throw DomainError("cone order " + n.str() + " is less than 2");
  for (const auto& m : o.corner_orders)
    if (m < 2) throw DomainError("corner order " + m.str() + " is less than 2");
  if (!o.corner_orders.empty() && !o.with_boundary)
    throw DomainError("corner reflectors require a mirror boundary");
}

Fraction euler_characteristic(const OrbifoldData& o) {
  require_valid(o);
  if (o.with_boundary)
    throw DomainError("euler_characteristic: underlying surfaces with boundary are not supported");
  Fraction chi(2 - 2 * o.genus);
  for (const auto& n : o.cone_orders) chi -= Fraction(1) - Fraction(1, n);
  for (const auto& m : o.corner_orders) chi -= Fraction(1, 2) * (Fraction(1) - Fraction(1, m));
  return chi;
}

Geometry geometry_sign(const OrbifoldData& o) {
  int s = euler_characteristic(o).sign();
  if (s > 0) return Geometry::spherical;
  if (s == 0) return Geometry::euclidean;
  return Geometry::hyperbolic;
}

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::spherical: return "spherical";
    case Geometry::euclidean: return "euclidean";
    case Geometry::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

std::set<Integer> possible_orbit_numbers(const Integer& group_order, const OrbifoldData& quotient) {
  require_valid(quotient);
  if (group_order < 1) throw DomainError("group order must be positive");
  std::set<Integer> out{group_order};
  for (const auto& n : quotient.cone_orders) {
    if (group_order % n != 0)
      throw DomainError("inconsistent quotient: cone order " + n.str() + " does not divide " + group_order.str());
    out.insert(group_order / n);
  }
  for (const auto& m : quotient.corner_orders) {
    if (group_order % (2 * m) != 0)
      throw DomainError("inconsistent quotient: 2*" + m.str() + " does not divide " + group_order.str());
    out.insert(group_order / (2 * m));
  }
  return out;
}

namespace {

std::vector<Integer> parse_order_list(std::string_view body) {
  std::vector<Integer> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    out.push_back(parse_integer(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<Integer>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k].str();
  return out + ")";
}

}  // namespace

OrbifoldData parse_orbifold(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&](const std::string& what) {
    throw ParseError("orbifold: " + what + " in '" + std::string(text) + "'");
  };

  OrbifoldData o;
  bool have_genus = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto colon = s.find(':', pos);
    if (colon == std::string::npos) fail("expected 'key:value'");
    std::string key = s.substr(pos, colon - pos);
    pos = colon + 1;
    if (key == "genus") {
      std::size_t end = pos;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '-')) ++end;
      o.genus = parse_integer(std::string_view(s).substr(pos, end - pos));
      pos = end;
      have_genus = true;
    } else if (key == "cone" || key == "corner") {
      if (pos >= s.size() || s[pos] != '(') fail("expected '(' after " + key);
      auto close = s.find(')', pos);
      if (close == std::string::npos) fail("unterminated list");
      auto list = parse_order_list(std::string_view(s).substr(pos + 1, close - pos - 1));
      pos = close + 1;
      (key == "cone" ? o.cone_orders : o.corner_orders) = std::move(list);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_genus) fail("missing genus");
  o.with_boundary = !o.corner_orders.empty();
  require_valid(o);
  return o;
}

std::string format(const OrbifoldData& o) {
  return "genus:" + o.genus.str() + " cone:" + join(o.cone_orders) + " corner:" + join(o.corner_orders);
}

}  // namespace seifert
