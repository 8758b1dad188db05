#include "seifert/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace seifert {

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw DomainError("ext_gcd: both inputs are zero");
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;  // truncating; any quotient keeps the invariant
    // Materialize before exchanging: the right-hand sides are expression
    // templates that would otherwise read r after it has been moved from.
    Integer next_r = old_r - q * r, next_s = old_s - q * s, next_t = old_t - q * t;
    old_r = std::exchange(r, std::move(next_r));
    old_s = std::exchange(s, std::move(next_s));
    old_t = std::exchange(t, std::move(next_t));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::exchange(y, std::move(r));
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer lcm_list(std::span<const Integer> ns) {
  if (ns.empty()) throw DomainError("lcm_list: empty list");
  Integer acc = 1;
  for (const auto& n : ns) {
    if (n < 1) throw DomainError("lcm_list: entries must be positive");
    acc = lcm(acc, n);
  }
  return acc;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b <= 0) throw DomainError("floor_div: divisor must be positive");
  Integer q = a / b;
  if (q * b > a) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  auto [g, s, t] = ext_gcd(a, m);
  if (g != 1) throw DomainError("mod_inverse: arguments are not coprime");
  return floor_mod(s, m);
}

// ---------------------------------------------------------------------------

Fraction::Fraction(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw DomainError("Fraction: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.num_ = -r.num_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& o) {
  *this = Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction& Fraction::operator*=(const Fraction& o) {
  *this = Fraction(num_ * o.num_, den_ * o.den_);
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.num_ == 0) throw DomainError("Fraction: division by zero");
  *this = Fraction(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Fraction::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_integer(text));
  Integer d = parse_integer(text.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Fraction(parse_integer(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

// ---------------------------------------------------------------------------

RationalAngle::RationalAngle(const Fraction& t)
    : value_(t - Fraction(t.floor())) {}

RationalAngle RationalAngle::operator-() const { return RationalAngle(-value_); }

RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
  return RationalAngle(a.value_ + b.value_);
}

RationalAngle operator-(const RationalAngle& a, const RationalAngle& b) {
  return RationalAngle(a.value_ - b.value_);
}

RationalAngle angle_add(const RationalAngle& a, const RationalAngle& b) { return a + b; }

RationalAngle angle_scale(const RationalAngle& a, const Integer& k) {
  return RationalAngle(a.value() * Fraction(k));
}

std::ostream& operator<<(std::ostream& os, const RationalAngle& a) { return os << a.str(); }

Integer parse_integer(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace seifert
