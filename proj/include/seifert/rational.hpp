#ifndef SEIFERT_RATIONAL_HPP
#define SEIFERT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seifert {

/// Arbitrary precision signed integer used for every invariant.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when text input cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Three-way comparison for Integer, which predates operator<=>.
inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

struct ExtGcd {
  Integer g;
  Integer s;
  Integer t;
};

/// Extended Euclid: g = gcd(a, b) > 0 with s*a + t*b = g.
/// Throws DomainError when both inputs are zero.
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Least common multiple of a nonempty list of positive integers.
Integer lcm_list(std::span<const Integer> ns);

/// Floor division and the matching non-negative remainder (divisor > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

/// Inverse of a modulo m in [0, m). Requires gcd(a, m) = 1 and m >= 1.
Integer mod_inverse(const Integer& a, const Integer& m);

/// Exact rational number kept in lowest terms with a positive denominator.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(const Integer& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(std::int64_t n) : num_(n), den_(1) {}    // NOLINT(google-explicit-constructor)
  Fraction(int n) : num_(n), den_(1) {}             // NOLINT(google-explicit-constructor)
  Fraction(Integer n, Integer d);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  /// Largest integer not exceeding the value.
  Integer floor() const { return floor_div(num_, den_); }

  /// "a/b" in lowest terms, or "a" when the denominator is one.
  std::string str() const;
  static Fraction parse(std::string_view text);

 private:
  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// An element of Q/Z, i.e. the circle element exp(2 pi i t) with t rational.
/// Stored as the unique representative in [0, 1).
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(const Fraction& t);
  RationalAngle(std::int64_t n, std::int64_t d) : RationalAngle(Fraction(n, d)) {}

  const Fraction& value() const { return value_; }
  bool is_zero() const { return value_.numerator() == 0; }

  /// Order of the angle in Q/Z (its reduced denominator).
  const Integer& order() const { return value_.denominator(); }

  RationalAngle operator-() const;
  friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b);
  friend RationalAngle operator-(const RationalAngle& a, const RationalAngle& b);
  friend bool operator==(const RationalAngle& a, const RationalAngle& b) = default;

  std::string str() const { return value_.str(); }
  static RationalAngle parse(std::string_view text) { return RationalAngle(Fraction::parse(text)); }

 private:
  Fraction value_;
};

RationalAngle angle_add(const RationalAngle& a, const RationalAngle& b);
RationalAngle angle_scale(const RationalAngle& a, const Integer& k);

std::ostream& operator<<(std::ostream& os, const RationalAngle& a);

/// Parses a base-10 integer with optional sign. Throws ParseError.
Integer parse_integer(std::string_view text);

}  // namespace seifert

#endif  // SEIFERT_RATIONAL_HPP
