#ifndef SEIFERT_PRESENTATION_HPP
#define SEIFERT_PRESENTATION_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

/// Filling data (q, p) of one fibered solid torus. q >= 1, gcd(q, |p|) = 1.
struct SeifertPair {
  Integer q = 1;
  Integer p = 0;

  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
  friend std::strong_ordering operator<=>(const SeifertPair& a, const SeifertPair& b) {
    if (auto c = compare(a.q, b.q); c != 0) return c;
    return compare(a.p, b.p);
  }
  bool is_regular() const { return q == 1; }
};

/// Closed orientable Seifert manifold over an orientable genus-g base:
/// (g, o1 | (q1,p1), ..., (qn,pn)).
struct SeifertPresentation {
  Integer genus = 0;
  std::vector<SeifertPair> pairs;

  friend bool operator==(const SeifertPresentation&, const SeifertPresentation&) = default;
};

/// (g, o1 | (q1,p1), ..., (qn,pn), (1,b)) with 0 < p < q, pairs sorted by (q, p).
struct NormalizedPresentation {
  Integer genus = 0;
  std::vector<SeifertPair> pairs;
  Integer b = 0;

  friend bool operator==(const NormalizedPresentation&, const NormalizedPresentation&) = default;

  /// The presentation with the obstruction class written as a trailing (1,b) pair.
  SeifertPresentation embed() const;
};

struct Violation {
  std::size_t index;  // position in the pair list, or npos for the genus
  std::string message;
};

/// Every coprimality or positivity violation, empty when the presentation is valid.
std::vector<Violation> validate(const SeifertPresentation& pres);

/// Throws DomainError describing the first violation, if any.
void require_valid(const SeifertPresentation& pres);

NormalizedPresentation normalize(const SeifertPresentation& pres);

/// Fiber-preserving, orientation-preserving equivalence.
bool equivalent(const SeifertPresentation& a, const SeifertPresentation& b);

// Moves that preserve the fibered diffeomorphism type. Indices are zero based.
namespace moves {
struct Permute {
  std::vector<std::size_t> image;  // new pairs[k] = old pairs[image[k]]
};
struct AddTrivial {};
struct DeleteTrivial {
  std::size_t index;
};
/// (q_i, p_i + m q_i), (q_j, p_j - m q_j)
struct Shift {
  std::size_t i;
  std::size_t j;
  Integer m;
};
}  // namespace moves

using Move = std::variant<moves::Permute, moves::AddTrivial, moves::DeleteTrivial, moves::Shift>;

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SeifertPresentation apply_move(const SeifertPresentation& pres, const Move& move);

/// e = -(b + sum p_i / q_i), computed on the normalized form.
Fraction euler_number(const SeifertPresentation& pres);

/// Exponents of the gluing map (u,v) -> (u^x v^p, u^y v^q) with x q - y p = -1
/// and canonical 0 <= y < q.
struct GluingPair {
  Integer x;
  Integer y;
  SeifertPair attached_pair;

  friend bool operator==(const GluingPair&, const GluingPair&) = default;
};

GluingPair gluing_pair(const SeifertPair& pair);

/// The solid torus receives a (-q, y) fibration.
struct Fibration {
  Integer first;
  Integer second;
  friend bool operator==(const Fibration&, const Fibration&) = default;
};

Fibration induced_fibration(const GluingPair& gp);

// Text forms: "(g, o1 | (q1,p1), (q2,p2))"; whitespace-insensitive on input.
SeifertPresentation parse_presentation(std::string_view text);
SeifertPair parse_pair(std::string_view text);
std::string format(const SeifertPair& pair);
std::string format(const SeifertPresentation& pres);
std::string format(const NormalizedPresentation& pres);

std::ostream& operator<<(std::ostream& os, const SeifertPresentation& pres);
std::ostream& operator<<(std::ostream& os, const NormalizedPresentation& pres);

}  // namespace seifert

#endif  // SEIFERT_PRESENTATION_HPP
