#ifndef SEIFERT_GROUP_HPP
#define SEIFERT_GROUP_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace seifert {

using Element = std::size_t;
using CayleyTable = std::vector<std::vector<Element>>;

struct GroupViolation {
  std::string axiom;  // "shape", "latin", "identity", "inverse", "associativity"
  std::string detail;
};

class GroupError : public std::invalid_argument {
 public:
  explicit GroupError(const GroupViolation& v)
      : std::invalid_argument(v.axiom + ": " + v.detail), violation(v) {}
  GroupViolation violation;
};

/// A finite group given by its multiplication table: table[g][h] = g*h.
class FiniteGroup {
 public:
  /// Throws GroupError if the table fails any group axiom.
  explicit FiniteGroup(CayleyTable table);

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const;
  const CayleyTable& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  FiniteGroup(CayleyTable table, Element identity);
  friend std::variant<FiniteGroup, GroupViolation> validate_group(const CayleyTable& table);

  CayleyTable table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

/// Checks all group axioms exhaustively; returns the group or the first failure.
std::variant<FiniteGroup, GroupViolation> validate_group(const CayleyTable& table);

/// True iff the elements contain the identity and are closed under products and inverses.
bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& elements);

FiniteGroup cyclic_group(std::size_t n);
/// Order 2n: index k is r^k, index n + k is r^k s, with s r s = r^-1.
FiniteGroup dihedral_group(std::size_t n);
/// Index a * |H| + b is (a, b).
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Index u + 4*s is (-1)^s times the unit u in (1, i, j, k).
FiniteGroup quaternion_group();

// Group file: "order: N" followed by N rows of N indices; identity must be 0.
FiniteGroup parse_group(std::string_view text);
FiniteGroup read_group_file(const std::string& path);
std::string format_group(const FiniteGroup& g);

}  // namespace seifert

#endif  // SEIFERT_GROUP_HPP
