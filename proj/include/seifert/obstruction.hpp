#ifndef SEIFERT_OBSTRUCTION_HPP
#define SEIFERT_OBSTRUCTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seifert/orbifold.hpp"
#include "seifert/presentation.hpp"
#include "seifert/rational.hpp"

namespace seifert {

/// b = sum coefficients[i] * orbit_numbers[i].
struct ObstructionWitness {
  std::vector<Integer> orbit_numbers;
  std::vector<Integer> coefficients;

  Integer total() const;
  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

/// "b = c1*o1 + c2*o2 + ..."
std::string format(const Integer& b, const ObstructionWitness& w);

/// The divisor N / lcm(n_1..n_k, 2m_1..2m_l) whose divisibility of b decides
/// the obstruction condition.
Integer obstruction_divisor(const Integer& group_order, const OrbifoldData& quotient);

bool satisfies_obstruction_divisibility(const Integer& b, const Integer& group_order,
                                        const OrbifoldData& quotient);

/// Writes b as an integer combination of the orbit numbers, or nullopt when
/// gcd(orbit_numbers) does not divide b. The witness is canonical: Bezout
/// coefficients accumulated left to right, then every coefficient but the
/// last reduced to the symmetric residue range modulo o_last / gcd(o_i, o_last).
std::optional<ObstructionWitness> decompose(const Integer& b, std::span<const Integer> orbit_numbers);

/// Values of h on n critical slots followed by the regular-fiber slots.
struct HFunction {
  std::vector<Integer> values;

  Integer total() const;
};

/// Groups of slot indices (zero based) lying in one fiber orbit.
using SlotPartition = std::vector<std::vector<std::size_t>>;

struct SlotAssignment {
  std::size_t regular_slots = 0;
  std::optional<SlotPartition> orbits;
};

class RewriteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (g | (q_1, p_1 + h_1 q_1), ..., (q_n, p_n + h_n q_n), (1, h_{n+1}), ..., (1, h_{n+A})).
/// Requires sum h = b and, when an orbit partition is supplied, h constant on it.
SeifertPresentation rewrite_presentation(const NormalizedPresentation& pres, const HFunction& h,
                                         const SlotAssignment& slots);

/// True iff h takes one value on every class of the partition.
bool orbit_constancy_check(const HFunction& h, const SlotPartition& partition);

}  // namespace seifert

#endif  // SEIFERT_OBSTRUCTION_HPP
