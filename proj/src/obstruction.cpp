#include "seifert/obstruction.hpp"

#include <numeric>

namespace seifert {

Integer ObstructionWitness::total() const {
  Integer sum = 0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) sum += coefficients[k] * orbit_numbers[k];
  return sum;
}

std::string format(const Integer& b, const ObstructionWitness& w) {
  std::string out = b.str() + " =";
  if (w.coefficients.empty()) return out + " 0";
  for (std::size_t k = 0; k < w.coefficients.size(); ++k)
    out += (k ? " + " : " ") + w.coefficients[k].str() + "*" + w.orbit_numbers[k].str();
  return out;
}

Integer obstruction_divisor(const Integer& group_order, const OrbifoldData& quotient) {
  // Runs the divisibility checks on the quotient data.
  possible_orbit_numbers(group_order, quotient);
  std::vector<Integer> branching = quotient.cone_orders;
  for (const auto& m : quotient.corner_orders) branching.push_back(2 * m);
  Integer l = branching.empty() ? Integer(1) : lcm_list(branching);
  return group_order / l;
}

bool satisfies_obstruction_divisibility(const Integer& b, const Integer& group_order,
                                        const OrbifoldData& quotient) {
  return b % obstruction_divisor(group_order, quotient) == 0;
}

std::optional<ObstructionWitness> decompose(const Integer& b, std::span<const Integer> orbit_numbers) {
  if (orbit_numbers.empty()) throw DomainError("decompose: empty orbit list");
  for (const auto& o : orbit_numbers)
    if (o < 1) throw DomainError("decompose: orbit numbers must be positive");

  const std::size_t n = orbit_numbers.size();
  std::vector<Integer> c(n);
  Integer g = orbit_numbers[0];
  c[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    auto [g2, s, t] = ext_gcd(g, orbit_numbers[k]);
    for (std::size_t j = 0; j < k; ++j) c[j] *= s;
    c[k] = t;
    g = g2;
  }
  if (b % g != 0) return std::nullopt;
  const Integer scale = b / g;
  for (auto& x : c) x *= scale;

  const Integer& last = orbit_numbers[n - 1];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Integer gk = gcd(orbit_numbers[k], last);
    const Integer step = last / gk;
    Integer r = floor_mod(c[k], step);
    if (2 * r > step) r -= step;
    const Integer t = (c[k] - r) / step;
    c[k] = r;
    c[n - 1] += t * (orbit_numbers[k] / gk);
  }

  ObstructionWitness w{{orbit_numbers.begin(), orbit_numbers.end()}, std::move(c)};
  if (w.total() != b) throw std::logic_error("decompose: witness does not re-sum to b");
  return w;
}

Integer HFunction::total() const { return std::accumulate(values.begin(), values.end(), Integer(0)); }

bool orbit_constancy_check(const HFunction& h, const SlotPartition& partition) {
  for (const auto& cls : partition) {
    for (auto slot : cls)
      if (slot >= h.values.size()) throw DomainError("orbit partition refers to slot " + std::to_string(slot + 1));
    for (auto slot : cls)
      if (h.values[slot] != h.values[cls.front()]) return false;
  }
  return true;
}

SeifertPresentation rewrite_presentation(const NormalizedPresentation& pres, const HFunction& h,
                                         const SlotAssignment& slots) {
  const std::size_t n = pres.pairs.size();
  if (h.values.size() != n + slots.regular_slots)
    throw RewriteError("h has " + std::to_string(h.values.size()) + " values, expected " +
                       std::to_string(n + slots.regular_slots));
  if (h.total() != pres.b)
    throw RewriteError("sum of h is " + h.total().str() + " but the obstruction class is " + pres.b.str());
  if (slots.orbits) {
    std::vector<int> hits(h.values.size(), 0);
    for (const auto& cls : *slots.orbits)
      for (auto slot : cls) {
        if (slot >= hits.size()) throw RewriteError("orbit partition refers to slot " + std::to_string(slot + 1));
        ++hits[slot];
      }
    for (int count : hits)
      if (count != 1) throw RewriteError("orbit partition must cover every slot exactly once");
    if (!orbit_constancy_check(h, *slots.orbits)) throw RewriteError("h is not constant on fiber orbits");
  }

  SeifertPresentation out{pres.genus, {}};
  for (std::size_t k = 0; k < n; ++k)
    out.pairs.push_back({pres.pairs[k].q, pres.pairs[k].p + h.values[k] * pres.pairs[k].q});
  for (std::size_t k = n; k < h.values.size(); ++k) out.pairs.push_back({1, h.values[k]});
  return out;
}

}  // namespace seifert
