// Test-only builders for extended action data and the independent checks the
// suites compare the library against.
#ifndef SEIFERT_TESTS_FIXTURES_HPP
#define SEIFERT_TESTS_FIXTURES_HPP

#include <deque>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "seifert/action.hpp"
#include "seifert/group.hpp"

namespace seifert::testing {

/// Boundary data of one generator.
struct GeneratorData {
  Element element;
  int alpha;
  RationalAngle theta1;
  Permutation beta;
  std::vector<RationalAngle> theta2;
};

/// Extends generator data to the whole group along right multiplication by
/// generators, using
///   alpha(gs) = alpha(g) alpha(s), theta1(gs) = theta1(g) + alpha(g) theta1(s),
///   beta(gs) = beta(g) o beta(s), theta2(i, gs) = theta2(beta(s) i, g) + alpha(g) theta2(i, s).
/// Throws if a relation of the group is violated (two paths disagree) or the
/// generators do not generate.
inline ExtendedActionData extend_from_generators(const FiniteGroup& group, std::vector<SeifertPair> pairs,
                                                 const std::vector<GeneratorData>& gens) {
  const std::size_t order = group.order(), n = pairs.size();
  struct Value {
    int alpha;
    RationalAngle theta1;
    Permutation beta;
    std::vector<RationalAngle> theta2;
    bool operator==(const Value&) const = default;
  };
  std::vector<std::optional<Value>> val(order);
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  val[group.identity()] = Value{1, {}, id, std::vector<RationalAngle>(n)};
  std::deque<Element> queue{group.identity()};
  while (!queue.empty()) {
    Element g = queue.front();
    queue.pop_front();
    const Value vg = *val[g];
    for (const auto& s : gens) {
      Value next{vg.alpha * s.alpha, vg.theta1 + angle_scale(s.theta1, vg.alpha), Permutation(n),
                 std::vector<RationalAngle>(n)};
      for (std::size_t i = 0; i < n; ++i) {
        next.beta[i] = vg.beta[s.beta[i]];
        next.theta2[i] = vg.theta2[s.beta[i]] + angle_scale(s.theta2[i], vg.alpha);
      }
      Element h = group.mul(g, s.element);
      if (val[h]) {
        if (!(*val[h] == next)) throw std::logic_error("generator data violates a group relation");
      } else {
        val[h] = next;
        queue.push_back(h);
      }
    }
  }
  ExtendedActionData d{group, std::move(pairs), {}, {}, {}, {}};
  for (Element g = 0; g < order; ++g) {
    if (!val[g]) throw std::logic_error("generators do not generate the group");
    d.alpha.push_back(val[g]->alpha);
    d.theta1.push_back(val[g]->theta1);
    d.beta.push_back(val[g]->beta);
    d.theta2.push_back(val[g]->theta2);
  }
  return d;
}

inline RationalAngle A(std::int64_t n, std::int64_t d) { return RationalAngle(n, d); }

struct NamedFixture {
  std::string name;
  ExtendedActionData data;
};

/// Z2 rotating the fibers by a half turn; two fillings with different pairs.
inline ExtendedActionData z2_rotation() {
  return extend_from_generators(cyclic_group(2), {{3, 2}, {3, 1}},
                                {{1, 1, A(1, 2), {0, 1}, {A(1, 2), A(0, 1)}}});
}

/// Z3 cycling three (2,1) fillings.
inline ExtendedActionData z3_cycle() {
  return extend_from_generators(cyclic_group(3), {{2, 1}, {2, 1}, {2, 1}},
                                {{1, 1, A(1, 3), {1, 2, 0}, {A(1, 3), A(2, 3), A(0, 1)}}});
}

/// Z2 x Z2: one factor reflects fibers and swaps two fillings, the other rotates.
inline ExtendedActionData klein_four() {
  return extend_from_generators(direct_product(cyclic_group(2), cyclic_group(2)), {{5, 2}, {5, 2}},
                                {{2, -1, A(1, 5), {1, 0}, {A(1, 7), A(1, 7)}},
                                 {1, 1, A(1, 2), {0, 1}, {A(1, 2), A(1, 2)}}});
}

/// Z6 rotating by 1/6, swapping two (3,1) fillings and fixing a (2,1) filling.
inline ExtendedActionData z6_rotation() {
  return extend_from_generators(cyclic_group(6), {{3, 1}, {3, 1}, {2, 1}},
                                {{1, 1, A(1, 6), {1, 0, 2}, {A(1, 4), A(1, 12), A(1, 6)}}});
}

/// Dihedral group of order 6 on three (4,1) fillings; reflections reverse fibers.
inline ExtendedActionData dihedral6() {
  return extend_from_generators(dihedral_group(3), {{4, 1}, {4, 1}, {4, 1}},
                                {{1, 1, A(1, 3), {1, 2, 0}, {A(1, 3), A(1, 3), A(1, 3)}},
                                 {3, -1, A(1, 4), {0, 2, 1}, {A(0, 1), A(0, 1), A(0, 1)}}});
}

/// Dihedral group of order 8 on four (2,1) fillings.
inline ExtendedActionData dihedral8() {
  return extend_from_generators(dihedral_group(4), {{2, 1}, {2, 1}, {2, 1}, {2, 1}},
                                {{1, 1, A(1, 4), {1, 2, 3, 0}, {A(1, 4), A(1, 4), A(1, 4), A(1, 4)}},
                                 {4, -1, A(0, 1), {0, 3, 2, 1}, {A(0, 1), A(0, 1), A(0, 1), A(0, 1)}}});
}

/// Quaternion group; alpha has kernel <i> and every alpha = -1 element has order 4.
inline ExtendedActionData quaternion() {
  return extend_from_generators(quaternion_group(), {{3, 1}},
                                {{1, 1, A(1, 2), {0}, {A(0, 1)}}, {2, -1, A(1, 3), {0}, {A(0, 1)}}});
}

inline std::vector<NamedFixture> acceptance_fixtures() {
  return {{"Z2", z2_rotation()},   {"Z3", z3_cycle()},       {"Z2xZ2", klein_four()},
          {"Z6", z6_rotation()},   {"Dih(6)", dihedral6()}, {"Dih(8)", dihedral8()}};
}

/// Evaluation-level homomorphism check, independent of verify_action:
/// phi(g1) o phi(g2) = phi(g1 g2) on every boundary torus, compared as
/// composed torus automorphisms.
inline bool boundary_homomorphism_holds(const ExtendedActionData& d) {
  for (Element g1 = 0; g1 < d.group.order(); ++g1)
    for (Element g2 = 0; g2 < d.group.order(); ++g2)
      for (std::size_t i = 0; i < d.n_boundary(); ++i) {
        auto second = boundary_action(d, g2, i);
        auto first = boundary_action(d, g1, second.target);
        auto whole = boundary_action(d, d.group.mul(g1, g2), i);
        if (first.target != whole.target || compose(first.map, second.map) != whole.map) return false;
      }
  return true;
}

enum class PerturbationKind { theta1, theta2, beta };

/// One entry of the data changed at a non-identity element: theta1(g) or
/// theta2(i, g) shifted by k/97, or beta(g) composed with a transposition.
/// For groups of order at least 3 every such change breaks a relation
/// g = h (h^-1 g) with h outside {1, g}.
inline ExtendedActionData perturb(const ExtendedActionData& d, std::mt19937_64& rng, PerturbationKind& kind) {
  ExtendedActionData out = d;
  std::uniform_int_distribution<Element> gd(0, d.group.order() - 1);
  Element g;
  do g = gd(rng);
  while (g == d.group.identity());
  std::uniform_int_distribution<int> kd(0, d.n_boundary() >= 2 ? 2 : 1), shift(1, 96);
  kind = static_cast<PerturbationKind>(d.n_boundary() == 0 ? 0 : kd(rng));
  switch (kind) {
    case PerturbationKind::theta1:
      out.theta1[g] = out.theta1[g] + A(shift(rng), 97);
      break;
    case PerturbationKind::theta2: {
      std::uniform_int_distribution<std::size_t> id(0, d.n_boundary() - 1);
      std::size_t i = id(rng);
      out.theta2[g][i] = out.theta2[g][i] + A(shift(rng), 97);
      break;
    }
    case PerturbationKind::beta: {
      std::uniform_int_distribution<std::size_t> id(0, d.n_boundary() - 1);
      std::size_t i = id(rng), j;
      do j = id(rng);
      while (j == i);
      std::swap(out.beta[g][i], out.beta[g][j]);
      break;
    }
  }
  return out;
}

}  // namespace seifert::testing

#endif  // SEIFERT_TESTS_FIXTURES_HPP
