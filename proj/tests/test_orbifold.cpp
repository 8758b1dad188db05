#include <random>

#include <gtest/gtest.h>

#include "seifert/group.hpp"
#include "seifert/orbifold.hpp"

using namespace seifert;

namespace {

OrbifoldData sphere(std::vector<Integer> cones) { return {0, std::move(cones), {}, false}; }

}  // namespace

TEST(Orbifold, EulerCharacteristicExamples) {
  EXPECT_EQ(euler_characteristic(sphere({2, 2, 3, 3, 3})), Fraction(-1));
  EXPECT_EQ(euler_characteristic(sphere({})), Fraction(2));
  EXPECT_EQ(euler_characteristic(sphere({2, 2, 2, 2})), Fraction(0));
  EXPECT_EQ(euler_characteristic(OrbifoldData{2, {}, {}, false}), Fraction(-2));
}

TEST(Orbifold, GeometryExamples) {
  EXPECT_EQ(geometry_sign(sphere({2, 2, 3, 3, 3})), Geometry::hyperbolic);
  EXPECT_EQ(geometry_sign(sphere({2, 2, 2, 2})), Geometry::euclidean);
  EXPECT_EQ(geometry_sign(sphere({2, 3, 5})), Geometry::spherical);
  EXPECT_EQ(to_string(Geometry::hyperbolic), "hyperbolic");
}

TEST(Orbifold, Errors) {
  EXPECT_THROW(euler_characteristic(sphere({1})), DomainError);
  EXPECT_THROW(euler_characteristic(OrbifoldData{-1, {}, {}, false}), DomainError);
  EXPECT_THROW(require_valid(OrbifoldData{0, {}, {2}, false}), DomainError);
  EXPECT_THROW(euler_characteristic(OrbifoldData{0, {}, {2}, true}), DomainError);
  EXPECT_THROW(possible_orbit_numbers(12, sphere({5})), DomainError);
  EXPECT_THROW(possible_orbit_numbers(6, OrbifoldData{0, {}, {2}, true}), DomainError);
}

TEST(Orbifold, AdditiveUnderExtraConePoint) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> nd(2, 30), count(0, 6), gd(0, 3);
  for (int k = 0; k < 500; ++k) {
    OrbifoldData o{gd(rng), {}, {}, false};
    for (int j = count(rng); j > 0; --j) o.cone_orders.push_back(nd(rng));
    Fraction chi = euler_characteristic(o);
    Integer n = nd(rng);
    o.cone_orders.push_back(n);
    ASSERT_EQ(euler_characteristic(o), chi - (Fraction(1) - Fraction(1, n)));
  }
}

TEST(Orbifold, OrbitNumberExamples) {
  EXPECT_EQ(possible_orbit_numbers(12, sphere({2, 3})), (std::set<Integer>{4, 6, 12}));
  EXPECT_EQ(possible_orbit_numbers(8, OrbifoldData{0, {}, {2}, true}), (std::set<Integer>{2, 8}));
  EXPECT_EQ(possible_orbit_numbers(1, sphere({})), (std::set<Integer>{1}));
}

TEST(Orbifold, OrbitNumbersDivideGroupOrder) {
  for (int N = 1; N <= 60; ++N)
    for (int n : {2, 3, 4, 5, 6})
      for (int m : {2, 3}) {
        if (N % n != 0 || N % (2 * m) != 0) continue;
        for (const auto& o : possible_orbit_numbers(N, OrbifoldData{0, {n}, {m}, true}))
          ASSERT_EQ(N % o, 0);
      }
}

TEST(Orbifold, OrbitSizeMatchesCosetCount) {
  // A point whose stabilizer is the cyclic subgroup of order n in Z_N has an
  // orbit in bijection with the left cosets of that subgroup.
  for (std::size_t N = 1; N <= 36; ++N) {
    FiniteGroup g = cyclic_group(N);
    for (std::size_t n = 1; n <= N; ++n) {
      if (N % n != 0) continue;
      std::vector<Element> stab;
      for (Element k = 0; k < N; k += N / n) stab.push_back(k);
      ASSERT_TRUE(is_subgroup(g, stab));
      std::set<std::set<Element>> cosets;
      for (Element x = 0; x < N; ++x) {
        std::set<Element> c;
        for (Element s : stab) c.insert(g.mul(x, s));
        cosets.insert(c);
      }
      std::set<Integer> predicted = n == 1 ? std::set<Integer>{Integer(N)}
                                           : possible_orbit_numbers(N, sphere({Integer(n)}));
      ASSERT_TRUE(predicted.count(Integer(cosets.size()))) << N << " " << n;
    }
  }
}

TEST(Orbifold, TextRoundTrip) {
  auto o = parse_orbifold("genus:0 cone:(2,2,3,3,3) corner:()");
  EXPECT_EQ(o, sphere({2, 2, 3, 3, 3}));
  EXPECT_EQ(format(o), "genus:0 cone:(2,2,3,3,3) corner:()");
  auto c = parse_orbifold(" genus: 1 corner:(2, 3) ");
  EXPECT_TRUE(c.with_boundary);
  EXPECT_EQ(parse_orbifold(format(c)), c);
  EXPECT_THROW(parse_orbifold("cone:(2)"), ParseError);
  EXPECT_THROW(parse_orbifold("genus:0 cone:(1)"), DomainError);
  EXPECT_THROW(parse_orbifold("genus:0 shape:(2)"), ParseError);
}
