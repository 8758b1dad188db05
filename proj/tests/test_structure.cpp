#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "seifert/structure.hpp"

using namespace seifert;
using namespace seifert::testing;

namespace {

ExtendedActionData with_alpha(FiniteGroup g, std::vector<int> alpha) {
  auto d = ExtendedActionData::trivial(std::move(g), {});
  d.alpha = std::move(alpha);
  return d;
}

std::vector<ExtendedActionData> all_fixtures() {
  std::vector<ExtendedActionData> out;
  for (auto& f : acceptance_fixtures()) out.push_back(f.data);
  out.push_back(quaternion());
  out.push_back(with_alpha(cyclic_group(4), {1, -1, 1, -1}));
  return out;
}

}  // namespace

TEST(FopSubgroup, Examples) {
  EXPECT_EQ(fop_subgroup(z3_cycle()), (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(fop_subgroup(with_alpha(cyclic_group(2), {1, -1})), (std::vector<Element>{0}));
  EXPECT_EQ(fop_subgroup(dihedral6()), (std::vector<Element>{0, 1, 2}));
}

TEST(RotationOrder, Examples) {
  auto d = ExtendedActionData::trivial(cyclic_group(3), {});
  EXPECT_EQ(rotation_order(d), 1);
  d.theta1 = {A(0, 1), A(1, 3), A(2, 3)};
  EXPECT_EQ(rotation_order(d), 3);
  auto e = ExtendedActionData::trivial(cyclic_group(6), {});
  e.theta1 = {A(0, 1), A(1, 6), A(1, 3), A(1, 2), A(2, 3), A(5, 6)};
  EXPECT_EQ(rotation_order(e), 6);
  // Reflections do not contribute.
  auto r = with_alpha(cyclic_group(2), {1, -1});
  r.theta1[1] = A(1, 5);
  EXPECT_EQ(rotation_order(r), 1);
}

TEST(FindSplitting, Examples) {
  EXPECT_FALSE(find_splitting(z6_rotation()));
  EXPECT_EQ(find_splitting(with_alpha(cyclic_group(2), {1, -1})), Element{1});
  EXPECT_FALSE(find_splitting(with_alpha(cyclic_group(4), {1, -1, 1, -1})));
  EXPECT_EQ(find_splitting(dihedral8()), Element{4});
}

TEST(StructureReport, Classifications) {
  EXPECT_EQ(structure_report(z6_rotation()).classification, SplittingClass::direct_like);
  EXPECT_EQ(structure_report(z3_cycle()).classification, SplittingClass::direct_like);
  EXPECT_EQ(structure_report(dihedral6()).classification, SplittingClass::semidirect);
  EXPECT_EQ(structure_report(dihedral8()).classification, SplittingClass::semidirect);
  EXPECT_EQ(structure_report(quaternion()).classification, SplittingClass::no_splitting_found);
  EXPECT_EQ(structure_report(with_alpha(cyclic_group(4), {1, -1, 1, -1})).classification,
            SplittingClass::no_splitting_found);
  EXPECT_EQ(to_string(SplittingClass::no_splitting_found), "no-splitting-found");
}

TEST(StructureReport, Format) {
  auto r = structure_report(dihedral6());
  EXPECT_EQ(format(r, 6),
            "order: 6\nfop_subgroup: {0,1,2}\nfop_index: 2\nrotation_order: 3\nsplitting_element: 3\n"
            "classification: semidirect\n");
}

TEST(StructureReport, Properties) {
  for (const auto& d : all_fixtures()) {
    auto r = structure_report(d);
    ASSERT_TRUE(is_subgroup(d.group, r.fop_subgroup));
    ASSERT_EQ(r.fop_index * r.fop_subgroup.size(), d.group.order());
    ASSERT_TRUE(r.fop_index == 1 || r.fop_index == 2);
    bool exists = false;
    for (Element g = 0; g < d.group.order(); ++g)
      exists |= d.alpha[g] == -1 && d.group.mul(g, g) == d.group.identity();
    ASSERT_EQ(r.splitting_element.has_value(), exists);
    if (r.splitting_element) {
      Element g = *r.splitting_element;
      ASSERT_EQ(d.alpha[g], -1);
      ASSERT_EQ(d.group.mul(g, g), d.group.identity());
    }
    // Semidirect exactly when a complement of order 2 to the fop subgroup exists.
    ASSERT_EQ(r.classification == SplittingClass::semidirect, r.fop_index == 2 && exists);
    ASSERT_EQ(r.classification == SplittingClass::direct_like, r.fop_index == 1);
  }
}
