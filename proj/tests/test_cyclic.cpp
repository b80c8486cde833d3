#include <catch2/catch_amalgamated.hpp>

#include "sct/cyclic.hpp"
#include "sct/errors.hpp"

using namespace sct;

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<int>{1});
  CHECK(divisors(12) == std::vector<int>({1, 2, 3, 4, 6, 12}));
  CHECK(divisors(13) == std::vector<int>({1, 13}));
  CHECK_THROWS_AS(divisors(0), InvalidDivisorError);
}

TEST_CASE("subgroups of Z_n") {
  Subgroup s = subgroup_of_order(12, 4);
  CHECK(s.order == 4);
  CHECK(s.elements == std::vector<int>({0, 3, 6, 9}));
  CHECK(subgroup_of_order(12, 1).elements == std::vector<int>{0});
  CHECK(subgroup_of_order(12, 12).order == 12);
  CHECK_THROWS_AS(subgroup_of_order(12, 5), InvalidDivisorError);
}

TEST_CASE("element orders") {
  CHECK(element_order(12, 0) == 1);
  CHECK(element_order(12, 4) == 3);
  CHECK(element_order(12, 6) == 2);
  CHECK(element_order(12, 5) == 12);
  CHECK(element_order(12, -5) == 12);
}

TEST_CASE("quotient map") {
  QuotientMap q = quotient_map(12, subgroup_of_order(12, 3));
  CHECK(q.modulus == 4);
  CHECK(q.apply(7) == 3);
  CHECK(q.apply(4) == 0);
  CHECK_THROWS_AS(quotient_map(12, subgroup_of_order(10, 5)),
                  IncompatibleGroupsError);
}

TEST_CASE("unit group") {
  CHECK(unit_group(12).elements == std::vector<int>({1, 5, 7, 11}));
  CHECK(unit_group(1).elements == std::vector<int>{0});
  CHECK(unit_group(2).elements == std::vector<int>{1});
}

TEST_CASE("unit subgroup validation") {
  CHECK(make_unit_subgroup(12, {1, 5}).elements ==
        std::vector<int>({1, 5}));
  CHECK_THROWS_AS(make_unit_subgroup(12, {1, 4}), InvalidSubgroupError);
  CHECK_THROWS_AS(make_unit_subgroup(12, {5, 7}), InvalidSubgroupError);
  CHECK(generated_unit_subgroup(12, {5, 7}).elements ==
        std::vector<int>({1, 5, 7, 11}));
  CHECK(generated_unit_subgroup(7, {3}).elements ==
        std::vector<int>({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("all unit subgroups") {
  auto subs = unit_subgroups(8);
  REQUIRE(subs.size() == 5);
  CHECK(subs.front().elements == std::vector<int>{1});
  CHECK(subs.back().elements == std::vector<int>({1, 3, 5, 7}));
  for (std::size_t i = 1; i < subs.size(); ++i) {
    bool ordered =
        subs[i - 1].elements.size() < subs[i].elements.size() ||
        (subs[i - 1].elements.size() == subs[i].elements.size() &&
         subs[i - 1].elements < subs[i].elements);
    CHECK(ordered);
  }
  CHECK(unit_subgroups(7).size() == 4);  // cyclic of order 6: one per divisor
}

TEST_CASE("orbit partitions") {
  Partition p = orbit_partition(12, make_unit_subgroup(12, {1, 11}));
  CHECK(p.block_count() == 7);
  CHECK(p.blocks[1] == std::vector<int>({1, 11}));
  CHECK(p.blocks[6] == std::vector<int>{6});

  // the full unit group collects elements of equal order
  Partition a = orbit_partition(12, unit_group(12));
  for (const auto& block : a.blocks)
    for (int g : block) CHECK(element_order(12, g) == element_order(12, block[0]));
  CHECK(a.block_count() == 6);  // one block per divisor of 12
}
