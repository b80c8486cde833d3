#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sct/constructions.hpp"
#include "sct/theory.hpp"

using namespace sct;

TEST_CASE("accepts orbit partitions") {
  for (int n : {5, 8, 12, 15}) {
    Partition p = orbit_partition(n, make_unit_subgroup(n, {1, n - 1}));
    CHECK(is_theory(p));
    SCTheory t = validate_or_throw(p, "test");
    CHECK(t.dual.block_count() == t.superclasses.block_count());
  }
}

TEST_CASE("rejects a partition separating two small orders") {
  // orders 1 | 2 | 3 | rest in Z_30: the cheapest failing product is the
  // order-3 block times the order-2 block
  std::vector<int> ord2{15}, ord3{10, 20}, rest;
  for (int g = 1; g < 30; ++g)
    if (g != 15 && g != 10 && g != 20) rest.push_back(g);
  Partition p = canonical_partition(30, {{0}, ord2, ord3, rest});
  auto res = structure_constants(p);
  auto* rej = std::get_if<Rejection>(&res);
  REQUIRE(rej != nullptr);
  CHECK(rej->reason == Rejection::Reason::nonconstant_product);
  CHECK(p.blocks[rej->block_i] == ord3);
  CHECK(p.blocks[rej->block_j] == ord2);
  CHECK(!is_theory(p));
}

TEST_CASE("rejects when 0 shares a block") {
  Partition p = canonical_partition(4, {{0, 2}, {1, 3}});
  auto res = structure_constants(p);
  auto* rej = std::get_if<Rejection>(&res);
  REQUIRE(rej != nullptr);
  CHECK(rej->reason == Rejection::Reason::zero_block_not_singleton);
}

TEST_CASE("structure constant identities") {
  Partition p = orbit_partition(12, make_unit_subgroup(12, {1, 11}));
  auto res = structure_constants(p);
  REQUIRE(std::holds_alternative<StructureConstants>(res));
  const auto& tab = std::get<StructureConstants>(res).table;
  const int k = p.block_count();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      CHECK(tab[i][j] == tab[j][i]);  // abelian convolution commutes
      CHECK(tab[0][j][j] == 1);       // identity block acts trivially
      for (int l = 0; l < k; ++l)
        if (l != j) CHECK(tab[0][j][l] == 0);
    }
}

TEST_CASE("both validators agree on every small partition") {
  for (int n = 1; n <= 8; ++n) {
    CyclotomicContext ctx(n);
    oracle::for_each_zero_singleton_partition(n, [&](const Partition& p) {
      bool a = is_theory(p);
      bool b = dual_pattern_classes(p, ctx).block_count() == p.block_count();
      CHECK(a == b);
      CHECK(a == oracle::numeric_is_theory(p));
    });
  }
}

TEST_CASE("dual pattern classes of a known theory") {
  // inversion on Z_5: characters pair up the same way the classes do
  Partition p = orbit_partition(5, make_unit_subgroup(5, {1, 4}));
  Partition x = dual_pattern_classes(p);
  CHECK(x.block_count() == 3);
  CHECK(x == canonical_partition(5, {{0}, {1, 4}, {2, 3}}));
}

TEST_CASE("theory-normal subgroups") {
  SCTheory mn = min_theory(12);
  CHECK(normal_subgroups_of(mn).size() == 6);  // every subgroup, one per divisor

  // only the defining subgroup is a block union in this coset theory
  SCTheory st = star_product(6, subgroup_of_order(6, 2), min_theory(2),
                             min_theory(3));
  Subgroup p2 = subgroup_of_order(6, 2);
  Subgroup p3 = subgroup_of_order(6, 3);
  CHECK(is_theory_normal(st, p2));
  CHECK(!is_theory_normal(st, p3));
  CHECK_THROWS_AS(restrict_theory(st, p3), NotNormalError);
}

TEST_CASE("restriction transports blocks into the subgroup") {
  SCTheory inv = validate_or_throw(
      orbit_partition(12, make_unit_subgroup(12, {1, 11})), "test");
  Subgroup N = subgroup_of_order(12, 6);
  SCTheory r = restrict_theory(inv, N);
  CHECK(r.n() == 6);
  CHECK(r.superclasses ==
        orbit_partition(6, make_unit_subgroup(6, {1, 5})));
}
