#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horotower/builders.hpp"

using namespace horotower;

TEST_CASE("dyadic tower keeps one cusp over each puncture") {
  Tower t = build_class1(4);
  REQUIRE(t.depth() == 4);
  for (size_t n = 1; n <= 4; ++n) {
    const FiniteCover& c = t.levels[n].cover;
    CHECK(c.degree() == (1u << n));
    CHECK(c.genus() == int64_t(1) << n);
  }
  for (int j = 0; j < 2; ++j) {
    CHECK(t.cusp_counts(j) == std::vector<uint32_t>{1, 1, 1, 1, 1});
    CHECK(classify_trichotomy(t, j).kind == TowerClass::kSingle);
  }
  CHECK(t.is_mccord());
}

TEST_CASE("multi-cusp single-orbit tower") {
  Tower t = build_class1m(4, 3);
  REQUIRE(t.depth() == 3);
  for (size_t n = 1; n <= 3; ++n) {
    const FiniteCover& c = t.levels[n].cover;
    uint32_t d = 1;
    for (size_t i = 0; i < n; ++i) d *= 4;
    CHECK(c.degree() == d);
    CHECK(c.total_cusps() == 4);
    for (int j = 0; j < 4; ++j) {
      CHECK(c.cusp_widths(j) == std::vector<uint32_t>{d});
    }
    CHECK(c.genus() == int64_t(d) - 1);
  }
  for (int j = 0; j < 4; ++j) {
    CHECK(classify_trichotomy(t, j).kind == TowerClass::kSingle);
  }
  CHECK(t.is_mccord());
}

TEST_CASE("stabilizing tower is normal at every level") {
  Tower t = build_class2(4);
  REQUIRE(t.depth() == 4);
  CHECK(t.levels[1].cover.degree() == 2);
  CHECK(t.levels[2].cover.degree() == 6);
  CHECK(t.levels[3].cover.degree() == 18);
  CHECK(t.levels[4].cover.degree() == 54);
  CHECK(t.cusp_counts(0) == std::vector<uint32_t>{1, 2, 2, 2, 2});
  TrichotomyReport r = classify_trichotomy(t, 0);
  CHECK(r.kind == TowerClass::kStabilized);
  CHECK(r.limit_count == 2);
  CHECK(r.stabilized_at == 1);
  CHECK(r.str() == "Class2(2), stabilized at level 1, c=(1,2,2,2,2)");
  CHECK(t.is_mccord());
  for (size_t n = 2; n <= 4; ++n) {
    int64_t third = int64_t(t.levels[n].cover.degree()) / 2;
    CHECK(t.levels[n].cover.genus() == third);
  }
}

TEST_CASE("growing tower splits cusps fully") {
  Tower t = build_class3_closed(5);
  CHECK(t.cusp_counts(0) == std::vector<uint32_t>{1, 2, 4, 8, 16, 32});
  TrichotomyReport r = classify_trichotomy(t, 0);
  CHECK(r.kind == TowerClass::kGrowing);
  CHECK(r.str() == "Class3-so-far, c=(1,2,4,8,16,32)");
  for (size_t n = 1; n <= 5; ++n) {
    const FiniteCover& c = t.levels[n].cover;
    CHECK(c.genus() == 1);
    for (uint32_t w : c.cusp_widths(0)) CHECK(w == 1);
  }
  CHECK(t.is_mccord());
}

TEST_CASE("irregular tower stays one-cusp and never normal") {
  Tower t = build_nonregular_one_cusp(3);
  REQUIRE(t.depth() == 3);
  // Deterministic scan finds the transposition pair first.
  CHECK(t.levels[1].cover.gen_perms[0] == Perm({0, 2, 1}));
  CHECK(t.levels[1].cover.gen_perms[1] == Perm({1, 0, 2}));
  uint32_t d = 1;
  for (size_t n = 1; n <= 3; ++n) {
    d *= 3;
    const FiniteCover& c = t.levels[n].cover;
    CHECK(c.degree() == d);
    CHECK(c.cusp_widths(0) == std::vector<uint32_t>{d});
    CHECK_FALSE(c.is_normal());
    CHECK(c.genus() == int64_t(d + 1) / 2);
  }
  CHECK_FALSE(t.is_mccord());
  CHECK(classify_trichotomy(t, 0).kind == TowerClass::kSingle);
  // The scan is deterministic: rebuilding gives identical actions.
  Tower t2 = build_nonregular_one_cusp(3);
  for (size_t n = 0; n <= 3; ++n) {
    CHECK(t2.levels[n].cover.gen_perms == t.levels[n].cover.gen_perms);
  }
}

TEST_CASE("matrix tower cusp growth") {
  Tower t = build_congruence_tower(3);
  REQUIRE(t.depth() == 2);
  CHECK(t.levels[1].cover.degree() == 4);
  CHECK(t.levels[2].cover.degree() == 96);
  for (int j = 0; j < 3; ++j) {
    CHECK(t.cusp_counts(j) == std::vector<uint32_t>{1, 2, 16});
    CHECK(t.levels[1].cover.cusp_widths(j) ==
          std::vector<uint32_t>(2, 2));
    CHECK(t.levels[2].cover.cusp_widths(j) ==
          std::vector<uint32_t>(16, 6));
  }
  CHECK(t.levels[1].cover.genus() == 0);
  CHECK(t.levels[2].cover.genus() == 25);
  CHECK(t.is_mccord());
}

TEST_CASE("affine suspension tower") {
  Tower t = build_padic_suspension(3, 1, 4);
  uint32_t d = 1;
  for (size_t n = 1; n <= 4; ++n) {
    d *= 3;
    const FiniteCover& c = t.levels[n].cover;
    CHECK(c.degree() == d);
    // The boundary word acts as the translation x -> x + 1.
    CHECK(c.peripheral_perm(0) == translation_action(d, 1));
    CHECK(c.genus() == int64_t(d + 1) / 2);
  }
  CHECK(classify_trichotomy(t, 0).kind == TowerClass::kSingle);

  Tower tm = build_padic_suspension(3, 4, 2);
  for (size_t n = 1; n <= 2; ++n) {
    const FiniteCover& c = tm.levels[n].cover;
    for (int j = 0; j < 4; ++j) {
      CHECK(c.cusp_fiber(j).size() == 1);
    }
  }
  CHECK_THROWS_AS(build_padic_suspension(5, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_padic_suspension(2, 1, 2), std::invalid_argument);
}

TEST_CASE("sphere-based stabilizing tower") {
  Tower t = build_gamma2_class2(4);
  CHECK(t.cusp_counts(0) == std::vector<uint32_t>{1, 2, 2, 2, 2});
  CHECK(classify_trichotomy(t, 0).kind == TowerClass::kStabilized);
  CHECK(t.cusp_counts(1) == std::vector<uint32_t>{1, 1, 3, 9, 27});
  CHECK(classify_trichotomy(t, 1).kind == TowerClass::kGrowing);
  for (size_t n = 1; n <= 4; ++n) {
    CHECK(t.levels[n].cover.genus() == 0);
  }
  CHECK(t.is_mccord());
}

TEST_CASE("no normal one-cusp cover has a connected boundary") {
  ObstructionReport r1 = one_cusp_obstruction_search(1, 4);
  CHECK(r1.assignments == 4 + 36 + 576);
  CHECK(r1.hits == 0);
  ObstructionReport r2 = one_cusp_obstruction_search(2, 3);
  CHECK(r2.assignments == 16 + 1296);
  CHECK(r2.hits == 0);
}

TEST_CASE("suspension relations in the affine group") {
  for (uint32_t k = 1; k <= 10; ++k) {
    auto r = check_suspension_relations(3, k, 1);
    CHECK(r.multiplier_invertible);
    CHECK(r.commutator_identity);
    CHECK(r.intertwine_identity);
    CHECK(r.exponent_unique);
    CHECK(r.exponent == 2 % r.modulus);
  }
  for (uint32_t k = 1; k <= 6; ++k) {
    auto r = check_suspension_relations(7, k, 2);
    CHECK(r.multiplier_invertible);
    CHECK(r.commutator_identity);
    CHECK(r.exponent == 3 % r.modulus);
  }
  // Non-invertible multiplier: only the intertwining form holds.
  for (uint32_t k = 1; k <= 4; ++k) {
    auto r = check_suspension_relations(5, k, 4);
    CHECK_FALSE(r.multiplier_invertible);
    CHECK_FALSE(r.commutator_identity);
    CHECK(r.intertwine_identity);
    CHECK(r.exponent_unique);
    CHECK(r.exponent == 5 % r.modulus);
  }
}
