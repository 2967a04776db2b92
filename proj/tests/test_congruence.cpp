#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horotower/builders.hpp"
#include "horotower/congruence.hpp"
#include "horotower/tower.hpp"

using namespace horotower;

TEST_CASE("enumeration orders at small levels") {
  CHECK(psl2_enumerate(2)->size() == 6);
  CHECK(psl2_enumerate(3)->size() == 12);
  CHECK(psl2_enumerate(5)->size() == 60);
  CHECK_THROWS_AS(psl2_enumerate(1), std::invalid_argument);
  CHECK_THROWS_AS(psl2_enumerate(13), std::invalid_argument);
}

TEST_CASE("frozen table of index, cusps, genus") {
  const uint64_t want[10][3] = {
      {12, 4, 0},   {24, 6, 0},   {60, 12, 0},  {72, 12, 1},  {168, 24, 3},
      {192, 24, 5}, {324, 36, 10}, {360, 36, 13}, {660, 60, 26}, {576, 48, 25}};
  for (uint32_t n = 3; n <= 12; ++n) {
    CHECK(index_formula(n) == want[n - 3][0]);
    CHECK(cusp_count_formula(n) == want[n - 3][1]);
    CHECK(genus_congruence(n) == want[n - 3][2]);
  }
  CHECK_THROWS_AS(index_formula(2), std::invalid_argument);
  CHECK_THROWS_AS(genus_congruence(2), std::invalid_argument);
}

TEST_CASE("formulas agree with enumeration over the whole range") {
  std::vector<CongruenceRow> rows = verify_formulas(3, 12);
  REQUIRE(rows.size() == 10);
  for (const CongruenceRow& r : rows) {
    CHECK(r.index_formula_value == r.index_bruteforce);
    CHECK(r.cusps_formula == r.cusps_bruteforce);
  }
  CHECK(cusp_count_bruteforce(2) == 3);
  CHECK(verify_formulas(5, 4).empty());
  CHECK_THROWS_AS(verify_formulas(2, 5), std::invalid_argument);
}

TEST_CASE("tower genus matches the closed form") {
  // Level k of the matrix tower is the level-(2 k!) cover; its genus from
  // the coverings side must equal the arithmetic formula.
  Tower t = build_congruence_tower(3);
  CHECK(t.levels[1].cover.genus() == int64_t(genus_congruence(4)));
  CHECK(t.levels[2].cover.genus() == int64_t(genus_congruence(12)));
  // Cover degree = index ratio against the order-6 base quotient.
  CHECK(t.levels[1].cover.degree() == index_formula(4) / 6);
  CHECK(t.levels[2].cover.degree() == index_formula(12) / 6);
}

TEST_CASE("divisibility witness") {
  for (uint32_t n = 2; n <= 12; ++n)
    for (uint32_t m = 2; m <= 12; ++m) CHECK(divisibility_agrees(n, m));
}

TEST_CASE("table emitters") {
  std::vector<CongruenceRow> rows = verify_formulas(7, 7);
  CHECK(congruence_table_csv(rows) ==
        "n,index_formula,index_bruteforce,cusps_formula,cusps_bruteforce,"
        "genus\n7,168,168,24,24,3\n");
  CHECK(congruence_table_json(rows) ==
        "{\"schema_version\":1,\"rows\":[{\"n\":7,\"index_formula\":168,"
        "\"index_bruteforce\":168,\"cusps_formula\":24,"
        "\"cusps_bruteforce\":24,\"genus\":3}]}");
}
