#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horotower/cover.hpp"

using namespace horotower;

namespace {

std::shared_ptr<const Presentation> torus1() {
  return std::make_shared<const Presentation>(surface_group(1, 1));
}

}  // namespace

TEST_CASE("trivial cover") {
  auto base = std::make_shared<const Presentation>(surface_group(2, 3));
  FiniteCover c = identity_cover(base);
  CHECK(c.degree() == 1);
  CHECK(c.total_cusps() == 3);
  CHECK(c.genus() == 2);
  CHECK(c.is_normal());
}

TEST_CASE("degree-3 irregular cover of the once-punctured torus") {
  FiniteCover c;
  c.base = torus1();
  c.gen_perms = {Perm({1, 0, 2}), Perm({2, 1, 0})};
  c.basepoint = 0;
  c.validate();
  // Commutator of the two transpositions is a 3-cycle: one wide cusp.
  auto fiber = c.cusp_fiber(0);
  REQUIRE(fiber.size() == 1);
  CHECK(fiber[0].size() == 3);
  CHECK(c.cusp_widths(0) == std::vector<uint32_t>{3});
  CHECK(c.genus() == 2);
  CHECK_FALSE(c.is_normal());
}

TEST_CASE("left regular nonabelian cover is normal") {
  auto g = std::make_shared<ExplicitPermGroup>(
      std::vector<Perm>{Perm({1, 0, 2}), Perm({1, 2, 0})});
  REQUIRE(g->size() == 6);
  FiniteAssignment rho{g, {g->index_of(Perm({1, 0, 2})),
                           g->index_of(Perm({1, 2, 0}))}};
  FiniteCover c = cover_from_assignment(torus1(), rho, "regular s3");
  CHECK(c.degree() == 6);
  CHECK(c.is_normal());
  // The commutator image has order 3, so two cusps of width 3.
  CHECK(c.cusp_widths(0) == std::vector<uint32_t>{3, 3});
}

TEST_CASE("abelian square cover") {
  // a and b map to the two factors of Z/2 x Z/2 realized as permutations.
  auto g = std::make_shared<ExplicitPermGroup>(
      std::vector<Perm>{Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})});
  REQUIRE(g->size() == 4);
  FiniteAssignment rho{g, {g->index_of(Perm({1, 0, 2, 3})),
                           g->index_of(Perm({0, 1, 3, 2}))}};
  FiniteCover c = cover_from_assignment(torus1(), rho, "klein");
  CHECK(c.degree() == 4);
  CHECK(c.is_normal());
  // Abelian deck group: boundary word acts trivially, four narrow cusps.
  CHECK(c.cusp_widths(0) == std::vector<uint32_t>{1, 1, 1, 1});
  CHECK(c.genus() == 1);
}

TEST_CASE("dyadic double cover of the twice-punctured torus") {
  auto base = std::make_shared<const Presentation>(surface_group(1, 2));
  auto rho = solve_peripheral_targets(*base, {1, -1}, 2);
  REQUIRE(rho.has_value());
  FiniteCover c = cover_from_assignment(base, *rho, "dyadic 1");
  CHECK(c.degree() == 2);
  CHECK(c.cusp_widths(0) == std::vector<uint32_t>{2});
  CHECK(c.cusp_widths(1) == std::vector<uint32_t>{2});
  CHECK(c.genus() == 2);
  CHECK(c.is_normal());
}

TEST_CASE("peripheral target solvability") {
  Presentation base = surface_group(0, 3);
  CHECK_FALSE(solve_peripheral_targets(base, {1, 1, 1}, 8).has_value());
  CHECK(solve_peripheral_targets(base, {1, 1, 1}, 3).has_value());
  auto rho = solve_peripheral_targets(base, {1, 1, -2}, 8);
  REQUIRE(rho.has_value());
  CHECK(rho->evaluate(base.peripherals[2]) == 6);
  CHECK_THROWS_AS(solve_peripheral_targets(base, {1, 1}, 8),
                  std::invalid_argument);
}

TEST_CASE("validation failures") {
  FiniteCover c;
  c.base = torus1();
  c.gen_perms = {Perm({1, 0})};  // wrong rank
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.gen_perms = {Perm({1, 0}), Perm({0, 1, 2})};  // degree mismatch
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.gen_perms = {Perm({0, 1}), Perm({0, 1})};  // disconnected
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
