#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "horotower/rewriting.hpp"
#include "horotower/tower.hpp"

using namespace horotower;

namespace {

std::shared_ptr<const Presentation> torus1() {
  return std::make_shared<const Presentation>(surface_group(1, 1));
}

FiniteCover dyadic_cover(std::shared_ptr<const Presentation> base,
                         uint32_t m) {
  FiniteAssignment rho{std::make_shared<CyclicGroup>(m), {1, 0}};
  return cover_from_assignment(std::move(base), rho,
                               "dyadic " + std::to_string(m));
}

std::vector<uint32_t> mod_map(uint32_t big, uint32_t small) {
  std::vector<uint32_t> q(big);
  for (uint32_t x = 0; x < big; ++x) q[x] = x % small;
  return q;
}

}  // namespace

TEST_CASE("tower growth and classification over the once-punctured torus") {
  auto base = torus1();
  Tower t = tower_with_base(base, "dyadic");
  extend_by_explicit(t, dyadic_cover(base, 2), mod_map(2, 1));
  extend_by_explicit(t, dyadic_cover(base, 4), mod_map(4, 2));
  CHECK(t.depth() == 2);
  CHECK(t.cusp_counts(0) == std::vector<uint32_t>{1, 2, 4});
  TrichotomyReport r = classify_trichotomy(t, 0);
  CHECK(r.kind == TowerClass::kGrowing);
  CHECK(r.str() == "Class3-so-far, c=(1,2,4)");
  CHECK(t.is_mccord());
}

TEST_CASE("per-cusp classification can differ") {
  auto base = std::make_shared<const Presentation>(surface_group(0, 3));
  Tower t = tower_with_base(base, "mixed");
  for (uint32_t m : {2u, 4u}) {
    auto rho = solve_peripheral_targets(*base, {1, 1, -2}, m);
    REQUIRE(rho.has_value());
    extend_by_explicit(t, cover_from_assignment(base, *rho, "lvl"),
                       mod_map(m, m / 2 == 0 ? 1 : m / 2));
  }
  CHECK(t.cusp_counts(0) == std::vector<uint32_t>{1, 1, 1});
  CHECK(classify_trichotomy(t, 0).kind == TowerClass::kSingle);
  CHECK(classify_trichotomy(t, 0).str() == "Class1, c=(1,1,1)");
  CHECK(t.cusp_counts(2) == std::vector<uint32_t>{1, 2, 2});
  TrichotomyReport r2 = classify_trichotomy(t, 2);
  CHECK(r2.kind == TowerClass::kStabilized);
  CHECK(r2.limit_count == 2);
  CHECK(r2.stabilized_at == 1);
  CHECK(r2.str() == "Class2(2), stabilized at level 1, c=(1,2,2)");
}

TEST_CASE("classification needs two proper levels") {
  auto base = torus1();
  Tower t = tower_with_base(base, "short");
  extend_by_explicit(t, dyadic_cover(base, 2), mod_map(2, 1));
  CHECK_THROWS_AS(classify_trichotomy(t, 0), std::invalid_argument);
}

TEST_CASE("fiber extension obeys the rewriting cocycle") {
  auto base = torus1();
  Tower t = tower_with_base(base, "fiber");
  extend_by_explicit(t, dyadic_cover(base, 2), mod_map(2, 1));
  FiniteCover top = t.levels.back().cover;
  SchreierData sd = schreier_data(top.gen_perms, top.basepoint);
  REQUIRE(sd.subgroup_rank() == 3);
  Perm swap2({1, 0});
  std::vector<Perm> actions = {swap2, Perm::identity(2), swap2};
  extend_by_fiber_action(t, actions, "composite");
  const FiniteCover& comp = t.levels.back().cover;
  CHECK(comp.degree() == 4);
  CHECK(t.depth() == 2);

  // A loop at the top base sheet moves fibers by its rewritten word.
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int32_t> ls;
    size_t n = rng() % 10;
    for (size_t i = 0; i < n; ++i) {
      int32_t l = int32_t(rng() % 2) + 1;
      if (rng() & 1) l = -l;
      ls.push_back(l);
    }
    Word u{ls};
    uint32_t end = track(top.gen_perms, u, top.basepoint);
    Word w = sd.transversal[end].inverse() * u;
    Perm fiber_move = perm_evaluate(actions, rewrite_word(sd, top.gen_perms, w));
    for (uint32_t f = 0; f < 2; ++f) {
      uint32_t start = top.basepoint * 2 + f;
      uint32_t got = track(comp.gen_perms, w, start);
      CHECK(got == top.basepoint * 2 + fiber_move(f));
    }
  }
}

TEST_CASE("surjection validation") {
  auto base = torus1();
  Tower t = tower_with_base(base, "bad");
  FiniteCover c2 = dyadic_cover(base, 2);
  SUBCASE("wrong size") {
    CHECK_THROWS_AS(extend_by_explicit(t, c2, {0}), std::invalid_argument);
  }
  SUBCASE("not onto previous level") {
    extend_by_explicit(t, c2, mod_map(2, 1));
    FiniteCover c4 = dyadic_cover(base, 4);
    CHECK_THROWS_AS(extend_by_explicit(t, c4, {0, 0, 0, 0}),
                    std::invalid_argument);
  }
  SUBCASE("not equivariant") {
    extend_by_explicit(t, c2, mod_map(2, 1));
    FiniteCover c4 = dyadic_cover(base, 4);
    CHECK_THROWS_AS(extend_by_explicit(t, c4, {0, 0, 1, 1}),
                    std::invalid_argument);
  }
}
