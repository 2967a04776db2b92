#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horotower/presentation.hpp"

using horotower::Presentation;
using horotower::surface_group;
using horotower::Word;

TEST_CASE("once-punctured torus") {
  Presentation p = surface_group(1, 1);
  CHECK(p.free_rank() == 2);
  CHECK(p.generator_names == std::vector<std::string>{"a1", "b1"});
  REQUIRE(p.peripherals.size() == 1);
  CHECK(p.peripherals[0] == Word({1, 2, -1, -2}));
}

TEST_CASE("thrice-punctured sphere") {
  Presentation p = surface_group(0, 3);
  CHECK(p.free_rank() == 2);
  CHECK(p.generator_names == std::vector<std::string>{"c1", "c2"});
  REQUIRE(p.peripherals.size() == 3);
  CHECK(p.peripherals[0] == Word({1}));
  CHECK(p.peripherals[1] == Word({2}));
  CHECK(p.peripherals[2] == Word({-2, -1}));
}

TEST_CASE("genus two, one puncture") {
  Presentation p = surface_group(2, 1);
  CHECK(p.free_rank() == 4);
  REQUIRE(p.peripherals.size() == 1);
  CHECK(p.peripherals[0] == Word({1, 2, -1, -2, 3, 4, -3, -4}));
}

TEST_CASE("twice-punctured torus") {
  Presentation p = surface_group(1, 2);
  CHECK(p.free_rank() == 3);
  CHECK(p.generator_names == std::vector<std::string>{"a1", "b1", "c1"});
  REQUIRE(p.peripherals.size() == 2);
  CHECK(p.peripherals[0] == Word({3}));
  CHECK(p.peripherals[1] == Word({-3, 1, 2, -1, -2}));
}

TEST_CASE("boundary relation holds for a range of signatures") {
  for (int g = 0; g <= 3; ++g) {
    for (int m = 1; m <= 4; ++m) {
      Presentation p = surface_group(g, m);
      Word lhs;
      for (const Word& pj : p.peripherals) lhs = lhs * pj;
      Word rhs;
      for (int i = 0; i < g; ++i) {
        rhs = rhs * Word::commutator(Word::generator(2 * i),
                                     Word::generator(2 * i + 1));
      }
      CHECK(lhs == rhs);
      // Peripherals only use declared generators.
      for (const Word& pj : p.peripherals) {
        CHECK(pj.max_generator_index() < p.free_rank());
      }
    }
  }
}

TEST_CASE("invalid signatures rejected") {
  CHECK_THROWS_AS(surface_group(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(surface_group(0, 0), std::invalid_argument);
}
