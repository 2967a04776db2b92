#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "horotower/perm.hpp"

using horotower::is_transitive;
using horotower::orbit;
using horotower::Perm;
using horotower::perm_pow;

TEST_CASE("validation") {
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 2}), std::invalid_argument);
  CHECK(Perm({1, 0, 2}).degree() == 3);
}

TEST_CASE("composition applies right factor first") {
  // a = (0 1), b = (1 2) on three points.
  Perm a({1, 0, 2});
  Perm b({0, 2, 1});
  Perm ab = a * b;  // x -> a(b(x))
  CHECK(ab(0) == 1);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
  Perm ba = b * a;
  CHECK(ba(0) == 2);
  CHECK(ba(1) == 0);
  CHECK(ba(2) == 1);
  CHECK(ab != ba);
}

TEST_CASE("inverse and identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    uint32_t n = 1 + uint32_t(rng() % 12);
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = i;
    for (uint32_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
    Perm p(img);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK((Perm::identity(n) * p) == p);
  }
}

TEST_CASE("cycles canonical order") {
  // 0->1->0, 2->2, 3->4->5->3
  Perm p({1, 0, 2, 4, 5, 3});
  auto cs = p.cycles();
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == std::vector<uint32_t>{0, 1});
  CHECK(cs[1] == std::vector<uint32_t>{2});
  CHECK(cs[2] == std::vector<uint32_t>{3, 4, 5});
}

TEST_CASE("perm_pow matches iterated product") {
  Perm p({1, 2, 3, 0});
  CHECK(perm_pow(p, 0).is_identity());
  CHECK(perm_pow(p, 4).is_identity());
  CHECK(perm_pow(p, 3) == p.inverse());
  CHECK(perm_pow(p, -1) == p.inverse());
  CHECK(perm_pow(p, 7) == p * p * p);
}

TEST_CASE("orbit and transitivity") {
  Perm a({1, 0, 2, 3});  // swaps 0,1
  Perm b({0, 1, 3, 2});  // swaps 2,3
  CHECK(orbit({a, b}, 0) == std::vector<uint32_t>{0, 1});
  CHECK_FALSE(is_transitive({a, b}, 4));
  Perm c({1, 2, 3, 0});
  CHECK(is_transitive({c}, 4));
  CHECK(orbit({c}, 2) == std::vector<uint32_t>{0, 1, 2, 3});
}
