#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horotower/common.hpp"
#include "horotower/gamma2.hpp"
#include "horotower/psl2.hpp"

using namespace horotower;

namespace {

double entry_gap(const Psl2Point& x, const Psl2Point& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                   std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

Psl2Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-10, 10), im(1e-3, 10),
      th(-M_PI, M_PI);
  return point_from_coords(re(rng), im(rng), th(rng));
}

}  // namespace

TEST_CASE("flows compose as one-parameter groups") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Psl2Point p = random_point(rng);
    CHECK(entry_gap(geodesic_flow(geodesic_flow(p, 1), 2),
                    geodesic_flow(p, 3)) <= 1e-9);
    CHECK(entry_gap(horocycle_flow(horocycle_flow(p, 0.25), -1.5),
                    horocycle_flow(p, -1.25)) <= 1e-9);
    CHECK(entry_gap(geodesic_flow(p, 0), p) <= 1e-10);
  }
}

TEST_CASE("geodesic flow from the origin climbs exponentially") {
  Psl2Point id;
  for (double t : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    std::complex<double> z = base_point(geodesic_flow(id, t));
    CHECK(std::abs(z.real()) <= 1e-12);
    CHECK(std::abs(z.imag() - std::exp(t)) <= 1e-9 * std::exp(t));
  }
}

TEST_CASE("renormalization identity between the two flows") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> box(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    Psl2Point p = random_point(rng);
    double t = box(rng), s = box(rng);
    Psl2Point lhs = horocycle_flow(geodesic_flow(p, t), s);
    Psl2Point rhs = geodesic_flow(horocycle_flow(p, s * std::exp(t)), t);
    CHECK(entry_gap(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("coordinate round trip") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> re(-3, 3), im(0.1, 8),
      th(-M_PI, M_PI - 1e-9);
  for (int i = 0; i < 1000; ++i) {
    double x = re(rng), y = im(rng), a = th(rng);
    Psl2Point p = point_from_coords(x, y, a);
    std::complex<double> z = base_point(p);
    CHECK(std::abs(z.real() - x) <= 1e-9);
    CHECK(std::abs(z.imag() - y) <= 1e-9);
    CHECK(std::abs(std::remainder(tangent_angle(p) - a, 2 * M_PI)) <= 1e-9);
  }
}

TEST_CASE("reduction lands in the fundamental domain and is sound") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10000; ++i) {
    Psl2Point p = random_point(rng);
    ReduceResult r = reduce(p);
    std::complex<double> z = base_point(r.reduced);
    CHECK(std::abs(z.real()) <= 0.5 + 1e-9);
    CHECK(std::norm(z) >= 1.0 - 1e-9);
    IntMat w = deck_matrix(r.word);
    Psl2Point back = psl2_mul(
        psl2_point(double(w.a), double(w.b), double(w.c), double(w.d)),
        r.reduced);
    CHECK(entry_gap(back, p) <= 1e-7);
  }
}

TEST_CASE("reduction fixtures") {
  ReduceResult at_i = reduce(point_from_coords(0, 1, M_PI / 2));
  CHECK(at_i.word.empty());

  // One unit right of the corner point: a single translation returns it.
  ReduceResult shifted = reduce(point_from_coords(1, 1, M_PI / 2));
  CHECK(shifted.word.runs == std::vector<int64_t>{1});
  CHECK(std::abs(base_point(shifted.reduced).real()) <= 1e-9);

  // Closed path at height one: after s=1 the deck word is one translation.
  Psl2Point start = point_from_coords(0, 1, M_PI / 2);
  ReduceResult cycled = reduce(horocycle_flow(start, 1));
  CHECK(cycled.word.runs == std::vector<int64_t>{1});
  CHECK(entry_gap(cycled.reduced, start) <= 1e-9);

  // Idempotence.
  ReduceResult again = reduce(shifted.reduced);
  CHECK(again.word.empty());
  CHECK(entry_gap(again.reduced, shifted.reduced) <= 1e-12);
}

TEST_CASE("determinant stays pinned over long flow compositions") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> small(-0.05, 0.05);
  Psl2Point p = point_from_coords(0.3, 1.7, 0.4);
  for (int i = 0; i < 100000; ++i) {
    p = (i % 2 == 0) ? geodesic_flow(p, small(rng))
                     : horocycle_flow(p, small(rng));
    if (i % 512 == 0) p = reduce(p).reduced;
  }
  double det = p.a * p.d - p.b * p.c;
  CHECK(std::abs(det - 1.0) <= 1e-6);
}

TEST_CASE("residue classes of the transversal are distinct and complete") {
  for (int c = 0; c < kGamma2CosetCount; ++c)
    CHECK(coset_mod2(gamma2_coset_rep(c)) == c);
  CHECK(coset_mod2(gamma2_gen_a()) == 0);
  CHECK(coset_mod2(gamma2_gen_b()) == 0);
  IntMat t;
  t.b = 5;
  CHECK(coset_mod2(t) == 1);
}

TEST_CASE("splitting strips the transversal factor exactly") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    IntMat w;
    int len = int(rng() % 12);
    for (int i = 0; i < len; ++i) {
      switch (rng() % 4) {
        case 0: w = imat_mul(w, gamma2_gen_a()); break;
        case 1: w = imat_mul(w, gamma2_gen_b()); break;
        case 2: {
          IntMat t;
          t.b = 1;
          w = imat_mul(w, t);
          break;
        }
        default: {
          IntMat s;
          s.a = 0;
          s.b = -1;
          s.c = 1;
          s.d = 0;
          w = imat_mul(w, s);
          break;
        }
      }
    }
    Gamma2Split sp = split_gamma2(w);
    CHECK(coset_mod2(sp.gamma) == 0);
    CHECK(imat_eq(imat_mul(sp.gamma, gamma2_coset_rep(sp.coset)), w));
  }
}

TEST_CASE("peeling recovers free words over the two parabolic generators") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    int len = 1 + int(rng() % 12);
    std::vector<Gamma2Letter> word;
    IntMat g;
    int gen = int(rng() % 2);
    for (int i = 0; i < len; ++i) {
      int64_t e = 1 + int64_t(rng() % 2);
      if (rng() % 2) e = -e;
      word.push_back({gen, e});
      IntMat base = gen == 0 ? gamma2_gen_a() : gamma2_gen_b();
      IntMat factor = e >= 0 ? base : imat_inverse(base);
      for (int64_t k = 0; k < (e >= 0 ? e : -e); ++k) g = imat_mul(g, factor);
      gen = 1 - gen;
    }
    std::vector<Gamma2Letter> peeled = peel_gamma2(g);
    REQUIRE(peeled.size() == word.size());
    for (size_t i = 0; i < word.size(); ++i) {
      CHECK(peeled[i].gen == word[i].gen);
      CHECK(peeled[i].exp == word[i].exp);
    }
  }
  CHECK(peel_gamma2(IntMat{}).empty());
}

TEST_CASE("long alternating words with unit exponents peel back") {
  IntMat g;
  std::vector<Gamma2Letter> word;
  for (int i = 0; i < 25; ++i) {
    int gen = i % 2;
    int64_t e = (i % 3 == 2) ? -1 : 1;
    word.push_back({gen, e});
    IntMat base = gen == 0 ? gamma2_gen_a() : gamma2_gen_b();
    g = imat_mul(g, e > 0 ? base : imat_inverse(base));
  }
  std::vector<Gamma2Letter> peeled = peel_gamma2(g);
  REQUIRE(peeled.size() == word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    CHECK(peeled[i].gen == word[i].gen);
    CHECK(peeled[i].exp == word[i].exp);
  }
}

TEST_CASE("matrices outside the kernel are rejected") {
  IntMat t;
  t.b = 1;
  CHECK_THROWS_AS(peel_gamma2(t), InvariantError);
  IntMat bad;
  bad.b = 1;
  bad.c = 1;
  bad.d = 2;  // det 1, but odd off-diagonal residues
  CHECK(coset_mod2(bad) != 0);
}

TEST_CASE("syllables translate into the sphere group with the sign flip") {
  std::vector<Gamma2Letter> letters = {{0, 2}, {1, -3}, {0, -1}};
  Word w = gamma2_letters_to_word(letters);
  Word want = Word::generator(0, 2) * Word::generator(1, 3) *
              Word::generator(0, -1);
  CHECK(w == want);
}
