#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <random>
#include <stdexcept>

#include "horotower/builders.hpp"
#include "horotower/grid.hpp"
#include "horotower/presentation.hpp"

using namespace horotower;

namespace {

// Column integrand of the domain mass, for the numerical oracle.
double column_height(double x, double y0, double y1) {
  if (std::abs(x) > 0.5) return 0;
  double floor = std::max(y0, std::sqrt(1 - x * x));
  if (floor >= y1) return 0;
  return 1 / floor - 1 / y1;
}

double simpson_mass(double x0, double x1, double y0, double y1) {
  x0 = std::max(x0, -0.5);
  x1 = std::min(x1, 0.5);
  if (x0 >= x1) return 0;
  const int n = 20000;  // even
  double h = (x1 - x0) / n;
  double acc = column_height(x0, y0, y1) + column_height(x1, y0, y1);
  for (int i = 1; i < n; ++i) {
    acc += column_height(x0 + i * h, y0, y1) * (i % 2 ? 4 : 2);
  }
  return acc * h / 3;
}

Tower base_only_tower() {
  auto base = std::make_shared<Presentation>(surface_group(0, 3));
  return tower_with_base(base, "bare");
}

SolenoidPoint synthetic_point(double re, double im, double theta,
                              std::vector<uint32_t> addr) {
  SolenoidPoint sp;
  sp.base = point_from_coords(re, im, theta);
  sp.address = std::move(addr);
  return sp;
}

}  // namespace

TEST_CASE("plain rectangle masses follow the reciprocal rule") {
  double left = domain_rect_mass(0.3, 0.5, 1.0, 1.5);
  CHECK(left == doctest::Approx(0.2 / 3).epsilon(1e-14));
  // 1.5 is the harmonic mean of 1 and 3: the split halves the mass.
  double right = domain_rect_mass(0.3, 0.5, 1.5, 3.0);
  CHECK(left == doctest::Approx(right).epsilon(1e-14));
  CHECK(domain_rect_mass(-0.5, -0.3, 1.0, 1.5) ==
        doctest::Approx(left).epsilon(1e-14));
  // Outside the strip nothing counts.
  CHECK(domain_rect_mass(0.5, 2.0, 1.0, 2.0) == 0);
}

TEST_CASE("rectangles under the arc carry no mass") {
  CHECK(domain_rect_mass(0.0, 0.1, 0.9, 0.99) == 0);
  CHECK(domain_rect_mass(-0.05, 0.05, 0.5, 0.8) == 0);
}

TEST_CASE("arc-crossing masses match numerical integration") {
  CHECK(domain_rect_mass(0.2, 0.5, 0.9, 1.1) ==
        doctest::Approx(simpson_mass(0.2, 0.5, 0.9, 1.1)).epsilon(1e-10));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ux(-0.6, 0.5);
  std::uniform_real_distribution<double> uw(0.01, 0.6);
  std::uniform_real_distribution<double> uy(0.5, 1.4);
  std::uniform_real_distribution<double> uh(0.01, 1.6);
  for (int i = 0; i < 40; ++i) {
    double x0 = ux(rng), x1 = x0 + uw(rng);
    double y0 = uy(rng), y1 = y0 + uh(rng);
    double closed = domain_rect_mass(x0, x1, y0, y1);
    double numeric = simpson_mass(x0, x1, y0, y1);
    CHECK(std::abs(closed - numeric) <= 1e-10);
  }
}

TEST_CASE("grid masses normalize and refine consistently") {
  Tower t = build_gamma2_class2(2);
  CellGrid g = build_grid(3, 24, 24, 12, t, 1);
  CHECK(g.cell_count() == 24 * 24 * 12 * 2);
  CHECK(g.fiber_size == 2);
  double sum = 0;
  double least = 1;
  for (double m : g.mass) {
    CHECK(m > 0);
    sum += m;
    least = std::min(least, m);
  }
  CHECK(sum == doctest::Approx(1).epsilon(1e-12));
  CHECK(least > 1e-9);
  CHECK(g.total_unnormalized ==
        doctest::Approx(M_PI / 3 - 1.0 / 3).epsilon(1e-9));
  CHECK(g.col_bottom[0] == doctest::Approx(std::sqrt(3) / 2).epsilon(1e-15));

  SUBCASE("height refinement preserves column stacks") {
    CellGrid fine = build_grid(3, 24, 48, 12, t, 1);
    for (size_t col = 0; col < 24; ++col) {
      double coarse_sum = 0, fine_sum = 0;
      for (size_t row = 0; row < 24; ++row)
        coarse_sum += g.mass[g.flat_index(col, row, 0, 0)];
      for (size_t row = 0; row < 48; ++row)
        fine_sum += fine.mass[fine.flat_index(col, row, 0, 0)];
      CHECK(coarse_sum == doctest::Approx(fine_sum).epsilon(1e-12));
    }
  }

  SUBCASE("width refinement splits columns additively") {
    CellGrid fine = build_grid(3, 48, 24, 12, t, 1);
    for (size_t col = 0; col < 24; ++col) {
      double coarse_sum = 0, fine_sum = 0;
      for (size_t row = 0; row < 24; ++row) {
        coarse_sum += g.mass[g.flat_index(col, row, 0, 0)];
        fine_sum += fine.mass[fine.flat_index(2 * col, row, 0, 0)] +
                    fine.mass[fine.flat_index(2 * col + 1, row, 0, 0)];
      }
      CHECK(coarse_sum == doctest::Approx(fine_sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("single cell grid carries unit mass") {
  Tower t = base_only_tower();
  CellGrid g = build_grid(3, 1, 1, 1, t, 0);
  REQUIRE(g.mass.size() == 1);
  CHECK(g.mass[0] == 1.0);
  CHECK(g.fiber_size == 1);
}

TEST_CASE("locate places boundary points into edge cells") {
  Tower t = build_gamma2_class2(2);
  CellGrid g = build_grid(3, 24, 24, 12, t, 1);
  // The corner point i sits in the column right of zero, bottom row, with
  // upward tangent in bin 9 of 12.
  CHECK(g.locate(0, 1, M_PI / 2, 1) == ptrdiff_t(g.flat_index(12, 0, 9, 1)));
  CHECK(g.locate(0, 3.2, 0, 0) == -1);
  // A point a hair under the column bottom clamps into row zero.
  double b = g.col_bottom[23];
  CHECK(g.locate(0.49, b - 1e-9, 0, 0) ==
        ptrdiff_t(g.flat_index(23, 0, 6, 0)));
  CHECK_THROWS_AS(g.locate(0.49, b - 1e-3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.locate(0, 1, 0, 2), std::invalid_argument);
}

TEST_CASE("report counts hits and misses deterministically") {
  Tower t = base_only_tower();
  CellGrid g = build_grid(3, 2, 2, 2, t, 0);
  REQUIRE(g.cell_count() == 8);
  std::vector<SolenoidPoint> samples = {
      synthetic_point(-0.3, 1.2, 0.3, {0}),
      synthetic_point(0.3, 2.5, 0.3, {0}),
      synthetic_point(0.3, 2.5, -2.0, {0}),
      synthetic_point(0.3, 2.6, -2.0, {0}),
  };
  DensityReport rep = epsilon_density_report(samples, g);
  CHECK(rep.coverage == doctest::Approx(3.0 / 8).epsilon(1e-12));

  std::vector<bool> hit(g.cell_count(), false);
  for (const SolenoidPoint& sp : samples) {
    std::complex<double> z = base_point(sp.base);
    hit[size_t(g.locate(z.real(), z.imag(), tangent_angle(sp.base),
                        sp.address[0]))] = true;
  }
  double missed = 0;
  for (size_t i = 0; i < hit.size(); ++i) {
    if (!hit[i]) missed = std::max(missed, g.mass[i]);
  }
  CHECK(rep.max_missed_mass == missed);

  SUBCASE("sample order does not matter") {
    std::vector<SolenoidPoint> shuffled = {samples[2], samples[0], samples[3],
                                           samples[1]};
    DensityReport rep2 = epsilon_density_report(shuffled, g);
    CHECK(rep2.coverage == rep.coverage);
    CHECK(rep2.max_missed_mass == rep.max_missed_mass);
    CHECK(rep2.discrepancy == rep.discrepancy);
    CHECK(rep2.marginal_discrepancy == rep.marginal_discrepancy);
  }

  SUBCASE("no samples leaves everything missed") {
    DensityReport empty = epsilon_density_report({}, g);
    CHECK(empty.coverage == 0);
    CHECK(empty.max_missed_mass ==
          *std::max_element(g.mass.begin(), g.mass.end()));
    CHECK(empty.discrepancy == 1);
    CHECK(empty.marginal_discrepancy == 1);
  }

  SUBCASE("an unreachable floor reports zero discrepancy") {
    DensityReport rep3 = epsilon_density_report(samples, g, 10.0);
    CHECK(rep3.discrepancy == 0);
    CHECK(rep3.marginal_discrepancy == 0);
  }
}

TEST_CASE("horocycle sweep recount matches the report") {
  Tower t = build_gamma2_class2(2);
  std::vector<SolenoidPoint> samples =
      closed_horocycle_samples(std::exp(-8.0), 200000, &t);
  CellGrid g = build_grid(3, 8, 8, 6, t, 1);
  DensityReport rep = epsilon_density_report(samples, g);

  std::vector<uint64_t> counts(g.cell_count(), 0);
  uint64_t inside = 0;
  for (const SolenoidPoint& sp : samples) {
    std::complex<double> z = base_point(sp.base);
    ptrdiff_t idx =
        g.locate(z.real(), z.imag(), tangent_angle(sp.base), sp.address[1]);
    if (idx < 0) continue;
    ++counts[size_t(idx)];
    ++inside;
  }
  size_t hit = 0;
  double missed = 0, disc = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      ++hit;
    } else {
      missed = std::max(missed, g.mass[i]);
    }
    if (g.mass[i] >= 1e-3) {
      double emp = double(counts[i]) / double(inside);
      disc = std::max(disc, std::abs(emp - g.mass[i]) / g.mass[i]);
    }
  }
  CHECK(rep.coverage == double(hit) / double(g.cell_count()));
  CHECK(rep.max_missed_mass == missed);
  CHECK(rep.discrepancy == disc);
  CHECK(rep.coverage >= 0.95);
  CHECK(rep.marginal_discrepancy <= 0.2);
}

TEST_CASE("grid rejects malformed inputs") {
  Tower t = base_only_tower();
  CHECK_THROWS_AS(build_grid(0.9, 4, 4, 4, t, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(3, 0, 4, 4, t, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(3, 4, 4, 4, t, 1), std::invalid_argument);
  CellGrid g = build_grid(3, 4, 4, 4, t, 0);
  CHECK_THROWS_AS(epsilon_density_report({}, g, 0), std::invalid_argument);
  std::vector<SolenoidPoint> shallow = {synthetic_point(0, 2, 0, {})};
  CHECK_THROWS_AS(epsilon_density_report(shallow, g), std::invalid_argument);
  std::vector<SolenoidPoint> unreduced = {synthetic_point(0, 0.5, 0, {0})};
  CHECK_THROWS_AS(epsilon_density_report(unreduced, g), std::invalid_argument);
}
