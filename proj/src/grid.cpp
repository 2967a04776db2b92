#include "horotower/grid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "horotower/common.hpp"

namespace horotower {

namespace {

// Mass over [a,b] x [y0,y1] with 0 <= a <= b <= 1/2, floor at the arc.
double positive_piece(double a, double b, double y0, double y1) {
  if (b - a <= 0) return 0;
  if (y0 >= 1) return (b - a) * (1 / y0 - 1 / y1);
  // Columns left of xe are entirely under the arc, columns right of xp
  // have a flat floor at y0, between them the floor is the arc itself.
  double xe = a;
  if (y1 < 1) xe = std::clamp(std::sqrt(1 - y1 * y1), a, b);
  double xp = std::clamp(std::sqrt(1 - y0 * y0), a, b);
  double arc_part = std::asin(xp) - std::asin(xe) - (xp - xe) / y1;
  double flat_part = (b - xp) * (1 / y0 - 1 / y1);
  return arc_part + flat_part;
}

}  // namespace

double domain_rect_mass(double x0, double x1, double y0, double y1) {
  check_arg(x0 < x1, "empty x interval");
  check_arg(0 < y0 && y0 < y1, "heights must satisfy 0 < y0 < y1");
  x0 = std::max(x0, -0.5);
  x1 = std::min(x1, 0.5);
  if (x0 >= x1) return 0;
  double total = 0;
  if (x1 > 0) total += positive_piece(std::max(x0, 0.0), x1, y0, y1);
  if (x0 < 0) total += positive_piece(std::max(-x1, 0.0), -x0, y0, y1);
  return total;
}

size_t CellGrid::flat_index(size_t col, size_t row, size_t tbin,
                            uint32_t addr) const {
  return ((col * n_im + row) * n_theta + tbin) * fiber_size + addr;
}

ptrdiff_t CellGrid::locate(double re, double im, double theta,
                           uint32_t addr) const {
  check_arg(addr < fiber_size, "fiber index out of range");
  if (im > y_max) return -1;
  double colf = (re + 0.5) * double(n_re);
  size_t col = size_t(std::clamp(colf, 0.0, double(n_re) - 0.5));
  double b = col_bottom[col];
  check_arg(im >= b - 1e-6, "point lies below the fundamental domain");
  double rowf = (im - b) / (y_max - b) * double(n_im);
  size_t row = size_t(std::clamp(rowf, 0.0, double(n_im) - 0.5));
  double tf = (theta + M_PI) / (2 * M_PI) * double(n_theta);
  size_t tbin = size_t(std::clamp(tf, 0.0, double(n_theta) - 0.5));
  return ptrdiff_t(flat_index(col, row, tbin, addr));
}

CellGrid build_grid(double y_max, size_t n_re, size_t n_im, size_t n_theta,
                    const Tower& tower, size_t level) {
  check_arg(y_max > 1, "window must rise above the arc");
  check_arg(n_re >= 1 && n_im >= 1 && n_theta >= 1, "degenerate bin counts");
  tower.validate();
  check_arg(level < tower.levels.size(), "level exceeds the tower");
  CellGrid g;
  g.y_max = y_max;
  g.n_re = n_re;
  g.n_im = n_im;
  g.n_theta = n_theta;
  g.level = level;
  g.fiber_size = tower.levels[level].cover.degree();
  g.col_bottom.resize(n_re);
  g.mass.assign(g.cell_count(), 0);
  for (size_t col = 0; col < n_re; ++col) {
    double x0 = -0.5 + double(col) / double(n_re);
    double x1 = col + 1 == n_re ? 0.5 : -0.5 + double(col + 1) / double(n_re);
    double outer = std::max(std::abs(x0), std::abs(x1));
    double b = std::sqrt(1 - outer * outer);
    g.col_bottom[col] = b;
    double h = (y_max - b) / double(n_im);
    for (size_t row = 0; row < n_im; ++row) {
      double ylo = b + double(row) * h;
      double yhi = row + 1 == n_im ? y_max : b + double(row + 1) * h;
      double m = domain_rect_mass(x0, x1, ylo, yhi);
      check_invariant(m >= 0, "cell received negative mass");
      g.total_unnormalized += m;
      double per = m / double(n_theta) / double(g.fiber_size);
      for (size_t t = 0; t < n_theta; ++t) {
        for (uint32_t f = 0; f < g.fiber_size; ++f) {
          g.mass[g.flat_index(col, row, t, f)] = per;
        }
      }
    }
  }
  check_invariant(g.total_unnormalized > 0, "window carries no mass");
  for (double& m : g.mass) m /= g.total_unnormalized;
  return g;
}

DensityReport epsilon_density_report(const std::vector<SolenoidPoint>& samples,
                                     const CellGrid& grid, double mass_floor) {
  check_arg(mass_floor > 0, "mass floor must be positive");
  std::vector<uint64_t> counts(grid.cell_count(), 0);
  uint64_t inside = 0;
  for (const SolenoidPoint& sp : samples) {
    check_arg(sp.address.size() > grid.level,
              "sample address too shallow for the grid level");
    std::complex<double> z = base_point(sp.base);
    check_arg(std::abs(z.real()) <= 0.5 + 1e-9 && std::norm(z) >= 1 - 2e-9,
              "samples must be reduced");
    ptrdiff_t idx = grid.locate(z.real(), z.imag(), tangent_angle(sp.base),
                                sp.address[grid.level]);
    if (idx < 0) continue;
    ++counts[size_t(idx)];
    ++inside;
  }
  return report_from_counts(counts, inside, grid, mass_floor);
}

DensityReport report_from_counts(const std::vector<uint64_t>& counts,
                                 uint64_t inside, const CellGrid& grid,
                                 double mass_floor) {
  check_arg(mass_floor > 0, "mass floor must be positive");
  check_arg(counts.size() == grid.cell_count(),
            "count vector does not match the grid");
  DensityReport rep;
  size_t positive = 0, hit = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (grid.mass[i] <= 0) continue;
    ++positive;
    if (counts[i] > 0) {
      ++hit;
    } else {
      rep.max_missed_mass = std::max(rep.max_missed_mass, grid.mass[i]);
    }
    if (grid.mass[i] >= mass_floor) {
      double emp = inside ? double(counts[i]) / double(inside) : 0;
      rep.discrepancy = std::max(rep.discrepancy,
                                 std::abs(emp - grid.mass[i]) / grid.mass[i]);
    }
  }
  rep.coverage = positive ? double(hit) / double(positive) : 0;
  size_t per_base = grid.n_theta * grid.fiber_size;
  for (size_t base = 0; base < grid.n_re * grid.n_im; ++base) {
    double m = 0;
    uint64_t c = 0;
    for (size_t j = 0; j < per_base; ++j) {
      m += grid.mass[base * per_base + j];
      c += counts[base * per_base + j];
    }
    if (m < mass_floor) continue;
    double emp = inside ? double(c) / double(inside) : 0;
    rep.marginal_discrepancy =
        std::max(rep.marginal_discrepancy, std::abs(emp - m) / m);
  }
  return rep;
}

}  // namespace horotower
