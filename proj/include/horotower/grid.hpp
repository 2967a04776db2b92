#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "horotower/solenoid.hpp"
#include "horotower/tower.hpp"

namespace horotower {

// Liouville mass dx dy/y^2 of a rectangle intersected with the fundamental
// domain strip |x| <= 1/2, x^2 + y^2 >= 1.  Closed form: 1/y antiderivative
// on plain columns, asin on columns whose floor is the unit arc.
double domain_rect_mass(double x0, double x1, double y0, double y1);

// Product decomposition of the truncated fundamental domain times angle
// times one tower fiber.  Each of the n_re columns gets its own stack of
// n_im height intervals starting at the unit arc under the column's outer
// edge, so every cell carries positive reference mass.  Masses are the
// normalized Liouville measure, split uniformly over angle bins and fiber.
struct CellGrid {
  double y_max = 0;
  size_t n_re = 0, n_im = 0, n_theta = 0;
  size_t fiber_size = 1;
  size_t level = 0;
  std::vector<double> col_bottom;
  std::vector<double> mass;
  double total_unnormalized = 0;

  size_t cell_count() const { return n_re * n_im * n_theta * fiber_size; }
  size_t flat_index(size_t col, size_t row, size_t tbin, uint32_t addr) const;
  // Cell holding the given reduced coordinates, or -1 above y_max.
  ptrdiff_t locate(double re, double im, double theta, uint32_t addr) const;
};

CellGrid build_grid(double y_max, size_t n_re, size_t n_im, size_t n_theta,
                    const Tower& tower, size_t level);

// Sample-vs-reference summary.  Empirical frequencies are conditioned on
// the samples landing inside the truncated window, matching the reference
// normalization.  discrepancy scans single cells at or above the floor;
// marginal_discrepancy scans (re,im) column-row aggregates, the meaningful
// scale when single-cell masses all sit below the floor.
struct DensityReport {
  double coverage = 0;
  double max_missed_mass = 0;
  double discrepancy = 0;
  double marginal_discrepancy = 0;
};

DensityReport epsilon_density_report(const std::vector<SolenoidPoint>& samples,
                                     const CellGrid& grid,
                                     double mass_floor = 1e-3);

// Same summary from per-cell hit counts; `inside` is their sum.  Streaming
// callers count samples themselves and skip materializing them.
DensityReport report_from_counts(const std::vector<uint64_t>& counts,
                                 uint64_t inside, const CellGrid& grid,
                                 double mass_floor = 1e-3);

}  // namespace horotower
