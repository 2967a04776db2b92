#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "horotower/grid.hpp"
#include "horotower/tower.hpp"

namespace horotower {

// One time step of the horocycle pushforward.  N points are spread
// uniformly along the closed horocycle at height y0 * e^t, offset by a
// seeded common phase, reduced, and binned against the grid.
struct PushforwardRow {
  double t = 0;
  DensityReport report;
  double min_height = 0;     // least reduced height among the samples
  uint32_t fiber_visited = 0;  // distinct sheets seen at the grid's level
  uint32_t fiber_size = 1;
};

// Runs the sweep for each time in order.  Times must be sorted descending
// so successive rows push deeper into the past.  Worker threads split the
// sample range into fixed chunks and merge order-independent tallies, so
// the rows do not depend on the thread count.
std::vector<PushforwardRow> pushforward_experiment(
    const Tower& tower, double y0, const std::vector<double>& t_list,
    size_t samples, const CellGrid& grid, uint64_t seed = 0,
    unsigned threads = 1);

// Columns: t, coverage, max_missed_mass, discrepancy, min_height.
void write_pushforward_csv(std::ostream& out,
                           const std::vector<PushforwardRow>& rows);

// Companion document with the full run configuration and per-row fields
// the CSV leaves out (marginal discrepancy, fiber visitation).
std::string pushforward_sidecar_json(const Tower& tower, const CellGrid& grid,
                                     double y0, size_t samples, uint64_t seed,
                                     const std::vector<PushforwardRow>& rows);

// Forward flow at strictly positive times: the horocycle climbs into the
// cusp, and every sample approaches the ideal end above it.
struct EscapeRow {
  double t = 0;
  double min_height = 0;
  double end_distance = 0;  // Hausdorff gap to the cusp end
};

std::vector<EscapeRow> escape_experiment(double y0,
                                         const std::vector<double>& t_list,
                                         size_t samples = 256);

// Total variation between the empirical sheet distribution of random words
// and the uniform one at the given level.  Words draw uniform letters from
// the free basis and its inverses.  Requires every proper level normal,
// where uniform is the invariant limit.
double haar_equidistribution_test(const Tower& tower, size_t level,
                                  size_t word_count, size_t word_length = 50,
                                  uint64_t seed = 0);

// Depth-one tower over the once-punctured torus whose level is the
// mod-two matrix quotient: the handles map to the order-3 and order-2
// classes generating all six, acting by left multiplication.
Tower mod2_matrix_tower();

}  // namespace horotower
