#pragma once

#include <cstdint>
#include <vector>

#include "horotower/solenoid.hpp"
#include "horotower/tower.hpp"

namespace horotower {

// Point of the compactified solenoid: either a regular point or an ideal
// cusp end.  An end is named by its base cusp together with the descending
// chain of cusp components it threads through, one vertex of the end
// forest per level (entry 0 at the trivial level, so the ray has depth+1
// entries).
struct CompactPoint {
  bool is_end = false;
  SolenoidPoint point;        // regular points
  int cusp = 0;               // ends
  std::vector<uint32_t> ray;  // ends: component index per level
};

CompactPoint regular_point(SolenoidPoint p);
CompactPoint end_point(int cusp, std::vector<uint32_t> ray);

// Distance on the compactified solenoid, computed as a norm of embedding
// differences so symmetry and the triangle inequality hold by
// construction.  Every coordinate below is fixed by this comment; with
// reduced base z = x + iy, angle theta, coset c, address (f_0 .. f_L):
//
//   w   = clamp(2 - y, 0, 1)      thick-part weight
//   eta = min(1, 1/y)             end coordinate
//   mu  = clamp(y - 1, 0, 1)      cusp-region weight
//
//   base block, l2:  (x*w, w*cos theta, w*sin theta, eta) and w*e_c over
//     the six cosets.  Ends sit at the origin of this block.
//   address block, l1: per level n = 1..L an indicator at f_n scaled by
//     w * u_n, with u_n = 2^-(n+2) for n < L and u_L = 2^-(L+1).  The
//     weights telescope: two thick points whose addresses first differ at
//     level n are exactly 2^-n apart in this block, and ends carry zero.
//   ray block, l1: per level n = 0..L an indicator at the point's cusp
//     component over its own escape cusp (from the coset), scaled by
//     mu * u_n with the same telescoping u_n over levels 0..L.  Ends carry
//     weight 1 on their ray.  Chains over distinct cusps share no
//     coordinates, so a base-cusp mismatch alone reads as a level-0
//     difference of size 1.
//
// distance = l2 norm of the base block difference + l1 norm of the rest.
// A regular point at height y >= 2 over an end's cusp whose component
// chain matches the ray is exactly eta = 1/y away from that end.  Two
// regular points agreeing in every block are at distance zero; the metric
// resolves cells, not points.
class CompactifiedMetric {
 public:
  // Null builds the bare-base metric (depth 0, no address or chain data).
  explicit CompactifiedMetric(const Tower* tower);

  size_t depth() const { return depth_; }
  double distance(const CompactPoint& x, const CompactPoint& y) const;

 private:
  struct Chain {
    int cusp = 0;
    double weight = 0;
    std::vector<uint32_t> comps;
  };
  Chain chain_of(const CompactPoint& p) const;

  size_t depth_ = 0;
  bool has_tower_ = false;  // bare-base points carry an empty address
  // component_[j][n][f] = end-forest vertex at depth n holding fiber point
  // f of the level-n cover, for base cusp j.
  std::vector<std::vector<std::vector<uint32_t>>> component_;
  std::vector<std::vector<std::vector<uint32_t>>> cycle_first_;
  std::vector<std::vector<uint32_t>> q_;  // per level >= 1
  std::vector<double> level_weight_;      // u_n, levels 0..depth
};

// Largest distance from either set to the other, by exhaustive pairing.
// Both sets must be non-empty.
double hausdorff_distance(const std::vector<CompactPoint>& a,
                          const std::vector<CompactPoint>& b,
                          const CompactifiedMetric& metric);

}  // namespace horotower
