#pragma once

#include <cstdint>
#include <vector>

#include "horotower/perm.hpp"
#include "horotower/tower.hpp"

namespace horotower {

// Inverse system attached to one base cusp of a tower: level n carries all
// sheets of level n, the return map T_n (the peripheral action), and the
// projection q_n to level n-1.  The projections commute with the return
// maps.
struct OdometerSystem {
  int cusp = 0;
  std::vector<uint32_t> sizes;
  std::vector<Perm> transforms;
  std::vector<std::vector<uint32_t>> q;  // q[n] : level n -> level n-1; q[0] empty
};

// Truncation at `depth`: levels 0..depth of the tower are used.
OdometerSystem odometer_from_cusp(const Tower& t, int base_cusp, size_t depth);

// Compatible choice of one point per level.
struct Address {
  std::vector<uint32_t> points;

  bool operator==(const Address& o) const { return points == o.points; }
  bool operator!=(const Address& o) const { return !(*this == o); }
};

Address basepoint_address(const Tower& t, size_t depth);
bool is_compatible(const OdometerSystem& sys, const Address& a);
// Address through a chosen point at the deepest level, projected downward.
Address address_of_point(const OdometerSystem& sys, uint32_t deep_point);
// Apply the return map n times (n may be negative) at every level.
Address step(const OdometerSystem& sys, const Address& a, int64_t n = 1);
Address truncate_address(const Address& a, size_t depth);

// Every return map is a single cycle.
bool is_minimal(const OdometerSystem& sys);

// One minimal component of the depth-L approximation: a cycle of T_L
// together with its projections down the levels.
struct OdometerComponent {
  std::vector<uint32_t> cycle_min;  // least point of the projected cycle
  std::vector<uint32_t> cycle_len;  // its length, per level 0..L
};

// Components in canonical order (by their deepest least point).
std::vector<OdometerComponent> minimal_decomposition(const OdometerSystem& sys,
                                                     size_t depth);

// Cycle lengths of T_level sorted ascending.
std::vector<uint32_t> cycle_type(const OdometerSystem& sys, size_t level);

}  // namespace horotower
