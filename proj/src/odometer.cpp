#include "horotower/odometer.hpp"

#include <algorithm>
#include <stdexcept>

#include "horotower/common.hpp"

namespace horotower {

OdometerSystem odometer_from_cusp(const Tower& t, int base_cusp, size_t depth) {
  t.validate();
  check_arg(base_cusp >= 0 && base_cusp < t.base->cusp_count,
            "base cusp index out of range");
  check_arg(depth < t.levels.size(), "depth exceeds the tower");
  OdometerSystem sys;
  sys.cusp = base_cusp;
  for (size_t n = 0; n <= depth; ++n) {
    const FiniteCover& c = t.levels[n].cover;
    sys.sizes.push_back(c.degree());
    sys.transforms.push_back(c.peripheral_perm(base_cusp));
    sys.q.push_back(t.levels[n].q);
  }
  // The projections intertwine the return maps level by level.
  for (size_t n = 1; n < sys.sizes.size(); ++n) {
    const Perm& up = sys.transforms[n];
    const Perm& dn = sys.transforms[n - 1];
    const std::vector<uint32_t>& q = sys.q[n];
    for (uint32_t x = 0; x < sys.sizes[n]; ++x) {
      check_invariant(q[up(x)] == dn(q[x]),
                      "projection does not commute with the return map");
    }
  }
  return sys;
}

Address basepoint_address(const Tower& t, size_t depth) {
  check_arg(depth < t.levels.size(), "depth exceeds the tower");
  Address a;
  for (size_t n = 0; n <= depth; ++n)
    a.points.push_back(t.levels[n].cover.basepoint);
  return a;
}

bool is_compatible(const OdometerSystem& sys, const Address& a) {
  if (a.points.size() != sys.sizes.size()) return false;
  for (size_t n = 0; n < a.points.size(); ++n) {
    if (a.points[n] >= sys.sizes[n]) return false;
    if (n > 0 && sys.q[n][a.points[n]] != a.points[n - 1]) return false;
  }
  return true;
}

Address address_of_point(const OdometerSystem& sys, uint32_t deep_point) {
  check_arg(!sys.sizes.empty(), "empty system");
  check_arg(deep_point < sys.sizes.back(), "point out of range");
  Address a;
  a.points.assign(sys.sizes.size(), 0);
  a.points.back() = deep_point;
  for (size_t n = sys.sizes.size() - 1; n > 0; --n)
    a.points[n - 1] = sys.q[n][a.points[n]];
  return a;
}

Address step(const OdometerSystem& sys, const Address& a, int64_t n) {
  check_arg(is_compatible(sys, a), "address not compatible with the system");
  Address out;
  for (size_t lvl = 0; lvl < a.points.size(); ++lvl) {
    Perm p = perm_pow(sys.transforms[lvl], n);
    out.points.push_back(p(a.points[lvl]));
  }
  check_invariant(is_compatible(sys, out), "step broke compatibility");
  return out;
}

Address truncate_address(const Address& a, size_t depth) {
  check_arg(depth < a.points.size(), "depth exceeds the address");
  Address out;
  out.points.assign(a.points.begin(), a.points.begin() + depth + 1);
  return out;
}

bool is_minimal(const OdometerSystem& sys) {
  for (size_t n = 0; n < sys.sizes.size(); ++n)
    if (sys.transforms[n].cycles().size() != 1) return false;
  return true;
}

std::vector<OdometerComponent> minimal_decomposition(const OdometerSystem& sys,
                                                     size_t depth) {
  check_arg(depth < sys.sizes.size(), "depth exceeds the system");
  // Cycle membership tables: cycle_of[n][x] = index of the cycle of T_n
  // containing x, in canonical cycle order.
  std::vector<std::vector<std::vector<uint32_t>>> cycles;
  std::vector<std::vector<uint32_t>> cycle_of;
  for (size_t n = 0; n <= depth; ++n) {
    cycles.push_back(sys.transforms[n].cycles());
    std::vector<uint32_t> table(sys.sizes[n], 0);
    for (size_t c = 0; c < cycles[n].size(); ++c)
      for (uint32_t x : cycles[n][c]) table[x] = static_cast<uint32_t>(c);
    cycle_of.push_back(std::move(table));
  }
  std::vector<OdometerComponent> out;
  for (const std::vector<uint32_t>& deep : cycles[depth]) {
    OdometerComponent comp;
    comp.cycle_min.assign(depth + 1, 0);
    comp.cycle_len.assign(depth + 1, 0);
    uint32_t x = deep.front();
    for (size_t n = depth + 1; n-- > 0;) {
      const std::vector<uint32_t>& cyc = cycles[n][cycle_of[n][x]];
      comp.cycle_min[n] = cyc.front();
      comp.cycle_len[n] = static_cast<uint32_t>(cyc.size());
      if (n > 0) x = sys.q[n][x];
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<uint32_t> cycle_type(const OdometerSystem& sys, size_t level) {
  check_arg(level < sys.sizes.size(), "level exceeds the system");
  std::vector<uint32_t> lens;
  for (const std::vector<uint32_t>& c : sys.transforms[level].cycles())
    lens.push_back(static_cast<uint32_t>(c.size()));
  std::sort(lens.begin(), lens.end());
  return lens;
}

}  // namespace horotower
