#include "horotower/metric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "horotower/common.hpp"
#include "horotower/gamma2.hpp"

namespace horotower {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

CompactPoint regular_point(SolenoidPoint p) {
  CompactPoint c;
  c.point = std::move(p);
  return c;
}

CompactPoint end_point(int cusp, std::vector<uint32_t> ray) {
  CompactPoint c;
  c.is_end = true;
  c.cusp = cusp;
  c.ray = std::move(ray);
  return c;
}

CompactifiedMetric::CompactifiedMetric(const Tower* tower) {
  if (tower != nullptr) {
    tower->validate();
    check_arg(tower->base->genus == 0 && tower->base->cusp_count == 3,
              "compactified metric sits over the three-cusp sphere");
    depth_ = tower->depth();
    has_tower_ = true;
  }
  component_.resize(3);
  cycle_first_.resize(3);
  for (int j = 0; j < 3; ++j) {
    component_[j].resize(depth_ + 1);
    cycle_first_[j].resize(depth_ + 1);
    for (size_t n = 0; n <= depth_; ++n) {
      if (tower == nullptr) {
        component_[j][n] = {0};
        cycle_first_[j][n] = {0};
        continue;
      }
      const FiniteCover& cover = tower->levels[n].cover;
      std::vector<std::vector<uint32_t>> cycles = cover.cusp_fiber(j);
      component_[j][n].assign(cover.degree(), 0);
      cycle_first_[j][n].resize(cycles.size());
      for (size_t k = 0; k < cycles.size(); ++k) {
        cycle_first_[j][n][k] = cycles[k][0];
        for (uint32_t f : cycles[k]) component_[j][n][f] = uint32_t(k);
      }
    }
  }
  for (size_t n = 1; n <= depth_; ++n) q_.push_back(tower->levels[n].q);
  level_weight_.resize(depth_ + 1);
  for (size_t n = 0; n <= depth_; ++n)
    level_weight_[n] = n == depth_ ? std::ldexp(1.0, -int(n) - 1)
                                   : std::ldexp(1.0, -int(n) - 2);
}

CompactifiedMetric::Chain CompactifiedMetric::chain_of(
    const CompactPoint& p) const {
  Chain c;
  if (p.is_end) {
    check_arg(p.cusp >= 0 && p.cusp < 3, "end cusp out of range");
    check_arg(p.ray.size() == depth_ + 1 && p.ray[0] == 0,
              "end ray does not span the tower");
    for (size_t n = 0; n <= depth_; ++n)
      check_arg(p.ray[n] < cycle_first_[size_t(p.cusp)][n].size(),
                "end ray names a missing component");
    for (size_t n = 1; n <= depth_; ++n) {
      uint32_t top = cycle_first_[size_t(p.cusp)][n][p.ray[n]];
      check_arg(component_[size_t(p.cusp)][n - 1][q_[n - 1][top]] ==
                    p.ray[n - 1],
                "end ray is not a descending chain");
    }
    c.cusp = p.cusp;
    c.weight = 1;
    c.comps = p.ray;
    return c;
  }
  const SolenoidPoint& sp = p.point;
  check_arg(sp.address.size() == (has_tower_ ? depth_ + 1 : 0),
            "point address does not match the tower depth");
  check_arg(sp.coset >= 0 && sp.coset < kGamma2CosetCount,
            "coset index out of range");
  std::complex<double> z = base_point(sp.base);
  check_arg(std::abs(z.real()) <= 0.5 + 1e-9 && std::norm(z) >= 1 - 2e-9,
            "points must be reduced");
  c.cusp = gamma2_cusp_of_coset(sp.coset);
  c.weight = clamp01(z.imag() - 1);
  c.comps.resize(depth_ + 1);
  for (size_t n = 0; n <= depth_; ++n)
    c.comps[n] =
        component_[size_t(c.cusp)][n][has_tower_ ? sp.address[n] : 0];
  return c;
}

double CompactifiedMetric::distance(const CompactPoint& x,
                                    const CompactPoint& y) const {
  Chain cx = chain_of(x);
  Chain cy = chain_of(y);

  // Base and coset block, squared Euclidean distance.
  double v[4] = {0, 0, 0, 0};
  double u[6] = {0, 0, 0, 0, 0, 0};
  double wx = 0, wy = 0;
  auto add_base = [&](const CompactPoint& p, double sign, double* w) {
    if (p.is_end) return;
    std::complex<double> z = base_point(p.point.base);
    *w = clamp01(2 - z.imag());
    double eta = std::min(1.0, 1 / z.imag());
    double theta = tangent_angle(p.point.base);
    v[0] += sign * z.real() * *w;
    v[1] += sign * *w * std::cos(theta);
    v[2] += sign * *w * std::sin(theta);
    v[3] += sign * eta;
    u[size_t(p.point.coset)] += sign * *w;
  };
  add_base(x, 1, &wx);
  add_base(y, -1, &wy);
  double sq = 0;
  for (double t : v) sq += t * t;
  for (double t : u) sq += t * t;
  double dist = std::sqrt(sq);

  // Address block: indicators weighted by the thick-part weight.
  for (size_t n = 1; n <= depth_; ++n) {
    double ax = x.is_end ? 0 : wx;
    double ay = y.is_end ? 0 : wy;
    bool same = !x.is_end && !y.is_end &&
                x.point.address[n] == y.point.address[n];
    dist += level_weight_[n] * (same ? std::abs(ax - ay) : ax + ay);
  }

  // Ray block: chains over distinct cusps share no coordinates.
  for (size_t n = 0; n <= depth_; ++n) {
    bool same = cx.cusp == cy.cusp && cx.comps[n] == cy.comps[n];
    dist += level_weight_[n] * (same ? std::abs(cx.weight - cy.weight)
                                     : cx.weight + cy.weight);
  }
  return dist;
}

double hausdorff_distance(const std::vector<CompactPoint>& a,
                          const std::vector<CompactPoint>& b,
                          const CompactifiedMetric& metric) {
  check_arg(!a.empty() && !b.empty(), "hausdorff needs non-empty sets");
  std::vector<double> pair(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      pair[i * b.size() + k] = metric.distance(a[i], b[k]);
  double h = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double best = pair[i * b.size()];
    for (size_t k = 1; k < b.size(); ++k)
      best = std::min(best, pair[i * b.size() + k]);
    h = std::max(h, best);
  }
  for (size_t k = 0; k < b.size(); ++k) {
    double best = pair[k];
    for (size_t i = 1; i < a.size(); ++i)
      best = std::min(best, pair[i * b.size() + k]);
    h = std::max(h, best);
  }
  return h;
}

}  // namespace horotower
