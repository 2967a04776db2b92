#include "horotower/tower.hpp"

#include <algorithm>

#include "horotower/common.hpp"
#include "horotower/rewriting.hpp"

namespace horotower {

void Tower::validate() const {
  check_arg(base != nullptr, "tower has no base surface");
  check_arg(!levels.empty(), "tower has no levels");
  check_arg(levels[0].cover.degree() == 1, "level 0 must be the trivial cover");
  check_arg(levels[0].q.empty(), "level 0 has no surjection");
  for (size_t n = 0; n < levels.size(); ++n) {
    const FiniteCover& c = levels[n].cover;
    check_arg(c.base == base, "levels must share the tower base");
    c.validate();
    if (n == 0) continue;
    const FiniteCover& prev = levels[n - 1].cover;
    const auto& q = levels[n].q;
    check_arg(q.size() == c.degree(), "surjection size mismatch");
    std::vector<bool> hit(prev.degree(), false);
    for (uint32_t x = 0; x < c.degree(); ++x) {
      check_arg(q[x] < prev.degree(), "surjection image out of range");
      hit[q[x]] = true;
    }
    check_arg(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
              "level map is not onto");
    check_arg(q[c.basepoint] == prev.basepoint,
              "level map must respect base sheets");
    for (size_t i = 0; i < c.gen_perms.size(); ++i) {
      for (uint32_t x = 0; x < c.degree(); ++x) {
        check_arg(q[c.gen_perms[i](x)] == prev.gen_perms[i](q[x]),
                  "level map does not commute with the generator actions");
      }
    }
  }
}

std::vector<uint32_t> Tower::cusp_counts(int base_cusp) const {
  std::vector<uint32_t> counts;
  for (const TowerLevel& lv : levels) {
    counts.push_back(uint32_t(lv.cover.cusp_fiber(base_cusp).size()));
  }
  for (size_t n = 1; n < counts.size(); ++n) {
    check_invariant(counts[n] >= counts[n - 1],
                    "cusp counts must not decrease along the tower");
  }
  return counts;
}

bool Tower::is_mccord() const {
  for (size_t n = 1; n < levels.size(); ++n) {
    if (!levels[n].cover.is_normal()) return false;
  }
  return true;
}

Tower tower_with_base(std::shared_ptr<const Presentation> base,
                      std::string label) {
  Tower t;
  t.base = base;
  t.label = std::move(label);
  t.levels.push_back({identity_cover(std::move(base)), {}});
  return t;
}

void extend_by_explicit(Tower& t, FiniteCover next, std::vector<uint32_t> q) {
  next.validate();
  t.levels.push_back({std::move(next), std::move(q)});
  t.validate();
}

FiniteCover composed_fiber_cover(const FiniteCover& top,
                                 const std::vector<Perm>& basis_actions,
                                 std::string label) {
  SchreierData sd = schreier_data(top.gen_perms, top.basepoint);
  check_arg(basis_actions.size() == size_t(sd.subgroup_rank()),
            "need one fiber action per stabilizer basis letter");
  check_arg(!basis_actions.empty(), "fiber action list is empty");
  uint32_t f = basis_actions[0].degree();
  for (const Perm& a : basis_actions) {
    check_arg(a.degree() == f, "fiber action degrees differ");
  }
  uint32_t d = top.degree();
  FiniteCover next;
  next.base = top.base;
  next.basepoint = top.basepoint * f;
  next.label = std::move(label);
  for (size_t i = 0; i < top.gen_perms.size(); ++i) {
    std::vector<uint32_t> img(size_t(d) * f);
    for (uint32_t p = 0; p < d; ++p) {
      uint32_t q = top.gen_perms[i](p);
      int32_t e = sd.edge_basis[p][i];
      for (uint32_t fib = 0; fib < f; ++fib) {
        uint32_t nf = e == 0 ? fib : basis_actions[size_t(e - 1)](fib);
        img[size_t(p) * f + fib] = q * f + nf;
      }
    }
    next.gen_perms.push_back(Perm::unchecked(std::move(img)));
  }
  return next;
}

void extend_by_fiber_action(Tower& t, const std::vector<Perm>& basis_actions,
                            std::string label) {
  const FiniteCover& top = t.levels.back().cover;
  FiniteCover next =
      composed_fiber_cover(top, basis_actions, std::move(label));
  uint32_t f = basis_actions[0].degree();
  std::vector<uint32_t> q(next.degree());
  for (uint32_t x = 0; x < next.degree(); ++x) q[x] = x / f;
  extend_by_explicit(t, std::move(next), std::move(q));
}

std::string TrichotomyReport::str() const {
  std::string cs = "c=(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) cs += ",";
    cs += std::to_string(counts[i]);
  }
  cs += ")";
  switch (kind) {
    case TowerClass::kSingle:
      return "Class1, " + cs;
    case TowerClass::kStabilized:
      return "Class2(" + std::to_string(limit_count) + "), stabilized at level " +
             std::to_string(stabilized_at) + ", " + cs;
    case TowerClass::kGrowing:
      return "Class3-so-far, " + cs;
  }
  return cs;
}

TrichotomyReport classify_trichotomy(const Tower& t, int base_cusp) {
  check_arg(t.depth() >= 2, "classification needs at least two levels");
  TrichotomyReport r;
  r.counts = t.cusp_counts(base_cusp);
  uint32_t top = r.counts.back();
  size_t first = 0;
  while (r.counts[first] != top) ++first;
  r.limit_count = top;
  r.stabilized_at = first;
  if (top == 1) {
    r.kind = TowerClass::kSingle;
  } else if (first < r.counts.size() - 1) {
    r.kind = TowerClass::kStabilized;
  } else {
    r.kind = TowerClass::kGrowing;
  }
  return r;
}

}  // namespace horotower
