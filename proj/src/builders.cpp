#include "horotower/builders.hpp"

#include <algorithm>
#include <random>

#include "horotower/common.hpp"
#include "horotower/rewriting.hpp"

namespace horotower {

namespace {

std::vector<uint32_t> mod_surjection(uint32_t big, uint32_t small) {
  std::vector<uint32_t> q(big);
  for (uint32_t x = 0; x < big; ++x) q[x] = x % small;
  return q;
}

// All permutations of degree d sorted by image table.
std::vector<Perm> all_perms(uint32_t d) {
  std::vector<uint32_t> img(d);
  for (uint32_t i = 0; i < d; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Left multiplication by the rotation r on the dihedral group of order 2k,
// elements s^eps r^j indexed eps*k + j:  r * s^eps r^j = s^eps r^(j +- 1).
Perm dihedral_left_r(uint32_t k) {
  std::vector<uint32_t> img(2 * k);
  for (uint32_t j = 0; j < k; ++j) {
    img[j] = (j + 1) % k;
    img[k + j] = k + (j + k - 1) % k;
  }
  return Perm::unchecked(std::move(img));
}

// Left multiplication by the reflection s:  s * s^eps r^j = s^(1-eps) r^j.
Perm dihedral_left_s(uint32_t k) {
  std::vector<uint32_t> img(2 * k);
  for (uint32_t j = 0; j < k; ++j) {
    img[j] = k + j;
    img[k + j] = j;
  }
  return Perm::unchecked(std::move(img));
}

// Quotient of dihedral point indices from order 2k to order 2k', k' | k.
std::vector<uint32_t> dihedral_surjection(uint32_t k, uint32_t kp) {
  std::vector<uint32_t> q(2 * k);
  for (uint32_t j = 0; j < k; ++j) {
    q[j] = j % kp;
    q[k + j] = kp + j % kp;
  }
  return q;
}

uint32_t pow_u32(uint32_t b, int e) {
  uint64_t acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= b;
    check_arg(acc <= (1u << 26), "tower degree too large");
  }
  return uint32_t(acc);
}

}  // namespace

Tower build_class1(int depth) {
  check_arg(depth >= 1 && depth <= 14, "depth must be between 1 and 14");
  auto base = std::make_shared<const Presentation>(surface_group(1, 2));
  Tower t = tower_with_base(base, "class1");
  for (int n = 1; n <= depth; ++n) {
    uint32_t m = 1u << n;
    auto rho = solve_peripheral_targets(*base, {1, -1}, m);
    check_invariant(rho.has_value(), "balanced targets must be solvable");
    FiniteCover c = cover_from_assignment(
        base, *rho, "class1 level " + std::to_string(n));
    extend_by_explicit(t, std::move(c), mod_surjection(m, m / 2 ? m / 2 : 1));
  }
  return t;
}

Tower build_class1m(int m, int depth) {
  check_arg(m >= 3 && m <= 12, "cusp count must be between 3 and 12");
  check_arg(depth >= 1 && depth <= 10, "depth must be between 1 and 10");
  auto base = std::make_shared<const Presentation>(surface_group(0, m));
  Tower t = tower_with_base(base, "class1m");
  for (int n = 1; n <= depth; ++n) {
    uint32_t mod = pow_u32(uint32_t(m), n);
    std::vector<int64_t> targets(size_t(m), 1);
    targets.back() = -(m - 1);
    auto rho = solve_peripheral_targets(*base, targets, mod);
    check_invariant(rho.has_value(), "balanced targets must be solvable");
    FiniteCover c = cover_from_assignment(
        base, *rho, "class1m level " + std::to_string(n));
    extend_by_explicit(t, std::move(c),
                       mod_surjection(mod, mod / uint32_t(m)));
  }
  return t;
}

Tower build_class2(int depth) {
  check_arg(depth >= 1 && depth <= 8, "depth must be between 1 and 8");
  auto base = std::make_shared<const Presentation>(surface_group(1, 1));
  Tower t = tower_with_base(base, "class2");
  FiniteAssignment lvl1{std::make_shared<CyclicGroup>(2), {1, 0}};
  extend_by_explicit(t, cover_from_assignment(base, lvl1, "class2 level 1"),
                     {0, 0});
  for (int n = 2; n <= depth; ++n) {
    uint32_t k = pow_u32(3, n - 1);
    FiniteCover c;
    c.base = base;
    c.gen_perms = {dihedral_left_s(k), dihedral_left_r(k)};
    c.basepoint = 0;
    c.label = "class2 level " + std::to_string(n);
    std::vector<uint32_t> q;
    if (n == 2) {
      // Dihedral onto Z/2 by the reflection parity.
      q.assign(2 * k, 0);
      for (uint32_t j = 0; j < k; ++j) q[k + j] = 1;
    } else {
      q = dihedral_surjection(k, k / 3);
    }
    extend_by_explicit(t, std::move(c), std::move(q));
  }
  return t;
}

Tower build_class3_closed(int depth) {
  check_arg(depth >= 1 && depth <= 14, "depth must be between 1 and 14");
  auto base = std::make_shared<const Presentation>(surface_group(1, 1));
  Tower t = tower_with_base(base, "class3");
  for (int n = 1; n <= depth; ++n) {
    uint32_t m = 1u << n;
    FiniteAssignment rho{std::make_shared<CyclicGroup>(m), {1, 0}};
    FiniteCover c = cover_from_assignment(
        base, rho, "class3 level " + std::to_string(n));
    extend_by_explicit(t, std::move(c), mod_surjection(m, m / 2 ? m / 2 : 1));
  }
  return t;
}

namespace {

bool single_cusp_cover(const FiniteCover& c) {
  return c.cusp_fiber(0).size() == 1;
}

// Scans fiber actions over the stabilizer basis of the current top cover:
// supports of size 1, 2, 3 in index order with non-identity values from the
// degree-3 permutations in table order, then a seeded random fallback.
std::vector<Perm> find_nonregular_fiber_action(const FiniteCover& top,
                                               int level) {
  SchreierData sd = schreier_data(top.gen_perms, top.basepoint);
  size_t rank = size_t(sd.subgroup_rank());
  std::vector<Perm> s3 = all_perms(3);
  std::vector<Perm> nontrivial(s3.begin() + 1, s3.end());

  auto accept = [&](const std::vector<Perm>& actions) {
    FiniteCover c = composed_fiber_cover(top, actions, "");
    if (!is_transitive(c.gen_perms, c.degree())) return false;
    if (!single_cusp_cover(c)) return false;
    return !c.is_normal();
  };

  std::vector<Perm> actions(rank, Perm::identity(3));
  // Support size 1.
  for (size_t i = 0; i < rank; ++i) {
    for (const Perm& v : nontrivial) {
      actions[i] = v;
      if (accept(actions)) return actions;
    }
    actions[i] = Perm::identity(3);
  }
  // Support size 2.
  for (size_t i = 0; i < rank; ++i) {
    for (size_t j = i + 1; j < rank; ++j) {
      for (const Perm& vi : nontrivial) {
        for (const Perm& vj : nontrivial) {
          actions[i] = vi;
          actions[j] = vj;
          if (accept(actions)) return actions;
          actions[j] = Perm::identity(3);
        }
      }
      actions[i] = Perm::identity(3);
    }
  }
  // Seeded fallback over full support.
  std::mt19937_64 rng(uint64_t(1000 + level));
  for (int trial = 0; trial < 100000; ++trial) {
    for (size_t i = 0; i < rank; ++i) {
      actions[i] = s3[rng() % s3.size()];
    }
    if (accept(actions)) return actions;
  }
  throw InvariantError("no irregular fiber action found at level " +
                       std::to_string(level));
}

}  // namespace

Tower build_nonregular_one_cusp(int depth) {
  check_arg(depth >= 1 && depth <= 6, "depth must be between 1 and 6");
  auto base = std::make_shared<const Presentation>(surface_group(1, 1));
  Tower t = tower_with_base(base, "nonregular");

  std::vector<Perm> s3 = all_perms(3);
  bool found = false;
  for (const Perm& a : s3) {
    for (const Perm& b : s3) {
      if (!is_transitive({a, b}, 3)) continue;
      FiniteCover c;
      c.base = base;
      c.gen_perms = {a, b};
      c.basepoint = 0;
      c.label = "nonregular level 1";
      if (!single_cusp_cover(c) || c.is_normal()) continue;
      extend_by_explicit(t, std::move(c), {0, 0, 0});
      found = true;
      break;
    }
    if (found) break;
  }
  check_invariant(found, "degree-3 irregular one-cusp action must exist");

  for (int n = 2; n <= depth; ++n) {
    const FiniteCover& top = t.levels.back().cover;
    auto actions = find_nonregular_fiber_action(top, n);
    extend_by_fiber_action(t, actions,
                           "nonregular level " + std::to_string(n));
    const FiniteCover& now = t.levels.back().cover;
    check_invariant(single_cusp_cover(now) && !now.is_normal(),
                    "extension lost the one-cusp irregular shape");
  }
  return t;
}

Tower build_congruence_tower(int kmax) {
  check_arg(kmax >= 2 && kmax <= 4, "kmax must be between 2 and 4");
  auto base = std::make_shared<const Presentation>(surface_group(0, 3));
  Tower t = tower_with_base(base, "congruence");
  std::shared_ptr<Psl2ModGroup> prev_group;
  std::vector<uint32_t> prev_subgroup;
  uint32_t level_n = 1;
  for (int k = 2; k <= kmax; ++k) {
    level_n *= uint32_t(k);
    uint32_t n_mod = 2 * level_n;  // 2 * k!
    auto G = std::make_shared<Psl2ModGroup>(n_mod);
    // The boundary words must all act parabolically: c1 -> [[1,2],[0,1]]
    // fixing infinity, c2 -> [[1,0],[-2,1]] fixing 0, so that the third
    // boundary word maps to [[1,0],[2,1]]*[[1,-2],[0,1]], trace -2, fixing 1.
    uint32_t A = G->element(1, 2, 0, 1);
    uint32_t B = G->element(1, 0, -2, 1);
    auto H = subgroup_closure(*G, {A, B});
    FiniteCover c;
    c.base = base;
    c.gen_perms = {left_mult_action(*G, H, A), left_mult_action(*G, H, B)};
    auto self = std::lower_bound(H.begin(), H.end(), G->identity());
    c.basepoint = uint32_t(self - H.begin());
    c.label = "matrices mod " + std::to_string(n_mod);
    std::vector<uint32_t> q(H.size());
    if (!prev_group) {
      std::fill(q.begin(), q.end(), 0);
    } else {
      for (size_t x = 0; x < H.size(); ++x) {
        auto e = G->entries(H[x]);
        uint32_t down = prev_group->element(e[0], e[1], e[2], e[3]);
        auto it =
            std::lower_bound(prev_subgroup.begin(), prev_subgroup.end(), down);
        check_invariant(it != prev_subgroup.end() && *it == down,
                        "matrix reduction must land in the smaller level");
        q[x] = uint32_t(it - prev_subgroup.begin());
      }
    }
    extend_by_explicit(t, std::move(c), std::move(q));
    prev_group = std::move(G);
    prev_subgroup = std::move(H);
  }
  return t;
}

Tower build_padic_suspension(uint32_t p, int cusps, int depth) {
  check_arg(cusps >= 1 && cusps <= 8, "cusp count must be between 1 and 8");
  check_arg(depth >= 1 && depth <= 16, "depth must be between 1 and 16");
  check_arg(uint32_t(cusps + 1) % p != 0,
            "multiplier is not invertible: p divides cusps + 1");
  auto base = std::make_shared<const Presentation>(surface_group(1, cusps));
  Tower t = tower_with_base(base, "padic");
  for (int k = 1; k <= depth; ++k) {
    AffineGroup G(p, uint32_t(k));
    uint32_t psi = G.element(uint32_t(cusps + 1) % G.modulus(), 0);
    uint32_t tau = G.element(1, 1);
    FiniteCover c;
    c.base = base;
    c.gen_perms.push_back(G.point_action(psi));
    c.gen_perms.push_back(G.point_action(tau));
    for (int j = 0; j + 1 < cusps; ++j) {
      c.gen_perms.push_back(G.point_action(tau));
    }
    c.basepoint = 0;
    c.label = "suspension mod " + std::to_string(p) + "^" + std::to_string(k);
    extend_by_explicit(
        t, std::move(c),
        mod_surjection(G.modulus(), k == 1 ? 1 : G.modulus() / p));
  }
  // The multiplier relation must hold at every built modulus.
  for (int k = 1; k <= depth; ++k) {
    SuspensionRelationReport rep =
        check_suspension_relations(p, uint32_t(k), uint32_t(cusps));
    check_invariant(rep.multiplier_invertible && rep.commutator_identity,
                    "multiplier relation failed on a built level");
  }
  return t;
}

Tower build_gamma2_class2(int depth) {
  check_arg(depth >= 1 && depth <= 8, "depth must be between 1 and 8");
  auto base = std::make_shared<const Presentation>(surface_group(0, 3));
  Tower t = tower_with_base(base, "gamma2-class2");
  FiniteAssignment lvl1{std::make_shared<CyclicGroup>(2), {0, 1}};
  extend_by_explicit(t,
                     cover_from_assignment(base, lvl1, "gamma2-class2 level 1"),
                     {0, 0});
  for (int n = 2; n <= depth; ++n) {
    uint32_t k = pow_u32(3, n - 1);
    FiniteCover c;
    c.base = base;
    c.gen_perms = {dihedral_left_r(k), dihedral_left_s(k)};
    c.basepoint = 0;
    c.label = "gamma2-class2 level " + std::to_string(n);
    std::vector<uint32_t> q;
    if (n == 2) {
      q.assign(2 * k, 0);
      for (uint32_t j = 0; j < k; ++j) q[k + j] = 1;
    } else {
      q = dihedral_surjection(k, k / 3);
    }
    extend_by_explicit(t, std::move(c), std::move(q));
  }
  return t;
}

ObstructionReport one_cusp_obstruction_search(int genus, uint32_t max_degree) {
  check_arg(genus == 1 || genus == 2, "search supports genus 1 and 2");
  check_arg(max_degree >= 2 && max_degree <= 5, "degree must be 2..5");
  auto base = std::make_shared<const Presentation>(surface_group(genus, 1));
  ObstructionReport rep;
  rep.genus = genus;
  rep.max_degree = max_degree;
  int r = base->free_rank();
  for (uint32_t d = 2; d <= max_degree; ++d) {
    std::vector<Perm> table = all_perms(d);
    std::vector<size_t> idx(size_t(r), 0);
    for (;;) {
      ++rep.assignments;
      std::vector<Perm> gens;
      gens.reserve(size_t(r));
      for (size_t i = 0; i < size_t(r); ++i) gens.push_back(table[idx[i]]);
      if (is_transitive(gens, d)) {
        FiniteCover c;
        c.base = base;
        c.gen_perms = std::move(gens);
        c.basepoint = 0;
        if (single_cusp_cover(c) && c.is_normal()) ++rep.hits;
      }
      // Odometer over the index tuple.
      size_t pos = 0;
      while (pos < idx.size()) {
        if (++idx[pos] < table.size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return rep;
}

SuspensionRelationReport check_suspension_relations(uint64_t p, uint32_t k,
                                                    uint64_t n) {
  check_arg(p >= 2, "base must be at least 2");
  for (uint64_t d = 2; d < p; ++d) {
    check_arg(p % d != 0, "base must be prime");
  }
  check_arg(k >= 1, "exponent must be at least 1");
  uint64_t mod = 1;
  for (uint32_t i = 0; i < k; ++i) {
    mod *= p;
    check_arg(mod <= (1ull << 26), "modulus too large");
  }
  SuspensionRelationReport rep;
  rep.modulus = mod;
  uint64_t a = (n + 1) % mod;
  rep.multiplier_invertible = (n + 1) % p != 0;

  // Affine pairs (a, b) for x -> a x + b, composed right factor first.
  auto compose = [&](std::pair<uint64_t, uint64_t> f,
                     std::pair<uint64_t, uint64_t> g) {
    return std::make_pair(f.first * g.first % mod,
                          (f.first * g.second + f.second) % mod);
  };
  std::pair<uint64_t, uint64_t> tau{1, 1}, psi{a, 0};

  if (rep.multiplier_invertible) {
    // Inverse multiplier by Fermat-Euler: a^(phi(p^k) - 1).
    uint64_t phi = mod / p * (p - 1);
    uint64_t inv_a = 1, pw = a, e = phi - 1;
    while (e > 0) {
      if (e & 1) inv_a = inv_a * pw % mod;
      pw = pw * pw % mod;
      e >>= 1;
    }
    check_invariant(inv_a * a % mod == 1, "multiplier inverse failed");
    std::pair<uint64_t, uint64_t> psi_inv{inv_a, 0};
    std::pair<uint64_t, uint64_t> tau_inv{1, mod - 1};
    auto comm = compose(compose(psi, tau), compose(psi_inv, tau_inv));
    rep.commutator_identity = comm == std::make_pair(uint64_t(1), n % mod);
  }

  auto lhs = compose(psi, tau);
  // tau^e composed with psi is (a, e).
  rep.intertwine_identity = lhs == std::make_pair(a, (n + 1) % mod);
  uint64_t matches = 0;
  for (uint64_t e = 0; e < mod; ++e) {
    if (lhs == std::make_pair(a, e)) {
      ++matches;
      rep.exponent = e;
    }
  }
  rep.exponent_unique = matches == 1;
  return rep;
}

}  // namespace horotower
