#include "horotower/cover.hpp"

#include <algorithm>
#include <queue>

#include "horotower/common.hpp"

namespace horotower {

uint32_t FiniteCover::degree() const {
  check_invariant(!gen_perms.empty(), "cover has no generator actions");
  return gen_perms[0].degree();
}

void FiniteCover::validate() const {
  check_arg(base != nullptr, "cover has no base surface");
  check_arg(int(gen_perms.size()) == base->free_rank(),
            "cover needs one permutation per base generator");
  uint32_t d = degree();
  check_arg(d >= 1, "cover degree must be positive");
  for (const Perm& g : gen_perms) {
    check_arg(g.degree() == d, "sheet counts differ between generators");
  }
  check_arg(basepoint < d, "base sheet out of range");
  check_arg(is_transitive(gen_perms, d), "cover is not connected");
}

Perm FiniteCover::peripheral_perm(int j) const {
  check_arg(j >= 0 && j < base->cusp_count, "cusp index out of range");
  return perm_evaluate(gen_perms, base->peripherals[size_t(j)]);
}

std::vector<std::vector<uint32_t>> FiniteCover::cusp_fiber(int j) const {
  return peripheral_perm(j).cycles();
}

std::vector<uint32_t> FiniteCover::cusp_widths(int j) const {
  std::vector<uint32_t> ws;
  for (const auto& c : cusp_fiber(j)) ws.push_back(uint32_t(c.size()));
  return ws;
}

uint32_t FiniteCover::total_cusps() const {
  uint32_t n = 0;
  for (int j = 0; j < base->cusp_count; ++j) {
    n += uint32_t(cusp_fiber(j).size());
  }
  return n;
}

int64_t FiniteCover::genus() const {
  int64_t d = degree();
  int64_t chi_base = 2 - 2 * int64_t(base->genus) - base->cusp_count;
  int64_t c = total_cusps();
  int64_t twice = 2 - d * chi_base - c;
  check_invariant(twice % 2 == 0, "cover genus is not an integer");
  int64_t g = twice / 2;
  check_invariant(g >= 0, "cover genus is negative");
  return g;
}

bool FiniteCover::is_normal() const {
  uint32_t d = degree();
  int r = int(gen_perms.size());
  // A deck transformation is a sheet permutation commuting with every
  // generator action; it is determined by the image of the base sheet.  The
  // cover is normal exactly when every sheet is such an image.
  std::vector<int64_t> phi(d);
  std::vector<uint32_t> stack;
  for (uint32_t y = 0; y < d; ++y) {
    std::fill(phi.begin(), phi.end(), -1);
    phi[basepoint] = y;
    stack.assign(1, basepoint);
    bool ok = true;
    while (ok && !stack.empty()) {
      uint32_t p = stack.back();
      stack.pop_back();
      for (int i = 0; i < r; ++i) {
        uint32_t q = gen_perms[size_t(i)](p);
        uint32_t fq = gen_perms[size_t(i)](uint32_t(phi[p]));
        if (phi[q] < 0) {
          phi[q] = fq;
          stack.push_back(q);
        } else if (phi[q] != fq) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

FiniteCover identity_cover(std::shared_ptr<const Presentation> base) {
  FiniteCover c;
  c.base = std::move(base);
  c.gen_perms.assign(size_t(c.base->free_rank()), Perm::identity(1));
  c.basepoint = 0;
  c.label = "trivial";
  c.validate();
  return c;
}

std::optional<FiniteAssignment> solve_peripheral_targets(
    const Presentation& base, const std::vector<int64_t>& targets,
    uint32_t modulus) {
  check_arg(modulus >= 1, "modulus must be positive");
  check_arg(int(targets.size()) == base.cusp_count,
            "need one target per cusp");
  int64_t sum = 0;
  for (int64_t t : targets) sum += t;
  auto red = [&](int64_t v) {
    int64_t r = v % int64_t(modulus);
    if (r < 0) r += modulus;
    return uint32_t(r);
  };
  if (red(sum) != 0) return std::nullopt;

  FiniteAssignment rho;
  rho.group = std::make_shared<CyclicGroup>(modulus);
  rho.images.assign(size_t(base.free_rank()), 0);
  for (int j = 0; j + 1 < base.cusp_count; ++j) {
    rho.images[size_t(2 * base.genus + j)] = red(targets[size_t(j)]);
  }
  for (int j = 0; j < base.cusp_count; ++j) {
    check_invariant(
        rho.evaluate(base.peripherals[size_t(j)]) == red(targets[size_t(j)]),
        "peripheral image does not match its target");
  }
  return rho;
}

FiniteCover cover_from_assignment(std::shared_ptr<const Presentation> base,
                                  const FiniteAssignment& rho,
                                  std::string label) {
  check_arg(int(rho.images.size()) == base->free_rank(),
            "assignment rank does not match base");
  auto subset = subgroup_closure(*rho.group, rho.images);
  FiniteCover c;
  c.base = std::move(base);
  for (uint32_t img : rho.images) {
    c.gen_perms.push_back(left_mult_action(*rho.group, subset, img));
  }
  auto it = std::lower_bound(subset.begin(), subset.end(),
                             rho.group->identity());
  c.basepoint = uint32_t(it - subset.begin());
  c.label = std::move(label);
  c.validate();
  return c;
}

}  // namespace horotower
