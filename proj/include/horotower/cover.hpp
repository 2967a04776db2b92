#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "horotower/finite_group.hpp"
#include "horotower/perm.hpp"
#include "horotower/presentation.hpp"

namespace horotower {

// Connected finite cover of a punctured surface, given by the permutation
// action of the base generators on the sheets plus a marked base sheet.
struct FiniteCover {
  std::shared_ptr<const Presentation> base;
  std::vector<Perm> gen_perms;
  uint32_t basepoint = 0;
  std::string label;

  uint32_t degree() const;
  void validate() const;

  Perm peripheral_perm(int j) const;
  // Sheets over base cusp j grouped into cycles of the peripheral action;
  // each cycle starts at its least point, cycles sorted by that point.
  std::vector<std::vector<uint32_t>> cusp_fiber(int j) const;
  std::vector<uint32_t> cusp_widths(int j) const;
  uint32_t total_cusps() const;

  // Genus from the Euler characteristic of the covering surface.
  int64_t genus() const;

  // True when the deck group acts transitively on sheets, equivalently when
  // the sheet stabilizer is a normal subgroup.
  bool is_normal() const;
};

FiniteCover identity_cover(std::shared_ptr<const Presentation> base);

// Homomorphism to Z/modulus sending each boundary word P_j to targets[j].
// Exists iff the targets sum to 0 mod modulus; handle generators map to 0.
std::optional<FiniteAssignment> solve_peripheral_targets(
    const Presentation& base, const std::vector<int64_t>& targets,
    uint32_t modulus);

// Cover whose sheets are the elements of the subgroup generated by the
// assignment's images, with generators acting by left multiplication.  The
// base sheet is the identity.  Such covers are always normal.
FiniteCover cover_from_assignment(std::shared_ptr<const Presentation> base,
                                  const FiniteAssignment& rho,
                                  std::string label);

}  // namespace horotower
