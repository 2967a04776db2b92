#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "horotower/finite_group.hpp"

namespace horotower {

// Determinant-one matrices mod n, identified up to sign.  Full enumeration;
// desk scale, 2 <= n <= 12.
std::shared_ptr<const Psl2ModGroup> psl2_enumerate(uint32_t n);

// (1/2) n^3 prod_{p|n} (1 - 1/p^2), exact integer arithmetic.  The half
// factor needs n >= 3; n = 2 is handled by enumeration only.
uint64_t index_formula(uint32_t n);

// (1/2) n^2 prod_{p|n} (1 - 1/p^2), exact.  n >= 3.
uint64_t cusp_count_formula(uint32_t n);

// Number of cycles of right multiplication by [[1,1],[0,1]] on the
// enumerated group.  2 <= n <= 12.  For n >= 3 every cycle has length
// exactly n (uniform cusp width); that is re-verified on each call.
uint64_t cusp_count_bruteforce(uint32_t n);

// 1 + d/12 - c/2 from the two formulas; integral in the torsion-free
// range n >= 3.
uint64_t genus_congruence(uint32_t n);

// The level-n subgroup lies inside the level-m one exactly when m divides
// n.  Checks that the witness [[1,n],[0,1]] reduces to the identity mod m
// precisely in that case.
bool divisibility_agrees(uint32_t n, uint32_t m);

struct CongruenceRow {
  uint32_t n = 0;
  uint64_t index_formula_value = 0;
  uint64_t index_bruteforce = 0;
  uint64_t cusps_formula = 0;
  uint64_t cusps_bruteforce = 0;
  uint64_t genus = 0;
};

// One row per n in [n_lo, n_hi] (empty when n_lo > n_hi), with formula and
// enumeration sides compared.  Any mismatch, a non-uniform cusp width, a
// failed index = n * cusps identity, or a divisibility disagreement on a
// pair in range throws InvariantError.  Range must stay within [3, 12].
std::vector<CongruenceRow> verify_formulas(uint32_t n_lo, uint32_t n_hi);

std::string congruence_table_csv(const std::vector<CongruenceRow>& rows);
std::string congruence_table_json(const std::vector<CongruenceRow>& rows);

}  // namespace horotower
