#pragma once

#include <cstdint>
#include <vector>

#include "horotower/perm.hpp"
#include "horotower/word.hpp"

namespace horotower {

// Schreier graph bookkeeping for the basepoint stabilizer of a transitive
// permutation action.  The graph has one positive edge (p, i) -> sigma_i(p)
// per point p and generator i.  A breadth-first spanning tree over positive
// edges yields:
//   transversal[p]: word moving the basepoint to p,
//   edge_basis[p][i]: 0 on tree edges, else the positive basis letter of the
//     free generator transversal[q]^-1 * x_i * transversal[p], q = sigma_i(p).
// The stabilizer is free of rank 1 + degree * (rank - 1).
struct SchreierData {
  uint32_t degree = 0;
  uint32_t basepoint = 0;
  int rank = 0;
  std::vector<Word> transversal;
  std::vector<std::vector<int32_t>> edge_basis;
  std::vector<Word> basis_words;

  int subgroup_rank() const { return int(basis_words.size()); }
};

SchreierData schreier_data(const std::vector<Perm>& gens, uint32_t basepoint);

// evaluate(w) applied to start.
uint32_t track(const std::vector<Perm>& gens, const Word& w, uint32_t start);

bool stabilizes(const std::vector<Perm>& gens, const Word& w,
                uint32_t basepoint);

// Express a basepoint-stabilizing word in the stabilizer's free basis.
// Substituting basis_words back and reducing recovers the input exactly.
Word rewrite_word(const SchreierData& sd, const std::vector<Perm>& gens,
                  const Word& w);

// Replace basis letters by their defining words.
Word substitute(const Word& in_basis, const std::vector<Word>& basis_words);

// Generator of the stabilizer conjugate into the cycle of evaluate(periph)
// through the cycle's minimal point p:
//   transversal[p]^-1 * periph^len * transversal[p].
Word peripheral_subgroup_word(const SchreierData& sd, const Word& periph,
                              const std::vector<uint32_t>& cycle);

}  // namespace horotower
