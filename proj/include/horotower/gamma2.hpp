#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "horotower/psl2.hpp"
#include "horotower/word.hpp"

namespace horotower {

// The level-2 kernel is free on A = [[1,2],[0,1]] and B = [[1,0],[2,1]];
// the quotient by it has order six with transversal
// {I, T, S, TS, ST, TST} in that fixed order.
IntMat gamma2_gen_a();
IntMat gamma2_gen_b();
extern const int kGamma2CosetCount;
IntMat gamma2_coset_rep(int c);

// Index of the residue class of m in the transversal order.
int coset_mod2(const IntMat& m);

// Cusp of the level-2 kernel a point with this coset escapes toward when
// its reduced height grows: rep(c) sends infinity to one of infinity, 0, 1,
// numbered 0, 1, 2 to match the boundary word order of the three-cusp
// sphere (first fixes infinity, second fixes 0, third fixes 1).
int gamma2_cusp_of_coset(int c);

// m = gamma * rep(c) with gamma in the level-2 kernel.
struct Gamma2Split {
  IntMat gamma;
  int coset = 0;
};

Gamma2Split split_gamma2(const IntMat& m);

// One syllable of a freely reduced word: generator 0 is A, 1 is B.
struct Gamma2Letter {
  int gen = 0;
  int64_t exp = 0;
};

// Writes gamma as a product of syllables, left to right, by Euclidean row
// reduction; the factorization is verified exactly before returning.
// Throws InvariantError if gamma is not in the free group on A and B or
// the reduction stalls.
std::vector<Gamma2Letter> peel_gamma2(const IntMat& gamma);

// Translates syllables into the three-cusp sphere group: A^e reads as the
// first cusp generator to the e, B^e as the second cusp generator to the
// MINUS e (the second generator was identified with the inverse matrix to
// keep the third boundary word parabolic).
Word gamma2_letters_to_word(const std::vector<Gamma2Letter>& letters);

}  // namespace horotower
