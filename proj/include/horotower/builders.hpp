#pragma once

#include <cstdint>
#include <string>

#include "horotower/tower.hpp"

namespace horotower {

// Dyadic tower over the twice-punctured torus: level n is the Z/2^n cover
// with one boundary word mapping to +1 and the other to -1.  Both cusp
// count sequences stay at 1.
Tower build_class1(int depth);

// Tower over the m-punctured sphere (m >= 3): level n is the Z/m^n cover
// with every boundary word of the first m-1 cusps mapping to +1.  Every
// cusp count sequence stays at 1.
Tower build_class1m(int m, int depth);

// Tower over the once-punctured torus whose cusp count jumps to 2 at level
// 1 and stays there: level 1 is the Z/2 cover (a -> 1, b -> 0); level n >= 2
// is the left regular cover of the dihedral group of order 2*3^(n-1) with
// a -> reflection, b -> rotation.  Every level is normal.
Tower build_class2(int depth);

// Tower over the once-punctured torus with cusp counts 2^n: level n is the
// Z/2^n cover with a -> 1, b -> 0, so the boundary word acts trivially.
Tower build_class3_closed(int depth);

// Tower over the once-punctured torus with a single cusp at every level and
// no level normal.  Level 1 is found by scanning degree-3 actions; each
// further level multiplies the degree by 3 via a fiber action found by a
// deterministic scan (small supports first, then a seeded random fallback).
Tower build_nonregular_one_cusp(int depth);

// Tower over the thrice-punctured sphere realizing principal congruence
// covers: the base generators act as the parabolic matrices [[1,2],[0,1]]
// and [[1,0],[-2,1]] reduced mod N_k = 2*k!, on the subgroup they generate
// in PSL(2, Z/N_k), for k = 2..kmax.  Every level is normal and every cusp
// count sequence keeps growing.
Tower build_congruence_tower(int kmax);

// Tower over the genus-1 surface with `cusps` punctures: level k maps
// a -> (x -> (cusps+1) x), b -> (x -> x + 1) into the affine maps of
// Z/p^k, and every other boundary generator to the translation as well.
// Requires p not dividing cusps + 1.
Tower build_padic_suspension(uint32_t p, int cusps, int depth);

// The class-2 pattern over the thrice-punctured sphere (the base whose
// covers the matrix flow code uses): level 1 is the Z/2 cover with
// c1 -> 0, c2 -> 1; level n >= 2 is the left regular dihedral cover of
// order 2*3^(n-1) with c1 -> rotation, c2 -> reflection.  The first cusp's
// count sequence is 1, 2, 2, 2, ...
Tower build_gamma2_class2(int depth);

struct ObstructionReport {
  int genus = 1;
  uint32_t max_degree = 0;
  uint64_t assignments = 0;  // actions scanned
  uint64_t hits = 0;         // connected normal covers, degree > 1, one cusp
};

// Scans every degree-d action of the one-cusp surface group of the given
// genus for d = 2..max_degree, counting connected normal covers whose
// boundary word acts with a single cycle.  A cyclic deck group would be
// forced, so no hits exist; the scan certifies that emptiness.
ObstructionReport one_cusp_obstruction_search(int genus, uint32_t max_degree);

struct SuspensionRelationReport {
  uint64_t modulus = 0;              // p^k
  bool multiplier_invertible = false;
  bool commutator_identity = false;  // [psi, tau] = tau^n, when invertible
  bool intertwine_identity = false;  // psi . tau = tau^(n+1) . psi as maps
  bool exponent_unique = false;
  uint64_t exponent = 0;  // the unique e in [0, p^k) with psi.tau = tau^e.psi
};

// Checks the defining relations of the multiplier psi: x -> (n+1) x and the
// translation tau: x -> x + 1 on Z/p^k.  When p divides n+1 the multiplier
// is not invertible and only the intertwining form is meaningful.
SuspensionRelationReport check_suspension_relations(uint64_t p, uint32_t k,
                                                    uint64_t n);

}  // namespace horotower
