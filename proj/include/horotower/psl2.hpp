#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace horotower {

// Real 2x2 matrix of determinant one, up to sign.  Kept renormalized
// (divide by sqrt(det)) and sign-normalized: first nonzero entry of the
// top row positive.
struct Psl2Point {
  double a = 1, b = 0, c = 0, d = 1;
};

Psl2Point psl2_point(double a, double b, double c, double d);
Psl2Point psl2_mul(const Psl2Point& x, const Psl2Point& y);

// Right multiplication by diag(e^{t/2}, e^{-t/2}).
Psl2Point geodesic_flow(const Psl2Point& p, double t);
// Right multiplication by [[1,s],[0,1]].
Psl2Point horocycle_flow(const Psl2Point& p, double s);

// Moebius image of i, the base point in the upper half plane.
std::complex<double> base_point(const Psl2Point& p);
// Unit tangent direction at the base point, in [-pi, pi).
double tangent_angle(const Psl2Point& p);
// The unique point with the given base coordinates and direction.
Psl2Point point_from_coords(double re, double im, double theta);

// Exact integer matrix, determinant one, read up to sign.
struct IntMat {
  int64_t a = 1, b = 0, c = 0, d = 1;
};

IntMat imat_mul(const IntMat& x, const IntMat& y);
IntMat imat_inverse(const IntMat& m);
// Equality up to overall sign.
bool imat_eq(const IntMat& x, const IntMat& y);

// Word in the unit translation and the inversion, stored as alternating
// runs: a nonzero value k is the k-th power of the translation, zero is
// one inversion.
struct DeckWord {
  std::vector<int64_t> runs;

  bool empty() const { return runs.empty(); }
};

IntMat deck_matrix(const DeckWord& w);

// Brings the base point into the fundamental domain |Re z| <= 1/2,
// |z| >= 1 by alternating unit translations and inversions.  The returned
// word satisfies deck_matrix(w) * reduced = p up to sign, to 1e-7.
// Throws InvariantError when 1e4 iterations do not converge.
struct ReduceResult {
  Psl2Point reduced;
  DeckWord word;
};

ReduceResult reduce(const Psl2Point& p);

}  // namespace horotower
