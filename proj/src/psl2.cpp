#include "horotower/psl2.hpp"

#include <cmath>

#include "horotower/common.hpp"

namespace horotower {

namespace {

Psl2Point normalize(double a, double b, double c, double d) {
  double det = a * d - b * c;
  check_invariant(det > 0, "matrix determinant lost positivity");
  double s = 1.0 / std::sqrt(det);
  a *= s;
  b *= s;
  c *= s;
  d *= s;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  Psl2Point p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.d = d;
  return p;
}

}  // namespace

Psl2Point psl2_point(double a, double b, double c, double d) {
  return normalize(a, b, c, d);
}

Psl2Point psl2_mul(const Psl2Point& x, const Psl2Point& y) {
  return normalize(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

Psl2Point geodesic_flow(const Psl2Point& p, double t) {
  double u = std::exp(t / 2), v = std::exp(-t / 2);
  return normalize(p.a * u, p.b * v, p.c * u, p.d * v);
}

Psl2Point horocycle_flow(const Psl2Point& p, double s) {
  return normalize(p.a, p.a * s + p.b, p.c, p.c * s + p.d);
}

std::complex<double> base_point(const Psl2Point& p) {
  double den = p.c * p.c + p.d * p.d;
  return {(p.a * p.c + p.b * p.d) / den, 1.0 / den};
}

double tangent_angle(const Psl2Point& p) {
  double theta = M_PI / 2 - 2 * std::atan2(p.c, p.d);
  theta = std::remainder(theta, 2 * M_PI);
  if (theta >= M_PI) theta -= 2 * M_PI;
  if (theta < -M_PI) theta += 2 * M_PI;
  return theta;
}

Psl2Point point_from_coords(double re, double im, double theta) {
  check_arg(im > 0, "base point must lie in the upper half plane");
  double r = std::sqrt(im);
  Psl2Point up = normalize(r, re / r, 0, 1 / r);
  double alpha = (M_PI / 2 - theta) / 2;
  return psl2_mul(up,
                  normalize(std::cos(alpha), -std::sin(alpha),
                            std::sin(alpha), std::cos(alpha)));
}

IntMat imat_mul(const IntMat& x, const IntMat& y) {
  IntMat m;
  m.a = x.a * y.a + x.b * y.c;
  m.b = x.a * y.b + x.b * y.d;
  m.c = x.c * y.a + x.d * y.c;
  m.d = x.c * y.b + x.d * y.d;
  return m;
}

IntMat imat_inverse(const IntMat& m) {
  IntMat r;
  r.a = m.d;
  r.b = -m.b;
  r.c = -m.c;
  r.d = m.a;
  return r;
}

bool imat_eq(const IntMat& x, const IntMat& y) {
  bool plus = x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  bool minus = x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d;
  return plus || minus;
}

IntMat deck_matrix(const DeckWord& w) {
  IntMat m;
  for (int64_t run : w.runs) {
    if (run == 0) {
      IntMat s;
      s.a = 0;
      s.b = -1;
      s.c = 1;
      s.d = 0;
      m = imat_mul(m, s);
    } else {
      IntMat t;
      t.b = run;
      m = imat_mul(m, t);
    }
  }
  return m;
}

ReduceResult reduce(const Psl2Point& p) {
  ReduceResult res;
  res.reduced = p;
  for (int iter = 0; iter < 10000; ++iter) {
    std::complex<double> z = base_point(res.reduced);
    double x = z.real(), y = z.imag();
    bool acted = false;
    if (std::abs(x) > 0.5 + 1e-12) {
      int64_t n = std::llround(x);
      if (n != 0) {
        // Left multiply by the (-n)-th translation power.
        res.reduced = normalize(res.reduced.a - double(n) * res.reduced.c,
                                res.reduced.b - double(n) * res.reduced.d,
                                res.reduced.c, res.reduced.d);
        res.word.runs.push_back(n);
        acted = true;
        z = base_point(res.reduced);
        x = z.real();
        y = z.imag();
      }
    }
    if (x * x + y * y < 1.0 - 1e-12) {
      // Left multiply by the inversion.
      res.reduced = normalize(-res.reduced.c, -res.reduced.d, res.reduced.a,
                              res.reduced.b);
      res.word.runs.push_back(0);
      acted = true;
    }
    if (!acted) {
      check_invariant(std::abs(x) <= 0.5 + 1e-9,
                      "reduced point left the strip");
      check_invariant(x * x + y * y >= 1.0 - 1e-9,
                      "reduced point inside the unit circle");
      return res;
    }
  }
  throw InvariantError("fundamental domain reduction did not converge");
}

}  // namespace horotower
