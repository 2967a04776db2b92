#include "horotower/gamma2.hpp"

#include <array>
#include <cmath>

#include "horotower/common.hpp"

namespace horotower {

namespace {

IntMat make(int64_t a, int64_t b, int64_t c, int64_t d) {
  IntMat m;
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  return m;
}

using I128 = __int128;

I128 phi(const IntMat& m) {
  return I128(m.a) * m.a + I128(m.b) * m.b + I128(m.c) * m.c + I128(m.d) * m.d;
}

int64_t nearest_ratio(I128 num, I128 den) {
  // round(num / den) for den > 0.
  I128 q = num >= 0 ? (2 * num + den) / (2 * den) : -((-2 * num + den) / (2 * den));
  return int64_t(q);
}

}  // namespace

IntMat gamma2_gen_a() { return make(1, 2, 0, 1); }
IntMat gamma2_gen_b() { return make(1, 0, 2, 1); }

const int kGamma2CosetCount = 6;

IntMat gamma2_coset_rep(int c) {
  check_arg(c >= 0 && c < kGamma2CosetCount, "coset index out of range");
  static const std::array<IntMat, 6> reps = {
      make(1, 0, 0, 1),   // I
      make(1, 1, 0, 1),   // T
      make(0, -1, 1, 0),  // S
      make(1, -1, 1, 0),  // TS
      make(0, -1, 1, 1),  // ST
      make(1, 0, 1, 1),   // TST
  };
  return reps[c];
}

int coset_mod2(const IntMat& m) {
  auto r = [](int64_t x) { return int(((x % 2) + 2) % 2); };
  int key = r(m.a) * 8 + r(m.b) * 4 + r(m.c) * 2 + r(m.d);
  for (int c = 0; c < kGamma2CosetCount; ++c) {
    IntMat rep = gamma2_coset_rep(c);
    if (key == r(rep.a) * 8 + r(rep.b) * 4 + r(rep.c) * 2 + r(rep.d)) return c;
  }
  throw InvariantError("matrix residue is not invertible mod 2");
}

Gamma2Split split_gamma2(const IntMat& m) {
  check_invariant(I128(m.a) * m.d - I128(m.b) * m.c == 1,
                  "matrix determinant is not one");
  Gamma2Split out;
  out.coset = coset_mod2(m);
  out.gamma = imat_mul(m, imat_inverse(gamma2_coset_rep(out.coset)));
  check_invariant(coset_mod2(out.gamma) == 0,
                  "split factor left the level-2 kernel");
  return out;
}

std::vector<Gamma2Letter> peel_gamma2(const IntMat& gamma) {
  check_invariant(I128(gamma.a) * gamma.d - I128(gamma.b) * gamma.c == 1,
                  "matrix determinant is not one");
  check_invariant(coset_mod2(gamma) == 0, "matrix is not in the level-2 kernel");
  std::vector<Gamma2Letter> letters;
  IntMat g = gamma;
  // The integer potential drops strictly every pass (a stall throws), so
  // the loop terminates; cusp-fixing elements take one pass per syllable.
  while (true) {
    if (imat_eq(g, make(1, 0, 0, 1))) {
      // Exact round-trip check of the factorization.
      IntMat prod = make(1, 0, 0, 1);
      for (const Gamma2Letter& l : letters) {
        IntMat factor = l.exp >= 0 ? (l.gen == 0 ? gamma2_gen_a()
                                                 : gamma2_gen_b())
                                   : imat_inverse(l.gen == 0
                                                      ? gamma2_gen_a()
                                                      : gamma2_gen_b());
        IntMat pw = make(1, 0, 0, 1);
        IntMat sq = factor;
        uint64_t e = l.exp >= 0 ? uint64_t(l.exp) : uint64_t(-l.exp);
        while (e > 0) {
          if (e & 1) pw = imat_mul(pw, sq);
          e >>= 1;
          if (e > 0) sq = imat_mul(sq, sq);
        }
        prod = imat_mul(prod, pw);
      }
      check_invariant(imat_eq(prod, gamma), "syllable product mismatch");
      return letters;
    }
    // Candidate top-row update: row1 <- row1 - 2k * row2 peels A^k.
    I128 dot_a = I128(g.a) * g.c + I128(g.b) * g.d;
    I128 n2_a = I128(g.c) * g.c + I128(g.d) * g.d;
    int64_t ka = nearest_ratio(dot_a, 2 * n2_a);
    IntMat after_a = make(g.a - 2 * ka * g.c, g.b - 2 * ka * g.d, g.c, g.d);
    // Candidate bottom-row update: row2 <- row2 - 2k * row1 peels B^k.
    I128 dot_b = dot_a;
    I128 n2_b = I128(g.a) * g.a + I128(g.b) * g.b;
    int64_t kb = nearest_ratio(dot_b, 2 * n2_b);
    IntMat after_b = make(g.a, g.b, g.c - 2 * kb * g.a, g.d - 2 * kb * g.b);

    I128 cur = phi(g);
    I128 pa = ka != 0 ? phi(after_a) : cur;
    I128 pb = kb != 0 ? phi(after_b) : cur;
    if (pa < cur && pa <= pb) {
      letters.push_back({0, ka});
      g = after_a;
    } else if (pb < cur) {
      letters.push_back({1, kb});
      g = after_b;
    } else {
      throw InvariantError("row reduction stalled outside the free basis");
    }
  }
}

int gamma2_cusp_of_coset(int c) {
  check_arg(c >= 0 && c < kGamma2CosetCount, "coset index out of range");
  // rep(c) applied to infinity: I, T fix it; S, ST send it to 0; TS, TST
  // send it to 1.
  static const int table[6] = {0, 0, 1, 2, 1, 2};
  return table[c];
}

Word gamma2_letters_to_word(const std::vector<Gamma2Letter>& letters) {
  Word w;
  for (const Gamma2Letter& l : letters) {
    int64_t e = l.gen == 0 ? l.exp : -l.exp;
    w = w * Word::generator(l.gen, e);
  }
  return w;
}

}  // namespace horotower
