#include "horotower/congruence.hpp"

#include <sstream>

#include "horotower/common.hpp"
#include "horotower/perm.hpp"

namespace horotower {

namespace {

std::vector<uint32_t> distinct_prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// m^3 or m^2 times prod (1 - 1/p^2), halved; every division is exact.
uint64_t half_product(uint32_t n, int power) {
  uint64_t r = 1;
  for (int i = 0; i < power; ++i) r *= n;
  for (uint32_t p : distinct_prime_factors(n)) {
    uint64_t p2 = uint64_t(p) * p;
    check_invariant(r % p2 == 0, "non-integral intermediate");
    r = r / p2 * (p2 - 1);
  }
  check_invariant(r % 2 == 0, "half factor does not divide");
  return r / 2;
}

}  // namespace

std::shared_ptr<const Psl2ModGroup> psl2_enumerate(uint32_t n) {
  check_arg(n >= 2 && n <= 12, "modulus must be between 2 and 12");
  return std::make_shared<Psl2ModGroup>(n);
}

uint64_t index_formula(uint32_t n) {
  check_arg(n >= 3, "half factor needs n >= 3");
  return half_product(n, 3);
}

uint64_t cusp_count_formula(uint32_t n) {
  check_arg(n >= 3, "half factor needs n >= 3");
  return half_product(n, 2);
}

uint64_t cusp_count_bruteforce(uint32_t n) {
  auto G = psl2_enumerate(n);
  uint32_t t = G->element(1, 1, 0, 1);
  std::vector<uint32_t> images(G->size());
  for (uint32_t x = 0; x < G->size(); ++x) images[x] = G->mul(x, t);
  std::vector<std::vector<uint32_t>> cycles = Perm(images).cycles();
  if (n >= 3)
    for (const std::vector<uint32_t>& c : cycles)
      check_invariant(c.size() == n, "cusp width differs from the level");
  return cycles.size();
}

uint64_t genus_congruence(uint32_t n) {
  check_arg(n >= 3, "torsion-free range is n >= 3");
  uint64_t d = index_formula(n);
  uint64_t c = cusp_count_formula(n);
  uint64_t euler12 = 12 + d;  // 12 * (1 + d/12 - c/2)
  check_invariant(euler12 >= 6 * c, "negative genus");
  euler12 -= 6 * c;
  check_invariant(euler12 % 12 == 0, "non-integral genus");
  return euler12 / 12;
}

bool divisibility_agrees(uint32_t n, uint32_t m) {
  check_arg(n >= 2 && m >= 2, "levels start at 2");
  auto G = psl2_enumerate(m);
  uint32_t witness = G->element(1, int64_t(n), 0, 1);
  return (witness == G->identity()) == (n % m == 0);
}

std::vector<CongruenceRow> verify_formulas(uint32_t n_lo, uint32_t n_hi) {
  if (n_lo > n_hi) return {};
  check_arg(n_lo >= 3 && n_hi <= 12, "range must lie within [3, 12]");
  std::vector<CongruenceRow> rows;
  for (uint32_t n = n_lo; n <= n_hi; ++n) {
    CongruenceRow row;
    row.n = n;
    row.index_formula_value = index_formula(n);
    row.index_bruteforce = psl2_enumerate(n)->size();
    row.cusps_formula = cusp_count_formula(n);
    row.cusps_bruteforce = cusp_count_bruteforce(n);
    row.genus = genus_congruence(n);
    check_invariant(row.index_formula_value == row.index_bruteforce,
                    "index formula disagrees with enumeration");
    check_invariant(row.cusps_formula == row.cusps_bruteforce,
                    "cusp formula disagrees with cycle count");
    check_invariant(row.index_formula_value == uint64_t(n) * row.cusps_formula,
                    "width-n cusps do not exhaust the group");
    rows.push_back(row);
  }
  for (uint32_t n = n_lo; n <= n_hi; ++n)
    for (uint32_t m = n_lo; m <= n_hi; ++m)
      check_invariant(divisibility_agrees(n, m),
                      "divisibility witness disagrees");
  return rows;
}

std::string congruence_table_csv(const std::vector<CongruenceRow>& rows) {
  std::ostringstream os;
  os << "n,index_formula,index_bruteforce,cusps_formula,cusps_bruteforce,"
        "genus\n";
  for (const CongruenceRow& r : rows)
    os << r.n << "," << r.index_formula_value << "," << r.index_bruteforce
       << "," << r.cusps_formula << "," << r.cusps_bruteforce << "," << r.genus
       << "\n";
  return os.str();
}

std::string congruence_table_json(const std::vector<CongruenceRow>& rows) {
  std::ostringstream os;
  os << "{\"schema_version\":1,\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const CongruenceRow& r = rows[i];
    if (i) os << ",";
    os << "{\"n\":" << r.n << ",\"index_formula\":" << r.index_formula_value
       << ",\"index_bruteforce\":" << r.index_bruteforce
       << ",\"cusps_formula\":" << r.cusps_formula
       << ",\"cusps_bruteforce\":" << r.cusps_bruteforce
       << ",\"genus\":" << r.genus << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace horotower
