#include "horotower/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>

#include <json.hpp>

#include "horotower/common.hpp"

namespace horotower {

using nlohmann::json;

uint32_t FiniteGroup::power(uint32_t a, int64_t n) const {
  uint32_t base = n >= 0 ? a : inv(a);
  uint64_t k = n >= 0 ? uint64_t(n) : uint64_t(-n);
  uint32_t acc = identity();
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

uint32_t FiniteGroup::order_of(uint32_t a) const {
  uint32_t acc = a;
  uint32_t n = 1;
  while (acc != identity()) {
    acc = mul(acc, a);
    ++n;
    check_invariant(n <= size(), "element order exceeds group size");
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (uint32_t a = 0; a < size(); ++a) {
    for (uint32_t b = a + 1; b < size(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

CyclicGroup::CyclicGroup(uint32_t m) : m_(m) {
  check_arg(m >= 1, "cyclic modulus must be positive");
}

uint32_t CyclicGroup::mul(uint32_t a, uint32_t b) const {
  return (a + b) % m_;
}

uint32_t CyclicGroup::inv(uint32_t a) const { return a == 0 ? 0 : m_ - a; }

std::string CyclicGroup::name() const { return "Z/" + std::to_string(m_); }

std::string CyclicGroup::describe(uint32_t a) const { return std::to_string(a); }

std::string CyclicGroup::descriptor_json() const {
  return json{{"kind", "cyclic"}, {"m", m_}}.dump();
}

namespace {

// Extended Euclid: inverse of a mod m for gcd(a, m) = 1.
uint32_t mod_inverse(uint32_t a, uint32_t m) {
  int64_t t = 0, newt = 1, r = m, newr = int64_t(a % m);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  check_arg(r == 1, "element not invertible mod " + std::to_string(m));
  if (t < 0) t += m;
  return uint32_t(t);
}

}  // namespace

AffineGroup::AffineGroup(uint32_t p, uint32_t k) : p_(p), k_(k) {
  check_arg(p >= 2, "prime must be at least 2");
  check_arg(k >= 1, "exponent must be at least 1");
  for (uint32_t d = 2; d < p; ++d) {
    check_arg(p % d != 0, "modulus base must be prime");
  }
  uint64_t m = 1;
  for (uint32_t i = 0; i < k; ++i) {
    m *= p;
    check_arg(m <= (1u << 24), "affine modulus too large");
  }
  mod_ = uint32_t(m);
  unit_pos_.assign(mod_, -1);
  for (uint32_t a = 1; a < mod_; ++a) {
    if (a % p != 0) {
      unit_pos_[a] = int32_t(units_.size());
      units_.push_back(a);
    }
  }
}

uint32_t AffineGroup::size() const {
  return uint32_t(units_.size()) * mod_;
}

uint32_t AffineGroup::identity() const { return element(1, 0); }

uint32_t AffineGroup::element(uint32_t a, uint32_t b) const {
  a %= mod_;
  b %= mod_;
  check_arg(a < mod_ && unit_pos_[a] >= 0, "multiplier must be a unit");
  return uint32_t(unit_pos_[a]) * mod_ + b;
}

std::pair<uint32_t, uint32_t> AffineGroup::coefficients(uint32_t e) const {
  check_arg(e < size(), "affine element index out of range");
  return {units_[e / mod_], e % mod_};
}

uint32_t AffineGroup::mul(uint32_t x, uint32_t y) const {
  auto [a, b] = coefficients(x);
  auto [a2, b2] = coefficients(y);
  uint64_t na = (uint64_t(a) * a2) % mod_;
  uint64_t nb = (uint64_t(a) * b2 + b) % mod_;
  return uint32_t(unit_pos_[size_t(na)]) * mod_ + uint32_t(nb);
}

uint32_t AffineGroup::inv(uint32_t x) const {
  auto [a, b] = coefficients(x);
  uint32_t ai = mod_inverse(a, mod_);
  uint64_t nb = (uint64_t(ai) * (mod_ - b)) % mod_;
  return element(ai, uint32_t(nb));
}

std::string AffineGroup::name() const {
  return "Aff(Z/" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

std::string AffineGroup::describe(uint32_t e) const {
  auto [a, b] = coefficients(e);
  return "x->" + std::to_string(a) + "x+" + std::to_string(b);
}

std::string AffineGroup::descriptor_json() const {
  return json{{"kind", "affine"}, {"p", p_}, {"k", k_}}.dump();
}

Perm AffineGroup::point_action(uint32_t e) const {
  auto [a, b] = coefficients(e);
  std::vector<uint32_t> img(mod_);
  for (uint32_t x = 0; x < mod_; ++x) {
    img[x] = uint32_t((uint64_t(a) * x + b) % mod_);
  }
  return Perm::unchecked(std::move(img));
}

Psl2ModGroup::Psl2ModGroup(uint32_t n) : n_(n) {
  check_arg(n >= 1, "matrix modulus must be positive");
  check_arg(n <= 48, "matrix modulus too large to enumerate");
  std::set<std::array<uint32_t, 4>> reps;
  for (uint32_t a = 0; a < n_; ++a) {
    for (uint32_t b = 0; b < n_; ++b) {
      for (uint32_t c = 0; c < n_; ++c) {
        // a*d - b*c = 1 mod n determines d when a is a unit; scan d otherwise.
        for (uint32_t d = 0; d < n_; ++d) {
          uint64_t ad = uint64_t(a) * d % n_;
          uint64_t bc = uint64_t(b) * c % n_;
          if ((ad + n_ - bc) % n_ == 1 % n_) {
            reps.insert(canonical({a, b, c, d}));
          }
        }
      }
    }
  }
  elems_.assign(reps.begin(), reps.end());
  index_.assign(uint64_t(n_) * n_ * n_ * n_, -1);
  for (uint32_t i = 0; i < elems_.size(); ++i) {
    const auto& m = elems_[i];
    index_[key(m[0], m[1], m[2], m[3])] = i;
  }
  id_ = element(1, 0, 0, 1);
}

uint64_t Psl2ModGroup::key(uint32_t a, uint32_t b, uint32_t c,
                           uint32_t d) const {
  return ((uint64_t(a) * n_ + b) * n_ + c) * n_ + d;
}

std::array<uint32_t, 4> Psl2ModGroup::canonical(
    std::array<uint32_t, 4> m) const {
  std::array<uint32_t, 4> neg{};
  for (int i = 0; i < 4; ++i) neg[size_t(i)] = (n_ - m[size_t(i)]) % n_;
  return std::min(m, neg);
}

uint32_t Psl2ModGroup::size() const { return uint32_t(elems_.size()); }

uint32_t Psl2ModGroup::element(int64_t a, int64_t b, int64_t c,
                               int64_t d) const {
  auto red = [&](int64_t v) {
    int64_t r = v % int64_t(n_);
    if (r < 0) r += n_;
    return uint32_t(r);
  };
  auto m = canonical({red(a), red(b), red(c), red(d)});
  int64_t idx = index_[key(m[0], m[1], m[2], m[3])];
  check_arg(idx >= 0, "matrix determinant is not 1 mod " + std::to_string(n_));
  return uint32_t(idx);
}

std::array<uint32_t, 4> Psl2ModGroup::entries(uint32_t e) const {
  check_arg(e < elems_.size(), "matrix element index out of range");
  return elems_[e];
}

uint32_t Psl2ModGroup::mul(uint32_t x, uint32_t y) const {
  const auto& m = elems_[x];
  const auto& p = elems_[y];
  uint64_t a = uint64_t(m[0]) * p[0] + uint64_t(m[1]) * p[2];
  uint64_t b = uint64_t(m[0]) * p[1] + uint64_t(m[1]) * p[3];
  uint64_t c = uint64_t(m[2]) * p[0] + uint64_t(m[3]) * p[2];
  uint64_t d = uint64_t(m[2]) * p[1] + uint64_t(m[3]) * p[3];
  auto cm = canonical({uint32_t(a % n_), uint32_t(b % n_), uint32_t(c % n_),
                       uint32_t(d % n_)});
  return uint32_t(index_[key(cm[0], cm[1], cm[2], cm[3])]);
}

uint32_t Psl2ModGroup::inv(uint32_t x) const {
  const auto& m = elems_[x];
  return element(int64_t(m[3]), -int64_t(m[1]), -int64_t(m[2]), int64_t(m[0]));
}

std::string Psl2ModGroup::name() const {
  return "PSL(2,Z/" + std::to_string(n_) + ")";
}

std::string Psl2ModGroup::describe(uint32_t e) const {
  const auto& m = elems_[e];
  return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
         std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
}

std::string Psl2ModGroup::descriptor_json() const {
  return json{{"kind", "psl2mod"}, {"n", n_}}.dump();
}

ExplicitPermGroup::ExplicitPermGroup(std::vector<Perm> gens)
    : gens_(std::move(gens)) {
  check_arg(!gens_.empty(), "need at least one permutation generator");
  uint32_t deg = gens_[0].degree();
  for (const Perm& g : gens_) {
    check_arg(g.degree() == deg, "generator degrees differ");
  }
  // Deterministic closure: BFS with generators in order.
  std::set<std::vector<uint32_t>> seen;
  std::queue<Perm> q;
  Perm id = Perm::identity(deg);
  seen.insert(id.images());
  q.push(id);
  while (!q.empty()) {
    Perm p = q.front();
    q.pop();
    for (const Perm& g : gens_) {
      Perm pg = g * p;
      if (seen.insert(pg.images()).second) {
        check_arg(seen.size() <= (1u << 22), "permutation closure too large");
        q.push(pg);
      }
    }
  }
  for (const auto& img : seen) elems_.push_back(Perm::unchecked(img));
  // std::set iterates in sorted order, so elems_ is canonically sorted.
  id_ = index_of(id);
}

uint32_t ExplicitPermGroup::size() const { return uint32_t(elems_.size()); }

uint32_t ExplicitPermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(
      elems_.begin(), elems_.end(), p,
      [](const Perm& x, const Perm& y) { return x.images() < y.images(); });
  check_arg(it != elems_.end() && *it == p,
            "permutation not in generated group");
  return uint32_t(it - elems_.begin());
}

uint32_t ExplicitPermGroup::mul(uint32_t a, uint32_t b) const {
  return index_of(elems_[a] * elems_[b]);
}

uint32_t ExplicitPermGroup::inv(uint32_t a) const {
  return index_of(elems_[a].inverse());
}

std::string ExplicitPermGroup::name() const {
  return "PermGroup(deg " + std::to_string(gens_[0].degree()) + ", order " +
         std::to_string(elems_.size()) + ")";
}

std::string ExplicitPermGroup::describe(uint32_t e) const {
  std::string s = "(";
  const auto& img = elems_[e].images();
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(img[i]);
  }
  return s + ")";
}

std::string ExplicitPermGroup::descriptor_json() const {
  json g = json::array();
  for (const Perm& p : gens_) g.push_back(p.images());
  return json{{"kind", "perm"}, {"gens", g}}.dump();
}

std::shared_ptr<FiniteGroup> group_from_descriptor(const std::string& text) {
  json j = json::parse(text);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") {
    return std::make_shared<CyclicGroup>(j.at("m").get<uint32_t>());
  }
  if (kind == "affine") {
    return std::make_shared<AffineGroup>(j.at("p").get<uint32_t>(),
                                         j.at("k").get<uint32_t>());
  }
  if (kind == "psl2mod") {
    return std::make_shared<Psl2ModGroup>(j.at("n").get<uint32_t>());
  }
  if (kind == "perm") {
    std::vector<Perm> gens;
    for (const auto& g : j.at("gens")) {
      gens.emplace_back(g.get<std::vector<uint32_t>>());
    }
    return std::make_shared<ExplicitPermGroup>(std::move(gens));
  }
  throw std::invalid_argument("unknown group descriptor kind: " + kind);
}

std::vector<uint32_t> subgroup_closure(const FiniteGroup& G,
                                       const std::vector<uint32_t>& gens) {
  std::set<uint32_t> seen{G.identity()};
  std::queue<uint32_t> q;
  q.push(G.identity());
  while (!q.empty()) {
    uint32_t x = q.front();
    q.pop();
    for (uint32_t g : gens) {
      check_arg(g < G.size(), "closure generator index out of range");
      uint32_t y = G.mul(g, x);
      if (seen.insert(y).second) q.push(y);
    }
  }
  return std::vector<uint32_t>(seen.begin(), seen.end());
}

Perm left_mult_action(const FiniteGroup& G, const std::vector<uint32_t>& subset,
                      uint32_t g) {
  std::vector<uint32_t> img(subset.size());
  for (uint32_t i = 0; i < subset.size(); ++i) {
    uint32_t y = G.mul(g, subset[i]);
    auto it = std::lower_bound(subset.begin(), subset.end(), y);
    check_arg(it != subset.end() && *it == y,
              "left multiplication leaves the subset");
    img[i] = uint32_t(it - subset.begin());
  }
  return Perm::unchecked(std::move(img));
}

Perm translation_action(uint32_t m, uint32_t g) {
  check_arg(g < m, "translation amount out of range");
  std::vector<uint32_t> img(m);
  for (uint32_t x = 0; x < m; ++x) img[x] = (x + g) % m;
  return Perm::unchecked(std::move(img));
}

uint32_t FiniteAssignment::evaluate(const Word& w) const {
  uint32_t acc = group->identity();
  for (int32_t l : w.letters()) {
    size_t idx = size_t(std::abs(l)) - 1;
    check_arg(idx < images.size(), "word letter exceeds assignment rank");
    uint32_t g = l > 0 ? images[idx] : group->inv(images[idx]);
    acc = group->mul(acc, g);
  }
  return acc;
}

Perm perm_evaluate(const std::vector<Perm>& gens, const Word& w) {
  check_arg(!gens.empty(), "need at least one generator permutation");
  std::vector<Perm> invs(gens.size());
  std::vector<bool> have_inv(gens.size(), false);
  Perm acc = Perm::identity(gens[0].degree());
  for (int32_t l : w.letters()) {
    size_t idx = size_t(std::abs(l)) - 1;
    check_arg(idx < gens.size(), "word letter exceeds generator count");
    if (l > 0) {
      acc = acc * gens[idx];
    } else {
      if (!have_inv[idx]) {
        invs[idx] = gens[idx].inverse();
        have_inv[idx] = true;
      }
      acc = acc * invs[idx];
    }
  }
  return acc;
}

}  // namespace horotower
