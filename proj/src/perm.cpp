#include "horotower/perm.hpp"

#include <algorithm>
#include <queue>

#include "horotower/common.hpp"

namespace horotower {

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    check_arg(v < img_.size(), "permutation image out of range");
    check_arg(!seen[v], "permutation image repeated");
    seen[v] = true;
  }
}

Perm Perm::unchecked(std::vector<uint32_t> images) {
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::identity(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = i;
  return unchecked(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<uint32_t> inv(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
  return unchecked(std::move(inv));
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<uint32_t>> Perm::cycles() const {
  std::vector<std::vector<uint32_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> cyc;
    uint32_t x = s;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = img_[x];
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  check_arg(a.degree() == b.degree(), "permutation degree mismatch");
  std::vector<uint32_t> img(a.degree());
  for (uint32_t x = 0; x < a.degree(); ++x) img[x] = a(b(x));
  return Perm::unchecked(std::move(img));
}

Perm perm_pow(const Perm& p, int64_t n) {
  Perm base = n >= 0 ? p : p.inverse();
  int64_t k = n >= 0 ? n : -n;
  Perm acc = Perm::identity(p.degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::vector<uint32_t> orbit(const std::vector<Perm>& gens, uint32_t x) {
  // Forward reachability suffices: a finite set closed under injections is
  // closed under their inverses too.
  std::vector<bool> seen;
  uint32_t deg = gens.empty() ? x + 1 : gens[0].degree();
  seen.assign(deg, false);
  std::queue<uint32_t> q;
  q.push(x);
  seen[x] = true;
  std::vector<uint32_t> out;
  while (!q.empty()) {
    uint32_t p = q.front();
    q.pop();
    out.push_back(p);
    for (const Perm& g : gens) {
      uint32_t y = g(p);
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const std::vector<Perm>& gens, uint32_t degree) {
  if (degree == 0) return false;
  return orbit(gens, 0).size() == degree;
}

}  // namespace horotower
