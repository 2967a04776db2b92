#pragma once

#include <cstdint>
#include <vector>

namespace horotower {

// Permutation of {0,...,n-1} stored as its image table.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<uint32_t> images);  // validates bijectivity
  static Perm identity(uint32_t n);
  // Trusted constructor for images known to be bijective (compositions etc).
  static Perm unchecked(std::vector<uint32_t> images);

  uint32_t degree() const { return uint32_t(img_.size()); }
  uint32_t operator()(uint32_t x) const { return img_[x]; }
  const std::vector<uint32_t>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;

  // Cycles in canonical order: each cycle starts at its smallest element,
  // cycles sorted by that element.  Fixed points included as 1-cycles.
  std::vector<std::vector<uint32_t>> cycles() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

private:
  std::vector<uint32_t> img_;
};

// Composition acting on the left: (a*b)(x) = a(b(x)).
Perm operator*(const Perm& a, const Perm& b);

Perm perm_pow(const Perm& p, int64_t n);

// Orbit of x under the group generated by gens (BFS, ascending output).
std::vector<uint32_t> orbit(const std::vector<Perm>& gens, uint32_t x);

bool is_transitive(const std::vector<Perm>& gens, uint32_t degree);

}  // namespace horotower
