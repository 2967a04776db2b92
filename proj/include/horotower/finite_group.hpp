#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "horotower/perm.hpp"
#include "horotower/word.hpp"

namespace horotower {

// Finite group with elements indexed 0..size-1 in a canonical order, so that
// equal groups built twice index their elements identically.
class FiniteGroup {
public:
  virtual ~FiniteGroup() = default;
  virtual uint32_t size() const = 0;
  virtual uint32_t identity() const = 0;
  virtual uint32_t mul(uint32_t a, uint32_t b) const = 0;
  virtual uint32_t inv(uint32_t a) const = 0;
  virtual std::string name() const = 0;
  virtual std::string describe(uint32_t a) const = 0;
  // Compact JSON describing how to rebuild the group.
  virtual std::string descriptor_json() const = 0;

  uint32_t power(uint32_t a, int64_t n) const;
  uint32_t order_of(uint32_t a) const;
  bool is_abelian() const;
};

// Z/m under addition; element i is the residue i.
class CyclicGroup : public FiniteGroup {
public:
  explicit CyclicGroup(uint32_t m);
  uint32_t size() const override { return m_; }
  uint32_t identity() const override { return 0; }
  uint32_t mul(uint32_t a, uint32_t b) const override;
  uint32_t inv(uint32_t a) const override;
  std::string name() const override;
  std::string describe(uint32_t a) const override;
  std::string descriptor_json() const override;
  uint32_t modulus() const { return m_; }

private:
  uint32_t m_;
};

// Invertible affine maps x -> a*x + b on Z/p^k, composed as functions:
// (a,b)*(a',b') sends x to a*(a'*x + b') + b.  Elements are indexed
// unit_position(a) * p^k + b with units listed in increasing residue order.
class AffineGroup : public FiniteGroup {
public:
  AffineGroup(uint32_t p, uint32_t k);
  uint32_t size() const override;
  uint32_t identity() const override;
  uint32_t mul(uint32_t a, uint32_t b) const override;
  uint32_t inv(uint32_t a) const override;
  std::string name() const override;
  std::string describe(uint32_t a) const override;
  std::string descriptor_json() const override;

  uint32_t prime() const { return p_; }
  uint32_t exponent() const { return k_; }
  uint32_t modulus() const { return mod_; }
  // Element from coefficients; a must be a unit mod p^k.
  uint32_t element(uint32_t a, uint32_t b) const;
  std::pair<uint32_t, uint32_t> coefficients(uint32_t e) const;
  // The natural action on Z/p^k: point x maps to a*x + b.
  Perm point_action(uint32_t e) const;

private:
  uint32_t p_, k_, mod_;
  std::vector<uint32_t> units_;      // increasing
  std::vector<int32_t> unit_pos_;    // residue -> position or -1
};

// 2x2 matrices of determinant 1 over Z/n, modulo sign.  Canonical
// representative of {M, -M} is the lexicographically smaller entry tuple
// (a, b, c, d); elements are sorted by that tuple.
class Psl2ModGroup : public FiniteGroup {
public:
  explicit Psl2ModGroup(uint32_t n);
  uint32_t size() const override;
  uint32_t identity() const override { return id_; }
  uint32_t mul(uint32_t a, uint32_t b) const override;
  uint32_t inv(uint32_t a) const override;
  std::string name() const override;
  std::string describe(uint32_t a) const override;
  std::string descriptor_json() const override;

  uint32_t level() const { return n_; }
  // Index of the class of [[a,b],[c,d]]; entries reduced mod n.  Throws if
  // the determinant is not 1.
  uint32_t element(int64_t a, int64_t b, int64_t c, int64_t d) const;
  std::array<uint32_t, 4> entries(uint32_t e) const;

private:
  uint64_t key(uint32_t a, uint32_t b, uint32_t c, uint32_t d) const;
  std::array<uint32_t, 4> canonical(std::array<uint32_t, 4> m) const;

  uint32_t n_;
  uint32_t id_;
  std::vector<std::array<uint32_t, 4>> elems_;
  std::vector<int64_t> index_;  // dense key -> element index or -1
};

// Closure of explicit permutation generators, elements sorted by image table.
class ExplicitPermGroup : public FiniteGroup {
public:
  explicit ExplicitPermGroup(std::vector<Perm> gens);
  uint32_t size() const override;
  uint32_t identity() const override { return id_; }
  uint32_t mul(uint32_t a, uint32_t b) const override;
  uint32_t inv(uint32_t a) const override;
  std::string name() const override;
  std::string describe(uint32_t a) const override;
  std::string descriptor_json() const override;

  const Perm& perm(uint32_t e) const { return elems_[e]; }
  uint32_t index_of(const Perm& p) const;

private:
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;  // sorted by image vector
  uint32_t id_ = 0;
};

std::shared_ptr<FiniteGroup> group_from_descriptor(const std::string& json);

// Sorted element indices of the subgroup generated by gens.
std::vector<uint32_t> subgroup_closure(const FiniteGroup& G,
                                       const std::vector<uint32_t>& gens);

// Left multiplication by g on a subgroup given as sorted element indices:
// position i maps to the position of g * subset[i].  This is a homomorphism
// into Sym(subset) under Perm composition.
Perm left_mult_action(const FiniteGroup& G, const std::vector<uint32_t>& subset,
                      uint32_t g);

// x -> x + g mod m on m points.
Perm translation_action(uint32_t m, uint32_t g);

// Generator images in a finite group; extends to words multiplicatively.
struct FiniteAssignment {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<uint32_t> images;

  uint32_t evaluate(const Word& w) const;
};

// evaluate(l1 ... lk) = sigma(l1) * ... * sigma(lk); the rightmost letter
// acts first under Perm composition.
Perm perm_evaluate(const std::vector<Perm>& gens, const Word& w);

}  // namespace horotower
