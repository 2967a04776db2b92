#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "horotower/gamma2.hpp"
#include "horotower/psl2.hpp"
#include "horotower/tower.hpp"

namespace horotower {

// Point of the towered unit tangent bundle: a base matrix reduced into the
// standard fundamental domain, the residue tracking which of the six cosets
// of the level-2 kernel the reduction landed in, and one fiber index per
// tower level.  The address stays q-compatible under every flow.
struct SolenoidPoint {
  Psl2Point base;
  int coset = 0;
  std::vector<uint32_t> address;
};

enum class FlowKind { kGeodesic, kHorocycle };

// Shared machinery for flowing many points against one tower: per-level
// cycle tables of the two generator actions make applying a deck syllable
// A^e or B^e O(1) per level regardless of e.
class SolenoidTracker {
public:
  // tower may be null for the bare base surface.  A tower must sit over the
  // three-cusp sphere; its levels are the fiber coordinates tracked here.
  explicit SolenoidTracker(const Tower* tower);

  size_t levels() const { return levels_; }
  std::vector<uint32_t> initial_address() const;

  // Reduces an arbitrary unimodular matrix carrying the fixed initial fiber
  // coordinate into a solenoid point.
  SolenoidPoint from_global(const Psl2Point& u) const;

  // Sample k of the closed horocycle at the given height: the point over
  // Re z = x at that height, carrying the initial fiber coordinate.
  SolenoidPoint horocycle_sample(double height, double x) const;

  SolenoidPoint flow(const SolenoidPoint& sp, FlowKind kind,
                     double parameter) const;

private:
  struct CycleTable {
    std::vector<uint32_t> cycle_id;
    std::vector<uint32_t> cycle_pos;
    std::vector<uint32_t> offset;  // cycle_id -> start in elems, plus end cap
    std::vector<uint32_t> elems;

    uint32_t apply(uint32_t x, int64_t power) const;
  };

  static CycleTable table_of(const Perm& p);

  // Address update for normalizing away a kernel element: the fiber index
  // moves by the inverse of the element's evaluated action, so that
  // stepwise flowing and reducing from scratch agree exactly.
  void apply_kernel(const IntMat& gamma, std::vector<uint32_t>& address) const;
  // Folds a deck word into the state one run at a time, so each peeled
  // kernel factor stays a few syllables long no matter how far the word
  // winds around a cusp.  Returns the coset after the word.
  int consume_word(const DeckWord& w, int coset,
                   std::vector<uint32_t>& address) const;
  void check_compatible(const std::vector<uint32_t>& address) const;

  const Tower* tower_ = nullptr;
  size_t levels_ = 0;
  std::vector<CycleTable> gen_a_;  // per level, action of the first cusp loop
  std::vector<CycleTable> gen_b_;  // per level, action of the second, inverted
};

// Flows the base matrix, re-reduces, and pushes the deck holonomy through
// every tower level.  Address compatibility is re-verified after each call.
SolenoidPoint flow_solenoid(const SolenoidPoint& sp, FlowKind kind,
                            double parameter, const Tower* tower);

// count equally spaced points of the closed horocycle at the given height,
// spacing 1/(count*height) in flow parameter so the sweep covers the full
// period, all carrying the same initial fiber coordinate.
std::vector<SolenoidPoint> closed_horocycle_samples(double height, size_t count,
                                                    const Tower* tower);

// Columns re,im,theta,level0_addr,...  Floats printed with %.12g so equal
// inputs always serialize to equal bytes.
void write_samples_csv(std::ostream& out,
                       const std::vector<SolenoidPoint>& samples);

}  // namespace horotower
