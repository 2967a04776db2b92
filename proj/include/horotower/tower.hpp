#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "horotower/cover.hpp"
#include "horotower/perm.hpp"
#include "horotower/presentation.hpp"

namespace horotower {

struct TowerLevel {
  FiniteCover cover;
  // Sheet surjection onto the previous level; empty at level 0.  Commutes
  // with the generator actions and sends base sheet to base sheet.
  std::vector<uint32_t> q;
};

// Increasing sequence of covers of one base surface, each mapping onto the
// one before it.  Level 0 is the trivial cover.
struct Tower {
  std::shared_ptr<const Presentation> base;
  std::vector<TowerLevel> levels;
  std::string label;

  size_t depth() const { return levels.empty() ? 0 : levels.size() - 1; }
  void validate() const;

  // Number of cusps over base cusp j at each level, starting with 1 at the
  // trivial level.  Never decreases along the tower.
  std::vector<uint32_t> cusp_counts(int base_cusp) const;

  // Every proper level is a normal cover of the base.
  bool is_mccord() const;
};

Tower tower_with_base(std::shared_ptr<const Presentation> base,
                      std::string label);

// Append a cover together with its sheet surjection onto the current top.
void extend_by_explicit(Tower& t, FiniteCover next, std::vector<uint32_t> q);

// Composite next level: sheets are pairs (top sheet, fiber point).  Crossing
// the positive edge (p, i) of the top cover's sheet graph moves the fiber by
// the action of that edge's stabilizer basis letter; spanning tree edges act
// trivially.  A loop at the top base sheet therefore moves the fiber by the
// action of its rewritten stabilizer word.
void extend_by_fiber_action(Tower& t, const std::vector<Perm>& basis_actions,
                            std::string label);

// The composite cover the extension would append, without validation of
// connectedness; callers searching over fiber actions test transitivity.
FiniteCover composed_fiber_cover(const FiniteCover& top,
                                 const std::vector<Perm>& basis_actions,
                                 std::string label);

enum class TowerClass { kSingle, kStabilized, kGrowing };

struct TrichotomyReport {
  TowerClass kind = TowerClass::kSingle;
  std::vector<uint32_t> counts;  // per level
  uint32_t limit_count = 1;     // meaningful for kStabilized
  size_t stabilized_at = 0;     // first level reaching the top count
  std::string str() const;
};

// Classifies the cusp count sequence over one base cusp:
//   kSingle      counts stay at 1,
//   kStabilized  counts reach a constant > 1 strictly before the top level,
//   kGrowing     counts still increase at the top level.
// Requires depth >= 2.
TrichotomyReport classify_trichotomy(const Tower& t, int base_cusp);

}  // namespace horotower
