#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "horotower/tower.hpp"

namespace horotower {

// Rooted tree over one base cusp: the depth-n vertices are the cusps of
// level n lying over it (cycles of the peripheral action), and a vertex
// hangs below the cusp its sheets project to.  Vertices at each depth are
// in canonical cycle order.
struct EndTree {
  std::vector<std::vector<uint32_t>> cycle_min;          // per depth, per vertex
  std::vector<std::vector<uint32_t>> cycle_len;          // cusp widths
  std::vector<std::vector<uint32_t>> parent;             // depth >= 1
  std::vector<std::vector<std::vector<uint32_t>>> children;

  size_t depth() const { return cycle_min.empty() ? 0 : cycle_min.size() - 1; }
  size_t count_at(size_t d) const { return cycle_min[d].size(); }
};

// One tree per base cusp, all to the same depth.
struct EndForest {
  std::vector<EndTree> trees;
};

EndForest end_forest(const Tower& t, size_t depth);

// Shape of the boundary at infinity of one tree, seen through its deepest
// `window` levels.
struct EndSpaceReport {
  bool finite = true;        // no branching inside the window
  uint32_t end_count = 0;    // leaves of the tree
  // max_children[d] = largest number of depth-(d+1) children of a depth-d
  // vertex, for d = 0 .. depth-1.
  std::vector<uint32_t> max_children;

  std::string str() const;
};

// One report per base cusp.  When `uniform_required` is set (towers all of
// whose levels are regular), every vertex of a tree at a given depth must
// have the same number of children; a violation throws InvariantError.
std::vector<EndSpaceReport> classify_end_space(const EndForest& f,
                                               size_t window,
                                               bool uniform_required);

// Collapses identical per-cusp verdicts into one.
std::string end_space_summary(const std::vector<EndSpaceReport>& reports);

std::string end_forest_dot(const EndForest& f);
std::string end_forest_json(const EndForest& f);

}  // namespace horotower
