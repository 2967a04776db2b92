#include "horotower/end_forest.hpp"

#include <sstream>

#include "horotower/common.hpp"
#include "horotower/odometer.hpp"

namespace horotower {

namespace {

EndTree end_tree(const Tower& t, int base_cusp, size_t depth) {
  OdometerSystem sys = odometer_from_cusp(t, base_cusp, depth);
  EndTree f;
  std::vector<uint32_t> prev_cycle_of;
  for (size_t n = 0; n < sys.sizes.size(); ++n) {
    std::vector<std::vector<uint32_t>> cycles = sys.transforms[n].cycles();
    std::vector<uint32_t> cycle_of(sys.sizes[n], 0);
    std::vector<uint32_t> mins, lens, par;
    for (size_t c = 0; c < cycles.size(); ++c) {
      for (uint32_t x : cycles[c]) cycle_of[x] = static_cast<uint32_t>(c);
      mins.push_back(cycles[c].front());
      lens.push_back(static_cast<uint32_t>(cycles[c].size()));
      if (n > 0) {
        // All sheets of one cusp project into a single lower cusp.
        uint32_t p = prev_cycle_of[sys.q[n][cycles[c].front()]];
        for (uint32_t x : cycles[c])
          check_invariant(prev_cycle_of[sys.q[n][x]] == p,
                          "cusp projects to more than one cusp");
        par.push_back(p);
      }
    }
    f.cycle_min.push_back(std::move(mins));
    f.cycle_len.push_back(std::move(lens));
    if (n > 0) f.parent.push_back(par);
    prev_cycle_of = std::move(cycle_of);
  }
  f.children.resize(f.cycle_min.size());
  for (size_t d = 0; d < f.cycle_min.size(); ++d)
    f.children[d].resize(f.cycle_min[d].size());
  for (size_t d = 1; d < f.cycle_min.size(); ++d)
    for (size_t v = 0; v < f.cycle_min[d].size(); ++v)
      f.children[d - 1][f.parent[d - 1][v]].push_back(static_cast<uint32_t>(v));
  return f;
}

}  // namespace

EndForest end_forest(const Tower& t, size_t depth) {
  EndForest f;
  for (int j = 0; j < t.base->cusp_count; ++j)
    f.trees.push_back(end_tree(t, j, depth));
  return f;
}

std::string EndSpaceReport::str() const {
  std::ostringstream os;
  if (finite) {
    os << "finite(" << end_count << ")";
  } else {
    os << "Cantor-so-far, max-children (";
    for (size_t d = 0; d < max_children.size(); ++d) {
      if (d) os << ",";
      os << max_children[d];
    }
    os << ")";
  }
  return os.str();
}

std::vector<EndSpaceReport> classify_end_space(const EndForest& f,
                                               size_t window,
                                               bool uniform_required) {
  check_arg(window >= 1, "window must be positive");
  check_arg(!f.trees.empty(), "empty forest");
  std::vector<EndSpaceReport> out;
  for (const EndTree& tree : f.trees) {
    size_t depth = tree.depth();
    check_arg(depth >= window, "window exceeds the forest depth");
    EndSpaceReport rep;
    rep.end_count = static_cast<uint32_t>(tree.count_at(depth));
    for (size_t d = 0; d < depth; ++d) {
      uint32_t mx = 0;
      for (size_t v = 0; v < tree.count_at(d); ++v) {
        uint32_t deg = static_cast<uint32_t>(tree.children[d][v].size());
        if (uniform_required)
          check_invariant(deg == tree.children[d][0].size(),
                          "regular tower with non-uniform branching");
        if (deg > mx) mx = deg;
      }
      rep.max_children.push_back(mx);
      if (d + window >= depth && mx > 1) rep.finite = false;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string end_space_summary(const std::vector<EndSpaceReport>& reports) {
  check_arg(!reports.empty(), "no reports");
  bool all_same = true;
  for (const EndSpaceReport& r : reports)
    if (r.str() != reports[0].str()) all_same = false;
  if (all_same) return reports[0].str();
  std::ostringstream os;
  for (size_t j = 0; j < reports.size(); ++j) {
    if (j) os << "; ";
    os << "cusp " << j << ": " << reports[j].str();
  }
  return os.str();
}

std::string end_forest_dot(const EndForest& f) {
  std::ostringstream os;
  os << "digraph ends {\n  rankdir=TB;\n";
  for (size_t j = 0; j < f.trees.size(); ++j) {
    const EndTree& tree = f.trees[j];
    for (size_t d = 0; d < tree.cycle_min.size(); ++d)
      for (size_t v = 0; v < tree.count_at(d); ++v)
        os << "  c" << j << "_d" << d << "_" << v << " [label=\"w="
           << tree.cycle_len[d][v] << "\"];\n";
    for (size_t d = 1; d < tree.cycle_min.size(); ++d)
      for (size_t v = 0; v < tree.count_at(d); ++v)
        os << "  c" << j << "_d" << d - 1 << "_" << tree.parent[d - 1][v]
           << " -> c" << j << "_d" << d << "_" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string end_forest_json(const EndForest& f) {
  std::ostringstream os;
  os << "{\"schema_version\":1,\"kind\":\"end_forest\",\"trees\":[";
  for (size_t j = 0; j < f.trees.size(); ++j) {
    const EndTree& tree = f.trees[j];
    if (j) os << ",";
    os << "{\"cusp\":" << j << ",\"levels\":[";
    for (size_t d = 0; d < tree.cycle_min.size(); ++d) {
      if (d) os << ",";
      os << "{\"widths\":[";
      for (size_t v = 0; v < tree.count_at(d); ++v) {
        if (v) os << ",";
        os << tree.cycle_len[d][v];
      }
      os << "]";
      if (d > 0) {
        os << ",\"parents\":[";
        for (size_t v = 0; v < tree.count_at(d); ++v) {
          if (v) os << ",";
          os << tree.parent[d - 1][v];
        }
        os << "]";
      }
      os << "}";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace horotower
