// Command line front end.  Exit codes: 0 on success, 2 when the input is
// rejected before any computation runs, 1 when a structural invariant fails
// mid-run (the diagnostic names the invariant).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "horotower/builders.hpp"
#include "horotower/common.hpp"
#include "horotower/congruence.hpp"
#include "horotower/end_forest.hpp"
#include "horotower/experiment.hpp"
#include "horotower/grid.hpp"
#include "horotower/odometer.hpp"
#include "horotower/serialize.hpp"
#include "horotower/tower.hpp"

namespace {

using namespace horotower;
using ordered_json = nlohmann::ordered_json;

std::string fmtg(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  check_arg(bool(f), "cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  check_arg(bool(f), "cannot open output file: " + path);
  f << text;
  f.flush();
  check_arg(bool(f), "cannot write output file: " + path);
}

std::string sidecar_path(const std::string& out) {
  if (out.size() > 4 && out.substr(out.size() - 4) == ".csv")
    return out.substr(0, out.size() - 4) + ".json";
  return out + ".json";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_number(const std::string& s) {
  check_arg(!s.empty(), "empty entry in number list");
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + s);
  }
  check_arg(pos == s.size() && std::isfinite(v), "not a number: " + s);
  return v;
}

// Comma separated times.  A literal "..." continues the arithmetic
// progression set by the two entries before it until the entry after it,
// which must lie on the step lattice: -2,-4,...,-12 runs down to -12.
std::vector<double> parse_time_list(const std::string& text) {
  std::vector<std::string> tokens = split(text, ',');
  std::vector<double> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != "...") {
      out.push_back(parse_number(tokens[i]));
      continue;
    }
    check_arg(out.size() >= 2, "time list needs two entries before '...'");
    check_arg(i + 1 < tokens.size(), "time list needs an entry after '...'");
    double target = parse_number(tokens[i + 1]);
    ++i;
    double step = out[out.size() - 1] - out[out.size() - 2];
    check_arg(step != 0, "time list step is zero at '...'");
    double tol = 1e-9 * std::max(1.0, std::abs(step));
    check_arg((target - out.back()) * step > -tol,
              "entry after '...' runs against the step direction");
    while (std::abs(out.back() - target) > tol) {
      double next = out.back() + step;
      check_arg((target - next) * step > -tol,
                "entry after '...' is not on the step lattice");
      out.push_back(next);
    }
    out.back() = target;
  }
  check_arg(!out.empty(), "time list is empty");
  return out;
}

struct GridShape {
  size_t n_re = 0, n_im = 0, n_theta = 0;
};

GridShape parse_grid_shape(const std::string& text) {
  std::vector<std::string> parts = split(text, 'x');
  check_arg(parts.size() == 3, "grid must look like 24x24x12 (re x im x angle)");
  GridShape g;
  size_t* slots[3] = {&g.n_re, &g.n_im, &g.n_theta};
  for (int i = 0; i < 3; ++i) {
    double v = parse_number(parts[i]);
    check_arg(v >= 1 && v == std::floor(v) && v <= 4096,
              "grid counts must be whole numbers in [1, 4096]");
    *slots[i] = size_t(v);
  }
  return g;
}

// "3..7" is an inclusive range, "7" a single level.
std::pair<uint32_t, uint32_t> parse_level_range(const std::string& text) {
  size_t dots = text.find("..");
  auto one = [](const std::string& s) {
    double v = parse_number(s);
    check_arg(v >= 0 && v == std::floor(v) && v <= 1e6, "bad level: " + s);
    return uint32_t(v);
  };
  if (dots == std::string::npos) {
    uint32_t n = one(text);
    return {n, n};
  }
  uint32_t lo = one(text.substr(0, dots));
  uint32_t hi = one(text.substr(dots + 2));
  check_arg(lo <= hi, "level range runs backwards: " + text);
  return {lo, hi};
}

Tower load_tower(const std::string& path) {
  check_arg(!path.empty(), "a tower file is required");
  return tower_from_json(read_file(path));
}

size_t resolve_depth(const Tower& t, int depth_flag) {
  if (depth_flag < 0) return t.depth();
  check_arg(size_t(depth_flag) <= t.depth(),
            "--depth exceeds the depth stored in the tower file");
  return size_t(depth_flag);
}

struct BuildOpts {
  std::string example, out;
  int depth = -1;
  int m = 3;
  int kmax = -1;
  uint32_t p = 0;
  int cusps = 1;
};

void cmd_tower_build(const BuildOpts& o) {
  auto need_depth = [&] {
    check_arg(o.depth >= 0, "--depth is required for example " + o.example);
    return o.depth;
  };
  Tower t;
  if (o.example == "class1") {
    t = build_class1(need_depth());
  } else if (o.example == "class1m") {
    t = build_class1m(o.m, need_depth());
  } else if (o.example == "class2") {
    t = build_class2(need_depth());
  } else if (o.example == "class3") {
    t = build_class3_closed(need_depth());
  } else if (o.example == "nonregular") {
    t = build_nonregular_one_cusp(need_depth());
  } else if (o.example == "congruence") {
    check_arg(o.kmax >= 1, "--kmax is required for example congruence");
    t = build_congruence_tower(o.kmax);
  } else if (o.example == "padic") {
    check_arg(o.p >= 2, "--p is required for example padic");
    t = build_padic_suspension(o.p, o.cusps, need_depth());
  } else if (o.example == "gamma2-class2") {
    t = build_gamma2_class2(need_depth());
  } else {
    throw std::invalid_argument(
        "unknown example: " + o.example +
        " (choose class1, class1m, class2, class3, nonregular, congruence, "
        "padic, gamma2-class2)");
  }
  write_output(o.out, tower_to_json(t));
  if (!o.out.empty())
    std::cout << "wrote " << o.out << " (depth " << t.depth()
              << ", top degree " << t.levels.back().cover.degree() << ")\n";
}

struct ClassifyOpts {
  std::string in;
  int cusp = 0;
};

void cmd_tower_classify(const ClassifyOpts& o) {
  Tower t = load_tower(o.in);
  std::cout << classify_trichotomy(t, o.cusp).str() << "\n";
}

struct EndsOpts {
  std::string in, format = "json", out;
  int depth = -1;
};

void cmd_tower_ends(const EndsOpts& o) {
  Tower t = load_tower(o.in);
  EndForest f = end_forest(t, resolve_depth(t, o.depth));
  std::string text;
  if (o.format == "json") {
    text = end_forest_json(f) + "\n";
  } else if (o.format == "dot") {
    text = end_forest_dot(f);
  } else {
    throw std::invalid_argument("ends supports --format json or dot");
  }
  write_output(o.out, text);
}

struct OrbitOpts {
  std::string in, format = "csv", out;
  int cusp = 0;
  int depth = -1;
  int64_t steps = 10;
  int64_t start = -1;
};

void cmd_odometer_orbit(const OrbitOpts& o) {
  Tower t = load_tower(o.in);
  size_t d = resolve_depth(t, o.depth);
  OdometerSystem sys = odometer_from_cusp(t, o.cusp, d);
  Address a = o.start < 0 ? basepoint_address(t, d)
                          : address_of_point(sys, uint32_t(o.start));
  int64_t dir = o.steps < 0 ? -1 : 1;
  std::vector<Address> rows{a};
  for (int64_t k = dir; k != o.steps + dir; k += dir)
    rows.push_back(step(sys, rows.back(), dir));
  if (o.format == "csv") {
    std::ostringstream os;
    os << "k";
    for (size_t n = 0; n <= d; ++n) os << ",level" << n;
    os << "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
      os << (int64_t(r) * dir);
      for (uint32_t p : rows[r].points) os << "," << p;
      os << "\n";
    }
    write_output(o.out, os.str());
  } else if (o.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "odometer_orbit";
    doc["cusp"] = o.cusp;
    doc["depth"] = d;
    doc["rows"] = ordered_json::array();
    for (size_t r = 0; r < rows.size(); ++r)
      doc["rows"].push_back(
          {{"k", int64_t(r) * dir}, {"points", rows[r].points}});
    write_output(o.out, doc.dump(2) + "\n");
  } else {
    throw std::invalid_argument("orbit supports --format csv or json");
  }
}

struct DecomposeOpts {
  std::string in, format = "json", out;
  int cusp = 0;
  int depth = -1;
};

void cmd_odometer_decompose(const DecomposeOpts& o) {
  Tower t = load_tower(o.in);
  size_t d = resolve_depth(t, o.depth);
  OdometerSystem sys = odometer_from_cusp(t, o.cusp, d);
  std::vector<OdometerComponent> comps = minimal_decomposition(sys, d);
  bool minimal = is_minimal(sys);
  if (o.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "odometer_decomposition";
    doc["cusp"] = o.cusp;
    doc["depth"] = d;
    doc["minimal"] = minimal;
    doc["component_count"] = comps.size();
    doc["components"] = ordered_json::array();
    for (const OdometerComponent& c : comps)
      doc["components"].push_back(
          {{"cycle_min", c.cycle_min}, {"cycle_len", c.cycle_len}});
    write_output(o.out, doc.dump(2) + "\n");
  } else if (o.format == "csv") {
    std::ostringstream os;
    os << "component,level,cycle_min,cycle_len\n";
    for (size_t i = 0; i < comps.size(); ++i)
      for (size_t n = 0; n < comps[i].cycle_min.size(); ++n)
        os << i << "," << n << "," << comps[i].cycle_min[n] << ","
           << comps[i].cycle_len[n] << "\n";
    write_output(o.out, os.str());
  } else {
    throw std::invalid_argument("decompose supports --format json or csv");
  }
  if (!o.out.empty())
    std::cout << comps.size() << " minimal component"
              << (comps.size() == 1 ? "" : "s") << " at depth " << d
              << (minimal ? " (system is minimal)\n" : "\n");
}

struct CongruenceOpts {
  std::string range = "3..12", format = "table", out;
};

void cmd_congruence_verify(const CongruenceOpts& o) {
  auto [lo, hi] = parse_level_range(o.range);
  std::vector<CongruenceRow> rows = verify_formulas(lo, hi);
  std::string text;
  if (o.format == "table") {
    std::ostringstream os;
    char line[128];
    std::snprintf(line, sizeof line, "%4s %14s %12s %14s %12s %6s\n", "n",
                  "index.formula", "index.enum", "cusps.formula", "cusps.enum",
                  "genus");
    os << line;
    for (const CongruenceRow& r : rows) {
      std::snprintf(line, sizeof line, "%4u %14llu %12llu %14llu %12llu %6llu\n",
                    r.n, (unsigned long long)r.index_formula_value,
                    (unsigned long long)r.index_bruteforce,
                    (unsigned long long)r.cusps_formula,
                    (unsigned long long)r.cusps_bruteforce,
                    (unsigned long long)r.genus);
      os << line;
    }
    text = os.str();
  } else if (o.format == "csv") {
    text = congruence_table_csv(rows);
  } else if (o.format == "json") {
    text = congruence_table_json(rows) + "\n";
  } else {
    throw std::invalid_argument("verify supports --format table, csv, or json");
  }
  write_output(o.out, text);
}

struct PushOpts {
  std::string tower, times, grid = "24x24x12", out;
  double y0 = 1.0;
  double y_max = 3.0;
  uint64_t samples = 0;
  uint64_t level = 1;
  uint64_t seed = 0;
  uint64_t threads = 1;
};

void cmd_flow_push(const PushOpts& o) {
  check_arg(!o.out.empty(), "--out is required for flow push");
  check_arg(o.samples > 0, "--samples must be positive");
  Tower t = load_tower(o.tower);
  GridShape gs = parse_grid_shape(o.grid);
  CellGrid grid = build_grid(o.y_max, gs.n_re, gs.n_im, gs.n_theta, t, o.level);
  std::vector<double> times = parse_time_list(o.times);
  std::vector<PushforwardRow> rows = pushforward_experiment(
      t, o.y0, times, o.samples, grid, o.seed,
      unsigned(std::max<uint64_t>(1, o.threads)));
  std::ostringstream csv;
  write_pushforward_csv(csv, rows);
  write_output(o.out, csv.str());
  std::string side = sidecar_path(o.out);
  write_output(side,
               pushforward_sidecar_json(t, grid, o.y0, o.samples, o.seed, rows));
  std::cout << "wrote " << o.out << " and " << side << " (" << rows.size()
            << " rows)\n";
}

struct EscapeOpts {
  std::string times, out;
  double y0 = 1.0;
  uint64_t samples = 256;
};

void cmd_flow_escape(const EscapeOpts& o) {
  std::vector<EscapeRow> rows =
      escape_experiment(o.y0, parse_time_list(o.times), o.samples);
  std::ostringstream os;
  os << "t,min_height,end_distance\n";
  for (const EscapeRow& r : rows)
    os << fmtg(r.t) << "," << fmtg(r.min_height) << "," << fmtg(r.end_distance)
       << "\n";
  write_output(o.out, os.str());
}

struct HaarOpts {
  std::string tower, format = "text", out;
  uint64_t level = 1;
  uint64_t words = 100000;
  uint64_t length = 50;
  uint64_t seed = 0;
};

void cmd_haar_test(const HaarOpts& o) {
  Tower t = load_tower(o.tower);
  double tv = haar_equidistribution_test(t, o.level, o.words, o.length, o.seed);
  uint32_t sheets = t.levels[o.level].cover.degree();
  if (o.format == "text") {
    std::ostringstream os;
    os << "total variation to uniform at level " << o.level << ": " << fmtg(tv)
       << " (" << sheets << " sheets, " << o.words << " words of length "
       << o.length << ", seed " << o.seed << ")\n";
    write_output(o.out, os.str());
  } else if (o.format == "json") {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["kind"] = "haar_test";
    doc["tower"] = t.label;
    doc["level"] = o.level;
    doc["sheets"] = sheets;
    doc["words"] = o.words;
    doc["word_length"] = o.length;
    doc["seed"] = o.seed;
    doc["tv_distance"] = tv;
    write_output(o.out, doc.dump(2) + "\n");
  } else {
    throw std::invalid_argument("haar test supports --format text or json");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Towers of finite covers over punctured surfaces: cusp growth, "
      "odometers, congruence counting, and horocycle flow statistics."};
  app.require_subcommand(1);

  BuildOpts build_opts;
  ClassifyOpts classify_opts;
  EndsOpts ends_opts;
  OrbitOpts orbit_opts;
  DecomposeOpts decompose_opts;
  CongruenceOpts congruence_opts;
  PushOpts push_opts;
  EscapeOpts escape_opts;
  HaarOpts haar_opts;

  CLI::App* tower = app.add_subcommand("tower", "Build and inspect towers.");
  tower->require_subcommand(1);
  CLI::App* tb = tower->add_subcommand(
      "build", "Construct a named example tower and write it as JSON.");
  tb->add_option("--example", build_opts.example,
                 "class1, class1m, class2, class3, nonregular, congruence, "
                 "padic, or gamma2-class2")
      ->required();
  tb->add_option("--depth", build_opts.depth, "number of proper levels");
  tb->add_option("--m", build_opts.m, "cyclic order for class1m (default 3)");
  tb->add_option("--kmax", build_opts.kmax,
                 "top modulus exponent for the congruence example");
  tb->add_option("--p", build_opts.p, "prime for the padic example");
  tb->add_option("--cusps", build_opts.cusps,
                 "base cusp count for the padic example (default 1)");
  tb->add_option("--out", build_opts.out, "output file (default stdout)");
  tb->callback([&] { cmd_tower_build(build_opts); });

  CLI::App* tc = tower->add_subcommand(
      "classify",
      "Classify the cusp count sequence over one base cusp: constant one, "
      "stabilized, or still growing at the top level.");
  tc->add_option("--in", classify_opts.in, "tower file")->required();
  tc->add_option("--cusp", classify_opts.cusp, "base cusp (default 0)");
  tc->callback([&] { cmd_tower_classify(classify_opts); });

  CLI::App* te = tower->add_subcommand(
      "ends", "Emit the cusp tree (one vertex per cusp per level).");
  te->add_option("--in", ends_opts.in, "tower file")->required();
  te->add_option("--depth", ends_opts.depth,
                 "truncate at this depth (default full)");
  te->add_option("--format", ends_opts.format, "json or dot (default json)");
  te->add_option("--out", ends_opts.out, "output file (default stdout)");
  te->callback([&] { cmd_tower_ends(ends_opts); });

  CLI::App* od =
      app.add_subcommand("odometer", "Peripheral return map dynamics.");
  od->require_subcommand(1);
  CLI::App* oo = od->add_subcommand(
      "orbit", "Iterate the return map on compatible addresses.");
  oo->add_option("--in", orbit_opts.in, "tower file")->required();
  oo->add_option("--cusp", orbit_opts.cusp, "base cusp (default 0)");
  oo->add_option("--depth", orbit_opts.depth,
                 "truncate at this depth (default full)");
  oo->add_option("--steps", orbit_opts.steps,
                 "number of steps, negative runs backwards (default 10)");
  oo->add_option("--start", orbit_opts.start,
                 "deepest-level start point (default the basepoint address)");
  oo->add_option("--format", orbit_opts.format, "csv or json (default csv)");
  oo->add_option("--out", orbit_opts.out, "output file (default stdout)");
  oo->callback([&] { cmd_odometer_orbit(orbit_opts); });

  CLI::App* odc = od->add_subcommand(
      "decompose",
      "Split the truncated return system into minimal components.");
  odc->add_option("--in", decompose_opts.in, "tower file")->required();
  odc->add_option("--cusp", decompose_opts.cusp, "base cusp (default 0)");
  odc->add_option("--depth", decompose_opts.depth,
                  "truncate at this depth (default full)");
  odc->add_option("--format", decompose_opts.format,
                  "json or csv (default json)");
  odc->add_option("--out", decompose_opts.out, "output file (default stdout)");
  odc->callback([&] { cmd_odometer_decompose(decompose_opts); });

  CLI::App* cg = app.add_subcommand(
      "congruence", "Principal congruence subgroup bookkeeping.");
  cg->require_subcommand(1);
  CLI::App* cv = cg->add_subcommand(
      "verify",
      "Compare index and cusp count formulas against direct enumeration of "
      "the finite matrix groups.");
  cv->add_option("--n", congruence_opts.range,
                 "level or inclusive range, e.g. 7 or 3..12 (default 3..12)");
  cv->add_option("--format", congruence_opts.format,
                 "table, csv, or json (default table)");
  cv->add_option("--out", congruence_opts.out, "output file (default stdout)");
  cv->callback([&] { cmd_congruence_verify(congruence_opts); });

  CLI::App* fl = app.add_subcommand("flow", "Geodesic and horocycle flows.");
  fl->require_subcommand(1);
  CLI::App* fp = fl->add_subcommand(
      "push",
      "Spread samples along the closed horocycle at height y0*exp(t), "
      "reduce them into the fundamental domain with their sheet addresses, "
      "and bin against the reference cell grid.");
  fp->add_option("--tower", push_opts.tower, "tower file")->required();
  fp->add_option("--y0", push_opts.y0, "starting height (default 1)");
  fp->add_option("--t", push_opts.times,
                 "times, descending; '...' continues the progression, e.g. "
                 "-2,-4,...,-12")
      ->required();
  fp->add_option("--samples", push_opts.samples, "points per horocycle")
      ->required();
  fp->add_option("--grid", push_opts.grid,
                 "re x im x angle bin counts (default 24x24x12)");
  fp->add_option("--y-max", push_opts.y_max,
                 "height cutoff of the reference window (default 3)");
  fp->add_option("--level", push_opts.level,
                 "tower level whose sheets the grid resolves (default 1)");
  fp->add_option("--seed", push_opts.seed,
                 "phase seed; equal configurations give byte-identical "
                 "outputs (default 0)");
  fp->add_option("--threads", push_opts.threads,
                 "worker cap, never changes the results (default 1)");
  fp->add_option("--out", push_opts.out,
                 "CSV output; a .json sidecar with the full grid "
                 "configuration lands next to it")
      ->required();
  fp->callback([&] { cmd_flow_push(push_opts); });

  CLI::App* fe = fl->add_subcommand(
      "escape",
      "Push the horocycle forward (t > 0) and report the minimal reduced "
      "height and the distance to the ideal end above the cusp.");
  fe->add_option("--y0", escape_opts.y0, "starting height (default 1)");
  fe->add_option("--t", escape_opts.times, "positive times, e.g. 1,2,...,8")
      ->required();
  fe->add_option("--samples", escape_opts.samples,
                 "points per horocycle (default 256)");
  fe->add_option("--out", escape_opts.out, "output file (default stdout)");
  fe->callback([&] { cmd_flow_escape(escape_opts); });

  CLI::App* ha = app.add_subcommand("haar", "Uniform sheet statistics.");
  ha->require_subcommand(1);
  CLI::App* ht = ha->add_subcommand(
      "test",
      "Walk random words in the deck generators and measure the total "
      "variation between the visited-sheet distribution and uniform.");
  ht->add_option("--tower", haar_opts.tower, "tower file")->required();
  ht->add_option("--level", haar_opts.level, "tower level (default 1)");
  ht->add_option("--words", haar_opts.words,
                 "number of random words (default 100000)");
  ht->add_option("--length", haar_opts.length,
                 "letters per word (default 50)");
  ht->add_option("--seed", haar_opts.seed, "PRNG seed (default 0)");
  ht->add_option("--format", haar_opts.format, "text or json (default text)");
  ht->add_option("--out", haar_opts.out, "output file (default stdout)");
  ht->callback([&] { cmd_haar_test(haar_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const horotower::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
