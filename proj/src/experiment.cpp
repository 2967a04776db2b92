#include "horotower/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "horotower/common.hpp"
#include "horotower/finite_group.hpp"
#include "horotower/metric.hpp"
#include "horotower/solenoid.hpp"

#include "json.hpp"

namespace horotower {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::vector<PushforwardRow> pushforward_experiment(
    const Tower& tower, double y0, const std::vector<double>& t_list,
    size_t samples, const CellGrid& grid, uint64_t seed, unsigned threads) {
  check_arg(y0 > 0, "base height must be positive");
  check_arg(samples > 0, "sample count must be positive");
  check_arg(!t_list.empty(), "time list must not be empty");
  for (size_t i = 1; i < t_list.size(); ++i)
    check_arg(t_list[i] <= t_list[i - 1],
              "time list must be sorted descending");
  SolenoidTracker tracker(&tower);
  check_arg(grid.level <= tower.depth() &&
                grid.fiber_size == tower.levels[grid.level].cover.degree(),
            "grid fiber does not match the tower level");

  std::mt19937_64 rng(seed);
  std::vector<PushforwardRow> rows;
  const size_t chunk = size_t(1) << 16;
  const size_t n_chunks = (samples + chunk - 1) / chunk;
  unsigned workers =
      std::max<unsigned>(1, std::min<unsigned>(threads, unsigned(n_chunks)));

  for (double t : t_list) {
    // One common phase per time step; the stream position is fixed by the
    // time's rank, not by the thread schedule.
    double offset = double(rng() >> 11) * 0x1.0p-53;
    double height = y0 * std::exp(t);

    std::vector<uint64_t> counts(grid.cell_count(), 0);
    uint64_t inside = 0;
    double min_height = std::numeric_limits<double>::infinity();
    std::vector<uint8_t> visited(grid.fiber_size, 0);
    std::atomic<size_t> next{0};
    std::mutex merge;

    auto work = [&]() {
      std::vector<uint64_t> my_counts(grid.cell_count(), 0);
      uint64_t my_inside = 0;
      double my_min = std::numeric_limits<double>::infinity();
      std::vector<uint8_t> my_visited(grid.fiber_size, 0);
      for (size_t c = next.fetch_add(1); c < n_chunks;
           c = next.fetch_add(1)) {
        size_t hi = std::min(samples, (c + 1) * chunk);
        for (size_t k = c * chunk; k < hi; ++k) {
          double x = (double(k) + offset) / double(samples);
          SolenoidPoint sp = tracker.horocycle_sample(height, x);
          std::complex<double> z = base_point(sp.base);
          my_min = std::min(my_min, z.imag());
          uint32_t addr = sp.address[grid.level];
          my_visited[addr] = 1;
          ptrdiff_t idx =
              grid.locate(z.real(), z.imag(), tangent_angle(sp.base), addr);
          if (idx < 0) continue;
          ++my_counts[size_t(idx)];
          ++my_inside;
        }
      }
      std::lock_guard<std::mutex> lock(merge);
      for (size_t i = 0; i < counts.size(); ++i) counts[i] += my_counts[i];
      inside += my_inside;
      min_height = std::min(min_height, my_min);
      for (size_t i = 0; i < visited.size(); ++i) visited[i] |= my_visited[i];
    };

    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (std::thread& th : pool) th.join();

    PushforwardRow row;
    row.t = t;
    row.report = report_from_counts(counts, inside, grid);
    row.min_height = min_height;
    row.fiber_size = uint32_t(grid.fiber_size);
    for (uint8_t v : visited) row.fiber_visited += v;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_pushforward_csv(std::ostream& out,
                           const std::vector<PushforwardRow>& rows) {
  out << "t,coverage,max_missed_mass,discrepancy,min_height\n";
  for (const PushforwardRow& r : rows)
    out << fmt(r.t) << ',' << fmt(r.report.coverage) << ','
        << fmt(r.report.max_missed_mass) << ',' << fmt(r.report.discrepancy)
        << ',' << fmt(r.min_height) << '\n';
}

std::string pushforward_sidecar_json(const Tower& tower, const CellGrid& grid,
                                     double y0, size_t samples, uint64_t seed,
                                     const std::vector<PushforwardRow>& rows) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "horocycle_pushforward";
  doc["tower"] = tower.label;
  doc["level"] = grid.level;
  doc["y0"] = y0;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["grid"] = {{"y_max", grid.y_max},
                 {"n_re", grid.n_re},
                 {"n_im", grid.n_im},
                 {"n_theta", grid.n_theta},
                 {"fiber_size", grid.fiber_size}};
  nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
  for (const PushforwardRow& r : rows)
    out_rows.push_back({{"t", r.t},
                        {"coverage", r.report.coverage},
                        {"max_missed_mass", r.report.max_missed_mass},
                        {"discrepancy", r.report.discrepancy},
                        {"marginal_discrepancy", r.report.marginal_discrepancy},
                        {"min_height", r.min_height},
                        {"fiber_visited", r.fiber_visited},
                        {"fiber_size", r.fiber_size}});
  doc["rows"] = std::move(out_rows);
  return doc.dump(2) + "\n";
}

std::vector<EscapeRow> escape_experiment(double y0,
                                         const std::vector<double>& t_list,
                                         size_t samples) {
  check_arg(y0 > 0, "base height must be positive");
  check_arg(samples > 0, "sample count must be positive");
  check_arg(!t_list.empty(), "time list must not be empty");
  for (double t : t_list)
    check_arg(t > 0, "escape times must be strictly positive");
  CompactifiedMetric metric(nullptr);
  std::vector<CompactPoint> end = {end_point(0, {0})};
  std::vector<EscapeRow> rows;
  for (double t : t_list) {
    double height = y0 * std::exp(t);
    std::vector<SolenoidPoint> pts =
        closed_horocycle_samples(height, samples, nullptr);
    EscapeRow row;
    row.t = t;
    row.min_height = std::numeric_limits<double>::infinity();
    std::vector<CompactPoint> cp;
    cp.reserve(pts.size());
    for (SolenoidPoint& p : pts) {
      row.min_height = std::min(row.min_height, base_point(p.base).imag());
      cp.push_back(regular_point(std::move(p)));
    }
    row.end_distance = hausdorff_distance(cp, end, metric);
    rows.push_back(row);
  }
  return rows;
}

double haar_equidistribution_test(const Tower& tower, size_t level,
                                  size_t word_count, size_t word_length,
                                  uint64_t seed) {
  tower.validate();
  check_arg(tower.is_mccord(), "equidistribution needs every level normal");
  check_arg(level < tower.levels.size(), "level beyond the tower");
  check_arg(word_count > 0 && word_length > 0,
            "word count and length must be positive");
  const FiniteCover& cover = tower.levels[level].cover;
  std::vector<std::vector<uint32_t>> step;
  for (const Perm& p : cover.gen_perms) {
    step.push_back(p.images());
    step.push_back(p.inverse().images());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, step.size() - 1);
  std::vector<uint64_t> counts(cover.degree(), 0);
  for (size_t w = 0; w < word_count; ++w) {
    uint32_t x = cover.basepoint;
    for (size_t i = 0; i < word_length; ++i) x = step[pick(rng)][x];
    ++counts[x];
  }
  double tv = 0;
  double uniform = 1.0 / double(cover.degree());
  for (uint64_t c : counts)
    tv += std::abs(double(c) / double(word_count) - uniform);
  return tv / 2;
}

Tower mod2_matrix_tower() {
  auto base = std::make_shared<Presentation>(surface_group(1, 1));
  Tower t = tower_with_base(base, "mod-two matrix cover");
  auto G = std::make_shared<Psl2ModGroup>(2);
  FiniteAssignment rho;
  rho.images = {G->element(1, 1, 1, 0), G->element(1, 1, 0, 1)};
  rho.group = G;
  FiniteCover cover =
      cover_from_assignment(base, rho, "mod-two matrix cover level 1");
  extend_by_explicit(t, std::move(cover),
                     std::vector<uint32_t>(G->size(), 0));
  return t;
}

}  // namespace horotower
