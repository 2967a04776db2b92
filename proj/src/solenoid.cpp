#include "horotower/solenoid.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "horotower/common.hpp"

namespace horotower {

namespace {

constexpr double kDomainSlack = 1e-9;

bool in_domain(const Psl2Point& p) {
  std::complex<double> z = base_point(p);
  return std::abs(z.real()) <= 0.5 + kDomainSlack &&
         std::norm(z) >= 1.0 - 2 * kDomainSlack;
}

}  // namespace

SolenoidTracker::CycleTable SolenoidTracker::table_of(const Perm& p) {
  SolenoidTracker::CycleTable t;
  uint32_t n = p.degree();
  t.cycle_id.resize(n);
  t.cycle_pos.resize(n);
  t.elems.reserve(n);
  t.offset.push_back(0);
  std::vector<std::vector<uint32_t>> cycles = p.cycles();
  for (uint32_t c = 0; c < cycles.size(); ++c) {
    for (uint32_t i = 0; i < cycles[c].size(); ++i) {
      uint32_t x = cycles[c][i];
      t.cycle_id[x] = c;
      t.cycle_pos[x] = i;
      t.elems.push_back(x);
    }
    t.offset.push_back(uint32_t(t.elems.size()));
  }
  return t;
}

uint32_t SolenoidTracker::CycleTable::apply(uint32_t x, int64_t power) const {
  uint32_t cid = cycle_id[x];
  int64_t len = int64_t(offset[cid + 1]) - int64_t(offset[cid]);
  int64_t r = (int64_t(cycle_pos[x]) + power) % len;
  if (r < 0) r += len;
  return elems[offset[cid] + uint32_t(r)];
}

SolenoidTracker::SolenoidTracker(const Tower* tower) : tower_(tower) {
  if (tower_ == nullptr) return;
  tower_->validate();
  check_arg(tower_->base->genus == 0 && tower_->base->cusp_count == 3,
            "flow towers must sit over the three-cusp sphere");
  levels_ = tower_->levels.size();
  gen_a_.resize(levels_);
  gen_b_.resize(levels_);
  for (size_t n = 0; n < levels_; ++n) {
    const FiniteCover& cover = tower_->levels[n].cover;
    gen_a_[n] = table_of(cover.gen_perms[0]);
    gen_b_[n] = table_of(cover.gen_perms[1]);
  }
}

std::vector<uint32_t> SolenoidTracker::initial_address() const {
  std::vector<uint32_t> a(levels_);
  for (size_t n = 0; n < levels_; ++n) a[n] = tower_->levels[n].cover.basepoint;
  return a;
}

void SolenoidTracker::apply_kernel(const IntMat& gamma,
                                   std::vector<uint32_t>& address) const {
  if (levels_ == 0) return;
  std::vector<Gamma2Letter> letters = peel_gamma2(gamma);
  for (const Gamma2Letter& l : letters) {
    for (size_t n = 0; n < levels_; ++n) {
      // A^e reads as the first cusp loop to the e; B^e as the second to the
      // minus e.  Normalizing divides by the evaluated action, so the signs
      // flip once more.
      if (l.gen == 0) {
        address[n] = gen_a_[n].apply(address[n], -l.exp);
      } else {
        address[n] = gen_b_[n].apply(address[n], l.exp);
      }
    }
  }
}

int SolenoidTracker::consume_word(const DeckWord& w, int coset,
                                  std::vector<uint32_t>& address) const {
  for (int64_t run : w.runs) {
    IntMat m;
    if (run == 0) {
      m.a = 0;
      m.b = -1;
      m.c = 1;
      m.d = 0;
    } else {
      m.b = run;
    }
    Gamma2Split split = split_gamma2(imat_mul(gamma2_coset_rep(coset), m));
    apply_kernel(split.gamma, address);
    coset = split.coset;
  }
  return coset;
}

void SolenoidTracker::check_compatible(
    const std::vector<uint32_t>& address) const {
  for (size_t n = 1; n < levels_; ++n) {
    check_invariant(tower_->levels[n].q[address[n]] == address[n - 1],
                    "address compatibility q(f_n) = f_{n-1} violated");
  }
}

SolenoidPoint SolenoidTracker::from_global(const Psl2Point& u) const {
  ReduceResult red = reduce(u);
  SolenoidPoint sp;
  sp.base = red.reduced;
  sp.address = initial_address();
  sp.coset = consume_word(red.word, 0, sp.address);
  check_compatible(sp.address);
  return sp;
}

SolenoidPoint SolenoidTracker::horocycle_sample(double height, double x) const {
  check_arg(height > 0, "horocycle height must be positive");
  double r = std::sqrt(height);
  return from_global(psl2_point(r, x / r, 0, 1 / r));
}

SolenoidPoint SolenoidTracker::flow(const SolenoidPoint& sp, FlowKind kind,
                                    double parameter) const {
  check_arg(sp.address.size() == levels_,
            "point address length does not match the tower");
  check_arg(sp.coset >= 0 && sp.coset < kGamma2CosetCount,
            "coset index out of range");
  check_arg(in_domain(sp.base), "point is not reduced");
  Psl2Point moved = kind == FlowKind::kGeodesic
                        ? geodesic_flow(sp.base, parameter)
                        : horocycle_flow(sp.base, parameter);
  ReduceResult red = reduce(moved);
  SolenoidPoint out;
  out.base = red.reduced;
  out.address = sp.address;
  out.coset = consume_word(red.word, sp.coset, out.address);
  check_compatible(out.address);
  return out;
}

SolenoidPoint flow_solenoid(const SolenoidPoint& sp, FlowKind kind,
                            double parameter, const Tower* tower) {
  return SolenoidTracker(tower).flow(sp, kind, parameter);
}

std::vector<SolenoidPoint> closed_horocycle_samples(double height, size_t count,
                                                    const Tower* tower) {
  check_arg(height > 0, "horocycle height must be positive");
  check_arg(count >= 1, "need at least one sample");
  SolenoidTracker tracker(tower);
  std::vector<SolenoidPoint> out;
  out.reserve(count);
  // Flow parameter step 1/(count*height) moves Re z by 1/count each time.
  for (size_t k = 0; k < count; ++k) {
    out.push_back(tracker.horocycle_sample(height, double(k) / double(count)));
  }
  return out;
}

void write_samples_csv(std::ostream& out,
                       const std::vector<SolenoidPoint>& samples) {
  size_t levels = samples.empty() ? 0 : samples.front().address.size();
  out << "re,im,theta";
  for (size_t n = 0; n < levels; ++n) out << ",level" << n << "_addr";
  out << "\n";
  char buf[96];
  for (const SolenoidPoint& sp : samples) {
    check_arg(sp.address.size() == levels,
              "samples carry addresses of mixed depth");
    std::complex<double> z = base_point(sp.base);
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g", z.real(), z.imag(),
                  tangent_angle(sp.base));
    out << buf;
    for (uint32_t a : sp.address) out << ',' << a;
    out << "\n";
  }
}

}  // namespace horotower
