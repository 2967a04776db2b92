#include "horotower/rewriting.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "horotower/common.hpp"

namespace horotower {

SchreierData schreier_data(const std::vector<Perm>& gens, uint32_t basepoint) {
  check_arg(!gens.empty(), "need at least one generator");
  uint32_t deg = gens[0].degree();
  for (const Perm& g : gens) {
    check_arg(g.degree() == deg, "generator degrees differ");
  }
  check_arg(basepoint < deg, "basepoint out of range");

  SchreierData sd;
  sd.degree = deg;
  sd.basepoint = basepoint;
  sd.rank = int(gens.size());
  sd.transversal.resize(deg);
  std::vector<std::vector<bool>> tree(deg,
                                      std::vector<bool>(gens.size(), false));
  std::vector<bool> visited(deg, false);
  std::queue<uint32_t> q;
  visited[basepoint] = true;
  q.push(basepoint);
  while (!q.empty()) {
    uint32_t p = q.front();
    q.pop();
    for (size_t i = 0; i < gens.size(); ++i) {
      uint32_t next = gens[i](p);
      if (!visited[next]) {
        visited[next] = true;
        tree[p][i] = true;
        sd.transversal[next] = Word::generator(int(i)) * sd.transversal[p];
        q.push(next);
      }
    }
  }
  for (uint32_t p = 0; p < deg; ++p) {
    check_arg(visited[p], "action is not transitive");
  }

  sd.edge_basis.assign(deg, std::vector<int32_t>(gens.size(), 0));
  for (uint32_t p = 0; p < deg; ++p) {
    for (size_t i = 0; i < gens.size(); ++i) {
      if (tree[p][i]) continue;
      uint32_t next = gens[i](p);
      sd.basis_words.push_back(sd.transversal[next].inverse() *
                               Word::generator(int(i)) * sd.transversal[p]);
      sd.edge_basis[p][i] = int32_t(sd.basis_words.size());
    }
  }
  check_invariant(
      sd.basis_words.size() == 1 + size_t(deg) * (gens.size() - 1),
      "stabilizer rank must be 1 + degree * (rank - 1)");
  return sd;
}

uint32_t track(const std::vector<Perm>& gens, const Word& w, uint32_t start) {
  // Rightmost letter acts first.
  std::vector<Perm> invs(gens.size());
  std::vector<bool> have(gens.size(), false);
  uint32_t p = start;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    size_t idx = size_t(std::abs(*it)) - 1;
    check_arg(idx < gens.size(), "word letter exceeds generator count");
    if (*it > 0) {
      p = gens[idx](p);
    } else {
      if (!have[idx]) {
        invs[idx] = gens[idx].inverse();
        have[idx] = true;
      }
      p = invs[idx](p);
    }
  }
  return p;
}

bool stabilizes(const std::vector<Perm>& gens, const Word& w,
                uint32_t basepoint) {
  return track(gens, w, basepoint) == basepoint;
}

Word rewrite_word(const SchreierData& sd, const std::vector<Perm>& gens,
                  const Word& w) {
  const auto& ls = w.letters();
  size_t k = ls.size();
  // traj[j] is the point before letter j (1-indexed from the left) acts;
  // the rightmost letter acts on the basepoint first.
  std::vector<uint32_t> traj(k + 1);
  traj[k] = sd.basepoint;
  std::vector<Perm> invs(gens.size());
  std::vector<bool> have(gens.size(), false);
  for (size_t j = k; j > 0; --j) {
    size_t idx = size_t(std::abs(ls[j - 1])) - 1;
    check_arg(idx < gens.size(), "word letter exceeds generator count");
    if (ls[j - 1] > 0) {
      traj[j - 1] = gens[idx](traj[j]);
    } else {
      if (!have[idx]) {
        invs[idx] = gens[idx].inverse();
        have[idx] = true;
      }
      traj[j - 1] = invs[idx](traj[j]);
    }
  }
  check_arg(traj[0] == sd.basepoint, "word does not stabilize the basepoint");

  std::vector<int32_t> out;
  for (size_t j = 1; j <= k; ++j) {
    size_t idx = size_t(std::abs(ls[j - 1])) - 1;
    if (ls[j - 1] > 0) {
      int32_t v = sd.edge_basis[traj[j]][idx];
      if (v != 0) out.push_back(v);
    } else {
      int32_t v = sd.edge_basis[traj[j - 1]][idx];
      if (v != 0) out.push_back(-v);
    }
  }
  return Word(std::move(out));
}

Word substitute(const Word& in_basis, const std::vector<Word>& basis_words) {
  Word out;
  for (int32_t l : in_basis.letters()) {
    size_t idx = size_t(std::abs(l)) - 1;
    check_arg(idx < basis_words.size(), "basis letter out of range");
    out = out * (l > 0 ? basis_words[idx] : basis_words[idx].inverse());
  }
  return out;
}

Word peripheral_subgroup_word(const SchreierData& sd, const Word& periph,
                              const std::vector<uint32_t>& cycle) {
  check_arg(!cycle.empty(), "cycle must be nonempty");
  uint32_t p = *std::min_element(cycle.begin(), cycle.end());
  return sd.transversal[p].inverse() * periph.pow(int64_t(cycle.size())) *
         sd.transversal[p];
}

}  // namespace horotower
