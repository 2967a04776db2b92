#include "horotower/word.hpp"

#include <cmath>
#include <cstdlib>

#include "horotower/common.hpp"

namespace horotower {

namespace {

// In-place free reduction via stack discipline.
std::vector<int32_t> reduce(const std::vector<int32_t>& in) {
  std::vector<int32_t> out;
  out.reserve(in.size());
  for (int32_t l : in) {
    check_arg(l != 0, "word letter must be nonzero");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

Word::Word(std::vector<int32_t> letters) : letters_(reduce(letters)) {}

Word Word::generator(int index, int exponent) {
  check_arg(index >= 0, "generator index must be nonnegative");
  Word w;
  if (exponent == 0) return w;
  int32_t l = exponent > 0 ? int32_t(index + 1) : -int32_t(index + 1);
  w.letters_.assign(size_t(std::abs(exponent)), l);
  return w;
}

Word Word::commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(-*it);
  }
  return w;
}

Word Word::pow(int64_t n) const {
  Word base = n >= 0 ? *this : inverse();
  int64_t k = n >= 0 ? n : -n;
  Word acc;
  for (int64_t i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

Word Word::conjugate(const Word& by) const { return by * *this * by.inverse(); }

int Word::max_generator_index() const {
  int m = -1;
  for (int32_t l : letters_) {
    int idx = int(std::abs(l)) - 1;
    if (idx > m) m = idx;
  }
  return m;
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ".";
    int idx = int(std::abs(letters_[i])) - 1;
    if (idx < int(names.size())) {
      s += names[size_t(idx)];
    } else {
      s += "x" + std::to_string(idx);
    }
    if (letters_[i] < 0) s += "^-1";
  }
  return s;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(letters_[i]);
  }
  return s;
}

Word operator*(const Word& a, const Word& b) {
  // Concatenate then cancel across the seam; both halves are already reduced,
  // so the constructor's reduction pass only trims the boundary.
  std::vector<int32_t> out = a.letters();
  out.reserve(out.size() + b.letters().size());
  for (int32_t l : b.letters()) out.push_back(l);
  return Word(std::move(out));
}

std::vector<int64_t> abelianize(const Word& w, int rank) {
  check_arg(rank >= 0, "rank must be nonnegative");
  std::vector<int64_t> e(size_t(rank), 0);
  for (int32_t l : w.letters()) {
    int idx = int(std::abs(l)) - 1;
    check_arg(idx < rank, "letter exceeds rank in abelianize");
    e[size_t(idx)] += l > 0 ? 1 : -1;
  }
  return e;
}

}  // namespace horotower
