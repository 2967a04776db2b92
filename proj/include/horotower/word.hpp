#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace horotower {

// Freely reduced word in a free group.  Letters are nonzero int32:
// +(i+1) is generator i, -(i+1) its inverse.  Every constructor and
// operation keeps the letter vector freely reduced.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int32_t> letters);

  static Word generator(int index, int exponent = 1);
  static Word commutator(const Word& x, const Word& y);  // x y x^-1 y^-1

  const std::vector<int32_t>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word pow(int64_t n) const;
  Word conjugate(const Word& by) const;  // by * w * by^-1

  // Largest generator index appearing (0-based), or -1 for the empty word.
  int max_generator_index() const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;  // letters as signed numbers

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

private:
  std::vector<int32_t> letters_;
};

Word operator*(const Word& a, const Word& b);

// Exponent sums per generator.
std::vector<int64_t> abelianize(const Word& w, int rank);

}  // namespace horotower
