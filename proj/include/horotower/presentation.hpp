#pragma once

#include <string>
#include <vector>

#include "horotower/word.hpp"

namespace horotower {

// Fundamental group of a genus-g surface with m >= 1 punctures, presented on
// the free generators a_1,b_1,...,a_g,b_g,c_1,...,c_{m-1} (free rank
// 2g + m - 1).  The m boundary words P_1..P_m satisfy
//   P_1 P_2 ... P_m = [a_1,b_1][a_2,b_2]...[a_g,b_g]
// as freely reduced words: P_j = c_j for j < m and P_m is solved from the
// relation.
struct Presentation {
  int genus = 0;
  int cusp_count = 0;  // m >= 1
  std::vector<std::string> generator_names;
  std::vector<Word> peripherals;  // size m

  int free_rank() const { return 2 * genus + cusp_count - 1; }
};

// Generator index layout: a_i = 2i, b_i = 2i+1 for i < g, then c_j = 2g + j
// for j < m-1.
Presentation surface_group(int genus, int cusps);

}  // namespace horotower
