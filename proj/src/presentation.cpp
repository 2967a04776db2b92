#include "horotower/presentation.hpp"

#include "horotower/common.hpp"

namespace horotower {

Presentation surface_group(int genus, int cusps) {
  check_arg(genus >= 0, "genus must be nonnegative");
  check_arg(cusps >= 1, "need at least one puncture");
  Presentation p;
  p.genus = genus;
  p.cusp_count = cusps;
  for (int i = 0; i < genus; ++i) {
    p.generator_names.push_back("a" + std::to_string(i + 1));
    p.generator_names.push_back("b" + std::to_string(i + 1));
  }
  for (int j = 0; j + 1 < cusps; ++j) {
    p.generator_names.push_back("c" + std::to_string(j + 1));
  }
  check_invariant(int(p.generator_names.size()) == p.free_rank(),
                  "generator count must equal free rank");

  Word handles;  // product of handle commutators
  for (int i = 0; i < genus; ++i) {
    handles = handles * Word::commutator(Word::generator(2 * i),
                                         Word::generator(2 * i + 1));
  }
  Word prefix;  // P_1 ... P_{m-1}
  for (int j = 0; j + 1 < cusps; ++j) {
    Word pj = Word::generator(2 * genus + j);
    p.peripherals.push_back(pj);
    prefix = prefix * pj;
  }
  // P_m closes the relation P_1...P_m = handles.
  p.peripherals.push_back(prefix.inverse() * handles);
  return p;
}

}  // namespace horotower
