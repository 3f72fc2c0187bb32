// GL_4 with L = GL_2 x GL_2 and a swapping the blocks: the Green polynomial
// values at -1 against the coset counts, and the degree-mod-2 pieces of
// H*(B_u) against the induced characters.

#include <iostream>

#include "springer/springer.hpp"

int main() {
  using namespace springer;
  const InductionConfig cfg = make_cyclic_config(0, 2, 2);
  for (const auto& rep : {check_prop37(cfg), check_cor35(cfg), check_theorem17(cfg)}) {
    std::cout << rep.check << ": " << (rep.pass ? "pass" : "fail") << "\n";
    for (const auto& note : rep.notes) std::cout << "  " << note << "\n";
  }
  const TypeALayout lay = type_a_layout(cfg);
  const ExtendedGradedCharacter ext(lay);
  for (const auto& rho : partitions_of(4)) {
    Perm w(4);
    int next = 0;
    std::vector<std::vector<int>> cycles;
    for (int p : rho.parts()) {
      std::vector<int> c;
      for (int i = 0; i < p; ++i) c.push_back(++next);
      cycles.push_back(c);
    }
    w = Perm::from_cycles(4, cycles);
    std::cout << "  trace of (a, " << rho.to_string() << ") = " << gamma_ind_trace(ext, lay.W_L, w, 1).to_string() << "\n";
  }
  return 0;
}
