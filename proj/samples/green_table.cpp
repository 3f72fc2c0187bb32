// Prints the Green polynomials Q^mu_rho(q) of GL_n for every Jordan type mu
// and class rho, e.g. `green_table 4`.

#include <cstdlib>
#include <iostream>

#include "springer/symfun.hpp"

int main(int argc, char** argv) {
  using namespace springer;
  const int n = argc > 1 ? std::atoi(argv[1]) : 3;
  if (n < 1 || n > 8) {
    std::cerr << "usage: green_table N (1 <= N <= 8)\n";
    return 2;
  }
  for (const auto& mu : partitions_of(n)) {
    std::cout << "mu = " << mu.to_string() << "\n";
    const GradedCharacter g = springer_graded_char(mu);
    for (const auto& rho : partitions_of(n)) std::cout << "  " << rho.to_string() << "  " << g[rho].to_string() << "\n";
  }
  return 0;
}
