// Weak solutions of Z/4 -> Z/2 against Z/2 x Z/2 -> Z/2.
#include <iostream>

#include "dirichlet/cli.hpp"

int main() {
  using namespace dirichlet;
  const EmbeddingProblem ep = cli::parse_problem(cli::kCatalogZ4Z2);
  for (const auto& s : enumerate_weak_solutions(ep)) {
    std::cout << "theta:";
    for (int x = 0; x < ep.gamma.order(); ++x) std::cout << ' ' << ep.gamma.label(x) << "->" << ep.g.label(s.theta[static_cast<std::size_t>(x)]);
    std::cout << (s.surjective ? "  surjective\n" : "  not surjective\n");
  }
  return 0;
}
