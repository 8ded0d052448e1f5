// Build a certified degree-12 polynomial over F_101 and list irreducible specializations.
#include <iostream>

#include "dirichlet/json_io.hpp"

int main() {
  using namespace dirichlet;
  const PrimeField f(101);
  const ConstructionParams<PrimeField> params(FpPoly::parse(f, "X^2 + 3"), FpPoly::parse(f, "X + 1"), 12);
  const auto cert = construct_dirichlet(params);
  const auto sn = conclude_sn(cert);
  std::cout << sn_certificate_to_json(sn).dump(2) << "\n";
  for (u64 alpha : find_irreducible_offsets(cert, 5))
    std::cout << "alpha = " << alpha << ": " << cert.specialize(alpha).to_string() << "\n";
  return sn.certified() ? 0 : 1;
}
