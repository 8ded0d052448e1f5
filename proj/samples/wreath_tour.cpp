// Twisted wreath products from the group grammar, plus a Kaloujnine-Krasner embedding.
#include <iostream>

#include "dirichlet/group_spec.hpp"

int main() {
  using namespace dirichlet;
  const WreathSpec spec = parse_wreath_spec("twisted_wreath:{cyclic:3,sym:3,<(1 2)>,inversion}");
  const TwistedWreath w(spec.a, spec.g, spec.action);
  std::cout << "order " << w.order() << ", index " << w.index() << ", associative "
            << w.group().verify_associativity_exhaustive() << "\n";

  // the splitting a_(12) = 1 lifts to G -> A wr G
  const Hom j = lift_splitting(w, {0, 1});
  std::cout << "lift is a homomorphism: " << is_homomorphism(w.G(), w.group(), j) << "\n";

  const FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
  const KrasnerEmbedding k = kaloujnine_krasner_embed(z4, {0, 2}, z2, parse_hom(z4, z2, "1->1"));
  std::cout << "Z/4 embeds in a group of order " << k.wreath.order() << ", injective " << is_injective(k.i) << "\n";
  return 0;
}
