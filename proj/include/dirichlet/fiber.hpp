#pragma once

#include <map>
#include <string>
#include <vector>

#include "dirichlet/finite_group.hpp"

namespace dirichlet {

/// Compatible tuples (g_1, ..., g_k) with alpha_1(g_1) = ... = alpha_k(g_k),
/// multiplied componentwise.
struct FiberProduct {
  FiniteGroup group;
  std::vector<std::vector<int>> tuples;
  std::vector<Hom> projections;
  /// The common image in the base.
  Hom to_base;
};

namespace detail {

inline FiberProduct fiber_of(const std::vector<const FiniteGroup*>& gs, const std::vector<const Hom*>& alphas,
                             const FiniteGroup& base) {
  const std::size_t k = gs.size();
  for (std::size_t i = 0; i < k; ++i) {
    require(is_homomorphism(*gs[i], base, *alphas[i]), Errc::InvalidArgument, "fiber map is not a homomorphism");
    require(is_surjective(*alphas[i], base), Errc::NotSurjective, "fiber map is not surjective");
  }
  std::vector<std::vector<std::vector<int>>> fibers(k, std::vector<std::vector<int>>(static_cast<std::size_t>(base.order())));
  for (std::size_t i = 0; i < k; ++i)
    for (int g = 0; g < gs[i]->order(); ++g) fibers[i][static_cast<std::size_t>((*alphas[i])[static_cast<std::size_t>(g)])].push_back(g);
  long total = 0;
  for (int a = 0; a < base.order(); ++a) {
    long c = 1;
    for (std::size_t i = 0; i < k; ++i) c *= static_cast<long>(fibers[i][static_cast<std::size_t>(a)].size());
    total += c;
    require(total <= kGroupOrderGuard, Errc::OrderGuardExceeded, "fiber product exceeds guard");
  }
  FiberProduct fp;
  std::map<std::vector<int>, int> index;
  for (int a = 0; a < base.order(); ++a) {
    std::vector<std::size_t> ctr(k, 0);
    for (;;) {
      std::vector<int> t(k);
      for (std::size_t i = 0; i < k; ++i) t[i] = fibers[i][static_cast<std::size_t>(a)][ctr[i]];
      index.emplace(t, static_cast<int>(fp.tuples.size()));
      fp.tuples.push_back(std::move(t));
      fp.to_base.push_back(a);
      std::size_t i = 0;
      while (i < k && ++ctr[i] == fibers[i][static_cast<std::size_t>(a)].size()) ctr[i++] = 0;
      if (i == k) break;
    }
  }
  const int n = static_cast<int>(fp.tuples.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + gs[i]->label(fp.tuples[x][i]);
    labels.push_back(l + ")");
    for (int y = 0; y < n; ++y) {
      std::vector<int> t(k);
      for (std::size_t i = 0; i < k; ++i) t[i] = gs[i]->mul(fp.tuples[x][i], fp.tuples[y][i]);
      table[x][y] = index.at(t);
    }
  }
  // the fibre over the base identity starts with the identity of every factor
  require(fp.tuples.front() == std::vector<int>(k, 0), Errc::InvalidArgument, "identity tuple is not first");
  fp.group = FiniteGroup::from_table(std::move(table), std::move(labels));
  fp.projections.assign(k, Hom(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i) fp.projections[i][static_cast<std::size_t>(x)] = fp.tuples[x][i];
  return fp;
}

}  // namespace detail

inline FiberProduct fiber_product(const FiniteGroup& g1, const Hom& alpha1, const FiniteGroup& g2, const Hom& alpha2,
                                  const FiniteGroup& base) {
  return detail::fiber_of({&g1, &g2}, {&alpha1, &alpha2}, base);
}

/// G^I_A: the fiber product of `copies` copies of alpha: G -> A.
inline FiberProduct fiber_power(const FiniteGroup& g, const Hom& alpha, const FiniteGroup& base, int copies) {
  require(copies >= 1, Errc::InvalidArgument, "fiber power needs at least one copy");
  return detail::fiber_of(std::vector<const FiniteGroup*>(static_cast<std::size_t>(copies), &g),
                          std::vector<const Hom*>(static_cast<std::size_t>(copies), &alpha), base);
}

}  // namespace dirichlet
