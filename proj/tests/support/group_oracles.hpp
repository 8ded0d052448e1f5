// Brute-force group references for the test suites. They work on raw image
// vectors and multiplication tables and never call the library's searches.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "dirichlet/finite_group.hpp"

namespace oracle {

using Images = std::vector<int>;

inline Images compose(const Images& g, const Images& h) {
  Images r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
  return r;
}

/// Closure by repeated multiplication until no new products appear.
inline std::set<Images> naive_closure(const std::vector<Images>& gens, int n) {
  Images id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  std::set<Images> s{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Images> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& g : gens)
        if (s.insert(compose(g, a)).second) grew = true;
  }
  return s;
}

/// Calls `visit` with every set partition of {0..n-1} (as a block-label vector).
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      visit(label);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      label[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) return;
  label[0] = 0;
  rec(1, 1);
}

/// Primitive iff transitive and no partition into k equal cells (1 < k < n)
/// is preserved by every generator.
inline bool primitive_by_partitions(const std::vector<Images>& gens, int n) {
  bool preserved_found = false;
  for_each_partition(n, [&](const std::vector<int>& label) {
    if (preserved_found) return;
    const int k = *std::max_element(label.begin(), label.end()) + 1;
    if (k == 1 || k == n) return;
    std::vector<int> size(static_cast<std::size_t>(k), 0);
    for (int l : label) ++size[static_cast<std::size_t>(l)];
    for (int s : size)
      if (s != size[0]) return;
    for (const auto& g : gens) {
      // g must send each block into a single block
      std::vector<int> target(static_cast<std::size_t>(k), -1);
      for (int x = 0; x < n; ++x) {
        int& t = target[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])];
        const int img = label[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])];
        if (t == -1) t = img;
        else if (t != img) return;
      }
    }
    preserved_found = true;
  });
  return !preserved_found;
}

/// Every homomorphism src -> dst, by assigning images element by element and
/// checking phi(xy) = phi(x)phi(y) on all assigned pairs. Uses only mul().
inline std::vector<std::vector<int>> all_homs(const dirichlet::FiniteGroup& src, const dirichlet::FiniteGroup& dst) {
  const int n = src.order();
  std::vector<std::vector<int>> out;
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::function<void(int)> assign = [&](int x) {
    if (x == n) {
      out.push_back(phi);
      return;
    }
    for (int v = 0; v < dst.order(); ++v) {
      if (x == 0 && v != 0) break;
      phi[static_cast<std::size_t>(x)] = v;
      bool ok = true;
      for (int y = 0; y <= x && ok; ++y)
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
          const int ab = src.mul(a, b);
          if (ab > x) continue;
          ok = ok && phi[static_cast<std::size_t>(ab)] == dst.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]);
        }
      if (ok) assign(x + 1);
    }
    phi[static_cast<std::size_t>(x)] = -1;
  };
  assign(0);
  return out;
}

}  // namespace oracle
