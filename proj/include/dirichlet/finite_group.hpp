#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dirichlet/perm_group.hpp"

namespace dirichlet {

inline constexpr int kGroupOrderGuard = 5000;

/// Map between finite groups given by the image of every element index.
using Hom = std::vector<int>;

/// Finite group given by a multiplication table; element 0 is the identity.
/// The table is verified to be a group at construction.
class FiniteGroup {
 public:
  /// table[a][b] = a*b. The identity may sit anywhere; it is moved to index 0.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(table.size());
    require(n >= 1, Errc::InvalidArgument, "empty multiplication table");
    require(n <= kGroupOrderGuard, Errc::OrderGuardExceeded, "group order " + std::to_string(n) + " exceeds guard");
    for (const auto& row : table) {
      require(static_cast<int>(row.size()) == n, Errc::InvalidArgument, "multiplication table is not square");
      for (int v : row) require(v >= 0 && v < n, Errc::InvalidArgument, "table entry out of range");
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
      bool ok = true;
      for (int b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
      if (ok) e = a;
    }
    require(e >= 0, Errc::InvalidArgument, "no identity element");
    if (labels.empty())
      for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    require(static_cast<int>(labels.size()) == n, Errc::InvalidArgument, "label count mismatch");
    if (e != 0) {
      // swap labels 0 and e
      auto sw = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
      std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[sw(a)][sw(b)] = sw(table[a][b]);
      table = std::move(t);
      std::swap(labels[0], labels[static_cast<std::size_t>(e)]);
    }
    FiniteGroup g;
    g.n_ = n;
    g.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.mul_[g.at(a, b)] = static_cast<std::uint16_t>(table[a][b]);
    g.labels_ = std::move(labels);
    g.finish();
    return g;
  }

  static FiniteGroup trivial() { return cyclic(1); }

  static FiniteGroup cyclic(int n) {
    require(n >= 1 && n <= kGroupOrderGuard, Errc::OrderGuardExceeded, "cyclic order out of range");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
  }

  /// Group generated by permutations; elements are labelled in cycle notation
  /// and the realization is kept.
  static FiniteGroup from_perms(const PermGroup& pg) {
    const auto& els = pg.elements();
    require(els.size() <= static_cast<std::size_t>(kGroupOrderGuard), Errc::OrderGuardExceeded,
            "group order " + std::to_string(els.size()) + " exceeds guard");
    std::unordered_map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < els.size(); ++i) index.emplace(els[i].key(), static_cast<int>(i));
    const int n = static_cast<int>(els.size());
    FiniteGroup g;
    g.n_ = n;
    g.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g.mul_[g.at(a, b)] = static_cast<std::uint16_t>(index.at((els[a] * els[b]).key()));
    for (const auto& p : els) g.labels_.push_back(p.to_string());
    g.perms_ = els;
    g.degree_ = pg.degree();
    g.finish();
    return g;
  }

  static FiniteGroup symmetric(int n) { return from_perms(PermGroup::symmetric(n)); }

  /// Symmetries of the n-gon, order 2n, acting on n points.
  static FiniteGroup dihedral(int n) {
    require(n >= 3, Errc::InvalidArgument, "dihedral group needs n >= 3");
    std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      rot[static_cast<std::size_t>(i)] = (i + 1) % n;
      ref[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return from_perms(PermGroup(n, {Permutation(rot), Permutation(ref)}));
  }

  /// Pairs (g, h) with index g*|H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const long total = static_cast<long>(g.order()) * h.order();
    require(total <= kGroupOrderGuard, Errc::OrderGuardExceeded, "direct product exceeds guard");
    const int n = static_cast<int>(total);
    FiniteGroup d;
    d.n_ = n;
    d.mul_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ga = a / h.order(), ha = a % h.order(), gb = b / h.order(), hb = b % h.order();
        d.mul_[d.at(a, b)] = static_cast<std::uint16_t>(g.mul(ga, gb) * h.order() + h.mul(ha, hb));
      }
    for (int a = 0; a < n; ++a) d.labels_.push_back("(" + g.label(a / h.order()) + "," + h.label(a % h.order()) + ")");
    d.finish();
    return d;
  }

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[at(a, b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int pow(int a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = 0;
    while (k--) r = mul(r, a);
    return r;
  }
  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  /// A small generating set, chosen greedily in index order.
  const std::vector<int>& generators() const { return gens_; }
  /// Permutation realization, when the group was built from permutations.
  const std::optional<std::vector<Permutation>>& perms() const { return perms_; }
  int perm_degree() const { return degree_; }

  std::optional<int> index_of_label(const std::string& s) const {
    for (int a = 0; a < n_; ++a)
      if (labels_[static_cast<std::size_t>(a)] == s) return a;
    return std::nullopt;
  }

  /// Subgroup generated by `gens`, as a sorted list of element indices.
  std::vector<int> closure(const std::vector<int>& gens) const {
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    std::vector<int> out{0};
    in[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int s : gens) {
        int y = mul(out[i], s);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_subgroup(const std::vector<int>& s) const {
    if (s.empty()) return false;
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    for (int x : s) {
      if (x < 0 || x >= n_) return false;
      in[static_cast<std::size_t>(x)] = 1;
    }
    if (!in[0]) return false;
    for (int a : s)
      for (int b : s)
        if (!in[static_cast<std::size_t>(mul(a, inv(b)))]) return false;
    return true;
  }

  bool is_normal(const std::vector<int>& s) const {
    if (!is_subgroup(s)) return false;
    std::vector<char> in(static_cast<std::size_t>(n_), 0);
    for (int x : s) in[static_cast<std::size_t>(x)] = 1;
    for (int g : gens_)
      for (int x : s)
        if (!in[static_cast<std::size_t>(conj(g, x))]) return false;
    return true;
  }

  /// Group axioms by brute force over all triples; used by tests on small orders.
  bool verify_associativity_exhaustive() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
      }
    return true;
  }

 private:
  std::size_t at(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + b; }

  /// Checks the Latin-square and inverse properties, picks generators, then
  /// runs Light's associativity test on them. Every element is a left-nested
  /// product of generators, so this covers all triples.
  void finish() {
    for (int a = 0; a < n_; ++a) {
      std::vector<char> row(static_cast<std::size_t>(n_), 0), col(static_cast<std::size_t>(n_), 0);
      for (int b = 0; b < n_; ++b) {
        row[mul(a, b)] = 1;
        col[mul(b, a)] = 1;
      }
      for (int b = 0; b < n_; ++b) require(row[b] && col[b], Errc::InvalidArgument, "table is not a Latin square");
    }
    inv_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == 0) inv_[static_cast<std::size_t>(a)] = b;
    std::vector<char> span(static_cast<std::size_t>(n_), 0);
    span[0] = 1;
    int covered = 1;
    for (int g = 1; g < n_ && covered < n_; ++g) {
      if (span[static_cast<std::size_t>(g)]) continue;
      gens_.push_back(g);
      // left-nested words in the generators
      std::vector<int> frontier;
      for (int x = 0; x < n_; ++x)
        if (span[static_cast<std::size_t>(x)]) frontier.push_back(x);
      for (std::size_t i = 0; i < frontier.size(); ++i)
        for (int s : gens_) {
          int y = mul(frontier[i], s);
          if (!span[static_cast<std::size_t>(y)]) {
            span[static_cast<std::size_t>(y)] = 1;
            ++covered;
            frontier.push_back(y);
          }
        }
    }
    for (int s : gens_)
      for (int x = 0; x < n_; ++x) {
        const int xs = mul(x, s);
        for (int y = 0; y < n_; ++y)
          require(mul(xs, y) == mul(x, mul(s, y)), Errc::InvalidArgument, "multiplication is not associative");
      }
  }

  int n_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> labels_;
  std::optional<std::vector<Permutation>> perms_;
  int degree_ = 0;
};

/// The subgroup on `members` (sorted, identity first) as a group in its own
/// right; element i corresponds to members[i].
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& members) {
  require(g.is_subgroup(members), Errc::NotASubgroup, "element set is not a subgroup");
  std::vector<int> m = members;
  std::sort(m.begin(), m.end());
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < m.size(); ++i) pos[static_cast<std::size_t>(m[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> t(m.size(), std::vector<int>(m.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.size(); ++i) {
    labels.push_back(g.label(m[i]));
    for (std::size_t j = 0; j < m.size(); ++j) t[i][j] = pos[static_cast<std::size_t>(g.mul(m[i], m[j]))];
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

/// Extends generator images to a homomorphism by walking left-nested words.
/// Returns nullopt when the assignment is inconsistent or the generators do
/// not generate the source.
inline std::optional<Hom> extend_hom(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& gens,
                                     const std::vector<int>& images) {
  require(gens.size() == images.size(), Errc::InvalidArgument, "generator/image count mismatch");
  Hom h(static_cast<std::size_t>(src.order()), -1);
  h[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = src.mul(x, gens[k]);
      const int want = dst.mul(h[static_cast<std::size_t>(x)], images[k]);
      int& slot = h[static_cast<std::size_t>(y)];
      if (slot < 0) {
        slot = want;
        queue.push_back(y);
      } else if (slot != want) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != src.order()) return std::nullopt;
  return h;
}

/// phi(x s) = phi(x) phi(s) for every x and every generator s of the source.
inline bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const Hom& phi) {
  if (static_cast<int>(phi.size()) != src.order()) return false;
  for (int v : phi)
    if (v < 0 || v >= dst.order()) return false;
  for (int s : src.generators())
    for (int x = 0; x < src.order(); ++x)
      if (phi[static_cast<std::size_t>(src.mul(x, s))] != dst.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(s)]))
        return false;
  return phi.empty() || phi[0] == 0;
}

inline std::vector<int> hom_image(const Hom& phi) {
  std::vector<int> im(phi.begin(), phi.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

inline std::vector<int> hom_kernel(const Hom& phi) {
  std::vector<int> k;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] == 0) k.push_back(static_cast<int>(i));
  return k;
}

inline bool is_injective(const Hom& phi) { return hom_image(phi).size() == phi.size(); }
inline bool is_surjective(const Hom& phi, const FiniteGroup& dst) {
  return static_cast<int>(hom_image(phi).size()) == dst.order();
}

inline Hom compose(const Hom& outer, const Hom& inner) {
  Hom r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[static_cast<std::size_t>(inner[i])];
  return r;
}

}  // namespace dirichlet
