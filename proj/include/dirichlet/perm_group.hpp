#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dirichlet/permutation.hpp"

namespace dirichlet {

inline constexpr int kClosureMaxDegree = 12;
inline constexpr std::size_t kClosureMaxElements = 4'000'000;

/// Partition of the points into equal-size blocks; each block ascending,
/// blocks ordered by their smallest point.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;

  bool trivial_full() const { return blocks.size() == 1; }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Permutation group given by generators. The element list is computed once
/// on first request and shared between copies.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators)
      : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    require(degree >= 1, Errc::InvalidArgument, "degree must be positive");
    for (const auto& g : gens_) require(g.degree() == degree, Errc::InvalidArgument, "generator of wrong degree");
  }

  /// Generators given in cycle notation.
  static PermGroup parse(int degree, const std::vector<std::string>& gens) {
    std::vector<Permutation> v;
    for (const auto& s : gens) v.push_back(Permutation::parse(s, degree));
    return PermGroup(degree, std::move(v));
  }

  static PermGroup symmetric(int n) {
    std::vector<Permutation> g;
    if (n >= 2) g.push_back(Permutation::cycle(n, {0, 1}));
    if (n >= 3) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      g.push_back(Permutation::cycle(n, all));
    }
    return PermGroup(n, std::move(g));
  }

  static PermGroup cyclic(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return PermGroup(n, {Permutation::cycle(n, all)});
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// All elements, identity first, in breadth-first discovery order.
  const std::vector<Permutation>& elements() const {
    std::call_once(cache_->once, [this] { cache_->elements = compute_closure(); });
    return cache_->elements;
  }

  std::size_t order() const { return elements().size(); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    const auto& els = elements();
    return std::find(els.begin(), els.end(), p) != els.end();
  }

  std::vector<int> orbit(int point) const {
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    std::vector<int> out{point};
    seen[static_cast<std::size_t>(point)] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const auto& g : gens_) {
        int y = g(out[i]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbit sizes, sorted descending.
  std::vector<int> orbit_sizes() const {
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    std::vector<int> sizes;
    for (int x = 0; x < degree_; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      auto o = orbit(x);
      for (int y : o) seen[static_cast<std::size_t>(y)] = true;
      sizes.push_back(static_cast<int>(o.size()));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
  }

  bool is_transitive() const { return static_cast<int>(orbit(0).size()) == degree_; }

  /// Stabilizer of a point, generated greedily from the closure.
  PermGroup stabilizer(int point) const {
    std::vector<Permutation> members;
    for (const auto& g : elements())
      if (g(point) == point) members.push_back(g);
    return generated_by(degree_, members);
  }

  /// Subgroup generated by `members`, keeping only generators that enlarge it.
  static PermGroup generated_by(int degree, const std::vector<Permutation>& members) {
    std::vector<Permutation> gens;
    std::unordered_set<std::uint64_t> span{Permutation::identity(degree).key()};
    for (const auto& m : members) {
      if (span.count(m.key())) continue;
      gens.push_back(m);
      PermGroup h(degree, gens);
      span.clear();
      for (const auto& e : h.elements()) span.insert(e.key());
    }
    return PermGroup(degree, std::move(gens));
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
  };

  std::vector<Permutation> compute_closure() const {
    require(degree_ <= kClosureMaxDegree, Errc::DegreeTooLarge,
            "closure limited to degree " + std::to_string(kClosureMaxDegree));
    const Permutation id = Permutation::identity(degree_);
    std::vector<std::uint64_t> order{id.key()};
    std::unordered_set<std::uint64_t> seen{id.key()};
    std::vector<std::vector<int>> gimg;
    for (const auto& g : gens_) gimg.push_back(g.images());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::uint64_t cur = order[i];
      for (const auto& g : gimg) {
        std::uint64_t next = 0;
        for (int x = 0; x < degree_; ++x) {
          auto hx = static_cast<int>((cur >> (4 * x)) & 0xF);
          next |= static_cast<std::uint64_t>(g[static_cast<std::size_t>(hx)]) << (4 * x);
        }
        if (seen.insert(next).second) {
          order.push_back(next);
          require(order.size() <= kClosureMaxElements, Errc::DegreeTooLarge, "closure exceeds element guard");
        }
      }
    }
    std::vector<Permutation> out;
    out.reserve(order.size());
    for (auto k : order) out.push_back(Permutation::from_key(k, degree_));
    return out;
  }

  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  /// Merges classes; the smaller root survives. Returns the absorbed root or -1.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return b;
  }
};

}  // namespace detail

/// Smallest block system in which points a and b share a block
/// (Atkinson's refinement on the generators).
inline BlockSystem minimal_block(const PermGroup& g, int a, int b) {
  require(g.is_transitive(), Errc::NotTransitive, "minimal_block needs a transitive group");
  const int n = g.degree();
  require(a >= 0 && a < n && b >= 0 && b < n, Errc::InvalidArgument, "seed point out of range");
  detail::UnionFind uf(n);
  std::deque<std::pair<int, int>> queue;
  if (uf.unite(a, b) >= 0) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      int u = s(x), v = s(y);
      if (uf.unite(u, v) >= 0) queue.emplace_back(u, v);
    }
  }
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) cells[static_cast<std::size_t>(uf.find(x))].push_back(x);
  BlockSystem out;
  for (auto& c : cells)
    if (!c.empty()) out.blocks.push_back(std::move(c));
  return out;
}

/// Transitive and no block system other than the trivial ones.
inline bool is_primitive(const PermGroup& g) {
  require(g.is_transitive(), Errc::NotTransitive, "primitivity is defined for transitive groups");
  for (int x = 1; x < g.degree(); ++x)
    if (!minimal_block(g, 0, x).trivial_full()) return false;
  return true;
}

struct SnClause {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SnVerdict {
  bool accepted = false;
  std::vector<SnClause> clauses;
  /// Name of the first failing clause, empty on acceptance.
  std::string failed_clause;
};

inline constexpr std::size_t kWitnessRandomBudget = 4000;

namespace detail {

/// Looks for an element satisfying `pred`: generators, then seeded random
/// words, then the closure when the degree allows it.
template <class Pred>
std::optional<Permutation> find_witness(const PermGroup& g, Pred pred, std::uint64_t seed) {
  for (const auto& s : g.generators())
    if (pred(s)) return s;
  if (g.generators().empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.generators().size() - 1);
  Permutation cur = Permutation::identity(g.degree());
  for (std::size_t t = 0; t < kWitnessRandomBudget; ++t) {
    cur = cur * g.generators()[pick(rng)];
    if (pred(cur)) return cur;
    // powers of a random element often isolate a single cycle
    const auto ord = cur.order();
    for (unsigned long long d = 2; d < ord; ++d) {
      if (ord % d != 0) continue;
      Permutation q = cur.pow(static_cast<long long>(d));
      if (pred(q)) return q;
    }
  }
  if (g.degree() > kClosureMaxDegree) return std::nullopt;
  for (const auto& e : g.elements())
    if (pred(e)) return e;
  return std::nullopt;
}

}  // namespace detail

/// Certifies that the evidence group is S_n: n/2 < e < n, gcd(e, n) = 1,
/// transitive, contains an e-cycle and a transposition.
inline SnVerdict certify_symmetric(int n, int e, const PermGroup& evidence, std::uint64_t seed = 0x5eed) {
  SnVerdict v;
  auto add = [&](std::string name, bool ok, std::string detail) {
    v.clauses.push_back({name, ok, std::move(detail)});
    if (!ok && v.failed_clause.empty()) v.failed_clause = name;
    return ok;
  };
  // both arithmetic clauses are always recorded
  const bool in_range = add("range", 2 * e > n && e < n, "n=" + std::to_string(n) + " e=" + std::to_string(e));
  const bool coprime = add("coprime", std::gcd(e, n) == 1, "gcd(e,n)=" + std::to_string(std::gcd(e, n)));
  if (in_range && coprime) {
    const bool same_degree = evidence.degree() == n;
    if (add("transitive", same_degree && evidence.is_transitive(),
            same_degree ? "orbit of 1 has size " + std::to_string(evidence.orbit(0).size()) : "degree mismatch")) {
      const CycleType want_e = CycleType::single_cycle(e, n);
      auto ecyc = detail::find_witness(evidence, [&](const Permutation& p) { return p.cycle_type() == want_e; }, seed);
      if (add("e-cycle", ecyc.has_value(), ecyc ? ecyc->to_string() : "no e-cycle found")) {
        const CycleType want_t = CycleType::single_cycle(2, n);
        auto tr = detail::find_witness(evidence, [&](const Permutation& p) { return p.cycle_type() == want_t; },
                                       seed + 1);
        add("transposition", tr.has_value(), tr ? tr->to_string() : "no transposition found");
      }
    }
  }
  v.accepted = v.failed_clause.empty() && v.clauses.size() == 5;
  return v;
}

/// Left-multiplication action of `group` on the left cosets of `subgroup`.
/// Cosets are labelled in breadth-first discovery order starting from H.
inline PermGroup action_on_cosets(const PermGroup& group, const PermGroup& subgroup) {
  require(group.degree() == subgroup.degree(), Errc::NotASubgroup, "degree mismatch");
  for (const auto& h : subgroup.generators())
    require(group.contains(h), Errc::NotASubgroup, "generator " + h.to_string() + " is not in the group");
  const auto& hs = subgroup.elements();
  auto canon = [&](const Permutation& g) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& h : hs) best = std::min(best, (g * h).key());
    return best;
  };
  std::vector<Permutation> reps{Permutation::identity(group.degree())};
  std::unordered_map<std::uint64_t, int> label{{canon(reps[0]), 0}};
  std::vector<std::vector<int>> images(group.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t k = 0; k < group.generators().size(); ++k) {
      Permutation next = group.generators()[k] * reps[i];
      auto key = canon(next);
      auto [it, fresh] = label.emplace(key, static_cast<int>(reps.size()));
      if (fresh) reps.push_back(next);
      images[k].push_back(it->second);
    }
  }
  std::vector<Permutation> gens;
  for (auto& img : images) gens.emplace_back(std::move(img));
  return PermGroup(static_cast<int>(reps.size()), std::move(gens));
}

}  // namespace dirichlet
