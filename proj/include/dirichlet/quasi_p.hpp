#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dirichlet/field.hpp"
#include "dirichlet/finite_group.hpp"

namespace dirichlet {

/// Conjugacy classes, each sorted, ordered by smallest element.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < g.order(); ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> c;
    for (int y = 0; y < g.order(); ++y) {
      const int z = g.conj(y, x);
      if (cls[static_cast<std::size_t>(z)] < 0) {
        cls[static_cast<std::size_t>(z)] = static_cast<int>(out.size());
        c.push_back(z);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

inline constexpr std::size_t kMaxClassesForNormalSearch = 20;

/// Every normal subgroup, found as the unions of conjugacy classes that are
/// closed under multiplication.
inline std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  require(classes.size() <= kMaxClassesForNormalSearch, Errc::GuardExceeded, "too many conjugacy classes");
  std::vector<std::vector<int>> out;
  const std::size_t rest = classes.size() - 1;  // class 0 is {1}
  for (unsigned long mask = 0; mask < (1UL << rest); ++mask) {
    std::vector<int> s{0};
    for (std::size_t i = 0; i < rest; ++i)
      if (mask >> i & 1) s.insert(s.end(), classes[i + 1].begin(), classes[i + 1].end());
    if (g.order() % static_cast<int>(s.size()) != 0) continue;
    std::sort(s.begin(), s.end());
    if (g.is_subgroup(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

/// H = Z/m x| Z/p^k with (a, x)(b, y) = (a + alpha^x b, x + y); index a*p^k + x.
struct QuasiPReport {
  FiniteGroup group;
  int p = 0, k = 0, m = 0, alpha = 0;
  /// (a): the p-elements generate H, and (0,1), (1,1) have order p^k.
  bool generated_by_sylows = false;
  /// (1,1)^(p^k) computed by the closed form ((1 - alpha^(p^k)) / (1 - alpha), 0).
  bool closed_form_identity = false;
  /// (b): every normal N with p not dividing (H:N) equals H.
  bool only_trivial_prime_to_p_quotient = false;
  std::vector<int> prime_to_p_quotient_orders;
  /// (c): for each n | p^k m, the subgroup A x| B of order n.
  std::map<int, std::vector<int>> subgroup_of_order;
  bool all_orders_realized = false;
};

inline QuasiPReport quasi_p_semidirect(int p, int k, int m, int alpha) {
  require(p >= 2 && nt::is_prime(static_cast<u64>(p)), Errc::InvalidArgument, "p must be prime");
  require(k >= 1 && m >= 2, Errc::InvalidArgument, "need k >= 1 and m >= 2");
  require(m % p != 0, Errc::InvalidArgument, "p divides m");
  int pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  require(static_cast<long>(pk) * m <= kGroupOrderGuard, Errc::OrderGuardExceeded, "group order exceeds guard");
  alpha = ((alpha % m) + m) % m;
  require(std::gcd(alpha, m) == 1, Errc::InvalidArgument, "alpha is not a unit mod m");
  int ord = 1;
  for (long x = alpha; x % m != 1 % m; x = x * alpha % m) ++ord;
  require(ord == p, Errc::InvalidArgument, "alpha must have multiplicative order p mod m");

  std::vector<int> apow(static_cast<std::size_t>(pk));
  apow[0] = 1 % m;
  for (int x = 1; x < pk; ++x) apow[static_cast<std::size_t>(x)] = apow[static_cast<std::size_t>(x - 1)] * alpha % m;
  const int n = pk * m;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    const int a = u / pk, x = u % pk;
    labels.push_back("(" + std::to_string(a) + "," + std::to_string(x) + ")");
    for (int v = 0; v < n; ++v) {
      const int b = v / pk, y = v % pk;
      table[u][v] = ((a + apow[static_cast<std::size_t>(x)] * b) % m) * pk + (x + y) % pk;
    }
  }
  QuasiPReport r{FiniteGroup::from_table(std::move(table), std::move(labels)), p, k, m, alpha, false, false, false, {}, {}, false};
  const FiniteGroup& h = r.group;
  auto el = [pk](int a, int x) { return a * pk + x; };

  std::vector<int> p_elements;
  for (int u = 0; u < n; ++u)
    if (pk % h.element_order(u) == 0) p_elements.push_back(u);
  const bool two_gens = h.element_order(el(0, 1)) == pk && h.element_order(el(1, 1)) == pk &&
                        static_cast<int>(h.closure({el(0, 1), el(1, 1)}).size()) == n;
  r.generated_by_sylows = two_gens && static_cast<int>(h.closure(p_elements).size()) == n;

  // closed form: sum_{i < p^k} alpha^i = (1 - alpha^(p^k)) / (1 - alpha) when 1 - alpha is a unit
  long geometric = 0;
  for (int i = 0; i < pk; ++i) geometric = (geometric + apow[static_cast<std::size_t>(i)]) % m;
  bool closed = geometric == 0 && h.pow(el(1, 1), pk) == 0;
  const int one_minus = ((1 - alpha) % m + m) % m;
  if (std::gcd(one_minus, m) == 1) {
    const long alpha_pk = static_cast<long>(apow[static_cast<std::size_t>(pk - 1)]) * alpha % m;
    const long top = ((1 - alpha_pk) % m + m) % m;
    int inv = 1;
    while (static_cast<long>(one_minus) * inv % m != 1) ++inv;
    closed = closed && (top * inv % m == 0);
  }
  r.closed_form_identity = closed;

  r.only_trivial_prime_to_p_quotient = true;
  for (const auto& nsub : normal_subgroups(h)) {
    const int idx = n / static_cast<int>(nsub.size());
    if (idx % p != 0) {
      r.prime_to_p_quotient_orders.push_back(idx);
      if (idx != 1) r.only_trivial_prime_to_p_quotient = false;
    }
  }

  r.all_orders_realized = true;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int q = std::gcd(d, pk), n0 = d / q;
    // A = unique subgroup of Z/m of order n0, B = unique subgroup of Z/p^k of order q
    std::vector<int> members = h.closure({el(m / n0 % m, 0), el(0, pk / q % pk)});
    if (static_cast<int>(members.size()) != d) r.all_orders_realized = false;
    r.subgroup_of_order[d] = std::move(members);
  }
  return r;
}

}  // namespace dirichlet
