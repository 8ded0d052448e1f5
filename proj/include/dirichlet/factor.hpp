#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "dirichlet/polynomial.hpp"

namespace dirichlet {

using FpPoly = Polynomial<PrimeField>;
using QPoly = Polynomial<RationalField>;

inline constexpr u64 kDefaultSeed = 0x5eedcafe20261017ULL;

/// base^e mod m.
template <Field F>
Polynomial<F> powmod(Polynomial<F> base, u64 e, const Polynomial<F>& m) {
  Polynomial<F> r = Polynomial<F>::one(m.field()) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return r;
}

/// unit * prod(factor_i ^ mult_i) with monic irreducible, pairwise distinct factors.
template <Field F>
struct FactorMultiset {
  std::vector<std::pair<Polynomial<F>, unsigned>> factors;
  typename F::value_type unit;

  Polynomial<F> expand(const F& field) const {
    Polynomial<F> acc = Polynomial<F>::constant(field, unit);
    for (const auto& [g, k] : factors) acc = acc * g.pow(k);
    return acc;
  }

  /// Irreducible-factor degrees with multiplicity, sorted descending.
  std::vector<int> degree_multiset() const {
    std::vector<int> out;
    for (const auto& [g, k] : factors)
      for (unsigned i = 0; i < k; ++i) out.push_back(g.degree());
    std::sort(out.rbegin(), out.rend());
    return out;
  }
};

namespace detail {

inline bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
}

/// Inverse Frobenius on F_p[X] for a polynomial in X^p.
inline FpPoly pth_root(const FpPoly& f) {
  const u64 p = f.field().modulus();
  std::vector<u64> v;
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) v.push_back(f.coeffs()[k]);
  return FpPoly(f.field(), std::move(v));
}

inline void squarefree_into(const FpPoly& f, unsigned scale, std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const PrimeField& fd = f.field();
  FpPoly df = f.derivative();
  if (df.is_zero()) {
    squarefree_into(pth_root(f), scale * static_cast<unsigned>(fd.modulus()), out);
    return;
  }
  FpPoly c = poly_gcd(f, df);
  FpPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = poly_gcd(w, c);
    FpPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_into(pth_root(c.monic()), scale * static_cast<unsigned>(fd.modulus()), out);
}

inline FpPoly random_below(const PrimeField& fd, int degree_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, fd.modulus() - 1);
  std::vector<u64> v(static_cast<std::size_t>(degree_bound));
  for (auto& c : v) c = dist(rng);
  return FpPoly(fd, std::move(v));
}

/// Splits g, a product of distinct monic irreducibles of degree d.
inline void equal_degree_into(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const PrimeField& fd = g.field();
  const u64 p = fd.modulus();
  for (;;) {
    FpPoly a = random_below(fd, g.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly t = a;
    FpPoly acc = a;
    for (int i = 1; i < d; ++i) {
      t = powmod(t, p, g);
      acc = (p == 2) ? acc + t : (acc * t) % g;
    }
    FpPoly probe = (p == 2) ? acc : powmod(acc, (p - 1) / 2, g) - FpPoly::one(fd);
    FpPoly u = poly_gcd(probe, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree_into(u, d, rng, out);
      equal_degree_into((g / u).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Squarefree decomposition of a nonzero polynomial: pairs (g_i, i) with
/// monic squarefree pairwise coprime g_i and f = lc(f) * prod g_i^i.
inline std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f) {
  require(!f.is_zero(), Errc::InvalidArgument, "squarefree decomposition of zero");
  std::vector<std::pair<FpPoly, unsigned>> out;
  detail::squarefree_into(f.monic(), 1, out);
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<FpPoly, int>> distinct_degree_factorization(const FpPoly& f) {
  const PrimeField& fd = f.field();
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly rest = f.monic();
  const FpPoly x = FpPoly::x(fd);
  FpPoly h = x % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, fd.modulus(), rest);
    FpPoly g = poly_gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

/// Complete factorization over F_p. Randomized splitting is seeded, and
/// factors are sorted by (degree, coefficients), so output is reproducible.
inline FactorMultiset<PrimeField> factor(const FpPoly& f, u64 seed = kDefaultSeed) {
  require(!f.is_zero(), Errc::InvalidArgument, "factor of zero");
  FactorMultiset<PrimeField> result{{}, f.leading()};
  std::mt19937_64 rng(seed);
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (const auto& [part, d] : distinct_degree_factorization(g)) {
      std::vector<FpPoly> pieces;
      detail::equal_degree_into(part, d, rng, pieces);
      for (auto& piece : pieces) result.factors.emplace_back(std::move(piece), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return detail::poly_less(a.first, b.first);
  });
  return result;
}

/// Irreducibility over F_p by squarefreeness plus an early-exit
/// distinct-degree scan (no equal-degree splitting needed).
inline bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  FpPoly g = f.monic();
  if (!is_separable(g)) return false;
  const PrimeField& fd = f.field();
  const FpPoly x = FpPoly::x(fd);
  FpPoly h = x;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = powmod(h, fd.modulus(), g);
    if (poly_gcd(h - x, g).degree() > 0) return false;
  }
  return true;
}

/// All roots in F_p, ascending.
inline std::vector<u64> roots_in_field(const FpPoly& f, u64 seed = kDefaultSeed) {
  require(!f.is_zero(), Errc::InvalidArgument, "roots of the zero polynomial");
  const PrimeField& fd = f.field();
  if (f.degree() < 1) return {};
  FpPoly g = f.monic();
  const FpPoly x = FpPoly::x(fd);
  FpPoly split = poly_gcd(powmod(x, fd.modulus(), g) - x, g);
  std::vector<u64> roots;
  if (split.degree() < 1) return roots;
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> linear;
  detail::equal_degree_into(split, 1, rng, linear);
  for (const auto& l : linear) roots.push_back(fd.neg(l.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  require(n <= BigInt(1000000000000LL), Errc::GuardExceeded, "rational root search limited to |coefficients| <= 10^12");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All rational roots, ascending, by the rational root theorem.
inline std::vector<Rational> roots_in_field(const QPoly& f) {
  require(!f.is_zero(), Errc::InvalidArgument, "roots of the zero polynomial");
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  BigInt den_lcm = 1;
  for (const auto& c : f.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  std::vector<BigInt> ints;
  for (const auto& c : f.coeffs()) ints.push_back(numerator(c) * (den_lcm / denominator(c)));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (ints.size() - low > 1) {
    for (const BigInt& r : detail::positive_divisors(ints[low])) {
      for (const BigInt& s : detail::positive_divisors(ints.back())) {
        for (int sign : {1, -1}) {
          Rational cand = Rational(BigInt(sign * r)) / Rational(s);
          if (f.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace dirichlet
