#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "dirichlet/factor.hpp"
#include "dirichlet/polynomial.hpp"

namespace dirichlet {

inline constexpr u64 kMinimumPrime = 7;
inline constexpr u64 kDefaultSearchBudget = 100'000;

/// Smallest e with n/2 < e, gcd(e, n) = 1 and (p > 0) gcd(e, p) = 1, provided
/// it also satisfies e < n - m.
inline int find_cycle_length(int n, int m, u64 p) {
  require(n >= 1 && m >= 1, Errc::InvalidArgument, "n and m must be positive");
  for (int e = n / 2 + 1; e < n - m; ++e) {
    if (std::gcd(e, n) != 1) continue;
    if (p > 0 && std::gcd(static_cast<u64>(e), p) != 1) continue;
    return e;
  }
  fail(Errc::NoValidCycleLength, "no e with n/2 < e < n - m and gcd(e, np) = 1 for n=" + std::to_string(n) +
                                     ", m=" + std::to_string(m));
}

namespace detail {

/// Number of candidates the canonical enumeration may visit.
template <Field F>
u64 enumeration_limit(const F& field, u64 budget) {
  const auto size = field.size();
  return size ? std::min(*size, budget) : budget;
}

template <Field F>
bool is_root(const Polynomial<F>& f, const typename F::value_type& x) {
  return f.field().is_zero(f.eval(x));
}

template <Field F>
bool coprime(const Polynomial<F>& f, const Polynomial<F>& g) {
  const auto d = poly_gcd(f, g);
  return d.degree() == 0;
}

}  // namespace detail

/// The first alpha in canonical order, outside `exclude`, with
/// gcd(a + alpha b, c) = 1 and, if asked, a + alpha b separable.
template <Field F>
typename F::value_type find_good_alpha(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& c,
                                       const std::vector<typename F::value_type>& exclude, bool require_separable,
                                       u64 budget = kDefaultSearchBudget) {
  require(!c.is_zero(), Errc::PreconditionViolation, "c must be nonzero");
  require(detail::coprime(a, b), Errc::PreconditionViolation, "a and b must be coprime");
  const F& field = a.field();
  const u64 limit = detail::enumeration_limit(field, budget);
  for (u64 k = 0; k < limit; ++k) {
    const auto alpha = field.enumerate(k);
    if (std::find(exclude.begin(), exclude.end(), alpha) != exclude.end()) continue;
    const Polynomial<F> f = a + b.scaled(alpha);
    if (!detail::coprime(f, c)) continue;
    if (require_separable && !is_separable(f)) continue;
    return alpha;
  }
  fail(Errc::FieldTooSmall, "no admissible alpha among " + std::to_string(limit) + " candidates");
}

template <Field F>
struct CongruenceSolution {
  Polynomial<F> c, h1, h2;
};

/// c of degree d with a = p_i h_i + alpha_i b c, h_i separable and
/// gcd(h_i, a p_i) = 1. The free part s of c = cbar + p1 p2 s is searched as
/// lambda (X - beta)^(d'-1) (X - gamma), or as a constant lambda when d' = 0.
template <Field F>
CongruenceSolution<F> build_congruence_c(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& p1,
                                         const Polynomial<F>& p2, const typename F::value_type& alpha1,
                                         const typename F::value_type& alpha2, int d,
                                         u64 budget = kDefaultSearchBudget) {
  using P = Polynomial<F>;
  const F& field = a.field();
  for (const P* f : {&a, &b, &p1, &p2}) require(!f->is_zero(), Errc::PreconditionViolation, "inputs must be nonzero");
  const std::vector<const P*> all{&a, &b, &p1, &p2};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      require(detail::coprime(*all[i], *all[j]), Errc::PreconditionViolation, "a, b, p1, p2 must be pairwise coprime");
  require(!(alpha1 == alpha2) && !field.is_zero(alpha1) && !field.is_zero(alpha2), Errc::PreconditionViolation,
          "alpha1, alpha2 must be distinct and nonzero");
  require(p1.degree() >= 1 && p2.degree() >= 1, Errc::PreconditionViolation, "p1, p2 must be nonconstant");
  const int d_free = d - p1.degree() - p2.degree();
  require(d_free >= 0, Errc::PreconditionViolation, "d must be at least deg p1 + deg p2");

  const P b1 = b.scaled(alpha1), b2 = b.scaled(alpha2);
  const P c1 = (a * inverse_mod(b1 * p2, p1)) % p1;
  const P c2 = (a * inverse_mod(b2 * p1, p2)) % p2;
  const P cbar = c1 * p2 + c2 * p1;
  auto exact_quotient = [](const P& num, const P& den) {
    auto [q, r] = divmod(num, den);
    require(r.is_zero(), Errc::PreconditionViolation, "congruence did not divide exactly");
    return q;
  };
  const P h11 = exact_quotient(a - b1 * cbar, p1);
  const P h21 = exact_quotient(a - b2 * cbar, p2);
  const P p12 = p1 * p2, ap1 = a * p1, ap2 = a * p2;
  const P avoid = h11 * h21 * b * p12;

  const u64 limit = detail::enumeration_limit(field, budget);
  u64 tried = 0;
  auto attempt = [&](const P& shape) -> std::optional<CongruenceSolution<F>> {
    for (u64 k = 1; k < limit; ++k) {
      const auto lambda = field.enumerate(k);
      if (field.is_zero(lambda)) continue;
      if (++tried > budget) fail(Errc::FieldTooSmall, "congruence search budget exhausted");
      const P s = shape.scaled(lambda);
      const P c = cbar + p12 * s;
      if (c.degree() != d) continue;
      const P h1 = h11 - b1 * p2 * s, h2 = h21 - b2 * p1 * s;
      if (!is_separable(h1) || !is_separable(h2)) continue;
      if (!detail::coprime(h1, ap1) || !detail::coprime(h2, ap2)) continue;
      return CongruenceSolution<F>{c, h1, h2};
    }
    return std::nullopt;
  };

  if (d_free == 0) {
    if (auto r = attempt(P::one(field))) return *r;
  } else {
    for (u64 i = 0; i < limit; ++i) {
      const auto beta = field.enumerate(i);
      if (detail::is_root(avoid, beta)) continue;
      const P head = P::linear(field, beta).pow(static_cast<u64>(d_free - 1));
      for (u64 j = 0; j < limit; ++j) {
        const auto gamma = field.enumerate(j);
        if (detail::is_root(avoid, gamma)) continue;
        if (auto r = attempt(head * P::linear(field, gamma))) return *r;
      }
    }
  }
  fail(Errc::FieldTooSmall, "no s avoids the finitely many bad values");
}

template <Field F>
struct ConstructionParams {
  ConstructionParams(Polynomial<F> a_, Polynomial<F> b_, int n_) : a(std::move(a_)), b(std::move(b_)), n(n_) {}

  Polynomial<F> a, b;
  int n = 0;
  u64 search_budget = kDefaultSearchBudget;
  /// Forces e instead of searching, dropping the e < n - m requirement; the
  /// construction still needs n/2 < e < n, gcd(e, np) = 1 and deg c >= e + 2.
  std::optional<int> cycle_length;
};

template <Field F>
struct DirichletCertificate {
  using value_type = typename F::value_type;
  Polynomial<F> a, b, c, h1, h2, p1, p2;
  int n = 0, e = 0;
  value_type alpha1, alpha2, gamma1, gamma2;

  const F& field() const { return a.field(); }
  /// a + alpha b c
  Polynomial<F> specialize(const value_type& alpha) const { return a + (b * c).scaled(alpha); }
  friend bool operator==(const DirichletCertificate&, const DirichletCertificate&) = default;
};

template <Field F>
DirichletCertificate<F> construct_dirichlet(const ConstructionParams<F>& params) {
  using P = Polynomial<F>;
  const P& a = params.a;
  const P& b = params.b;
  const F& field = a.field();
  require(field == b.field(), Errc::FieldMismatch, "a and b live over different fields");
  const u64 p = field.characteristic();
  require(p == 0 || p >= kMinimumPrime, Errc::FieldTooSmall,
          "the construction needs p >= " + std::to_string(kMinimumPrime));
  require(!a.is_zero() && !b.is_zero(), Errc::PreconditionViolation, "a and b must be nonzero");
  require(detail::coprime(a, b), Errc::NotCoprime, "gcd(a, b) is not 1");
  const int n = params.n;
  require(n >= 1, Errc::InvalidArgument, "n must be positive");
  const int m = std::max(a.degree(), 2 + b.degree());

  int e = 0;
  if (params.cycle_length) {
    e = *params.cycle_length;
    require(2 * e > n && e < n && std::gcd(e, n) == 1 && (p == 0 || std::gcd(static_cast<u64>(e), p) == 1),
            Errc::InvalidArgument, "forced e must satisfy n/2 < e < n and gcd(e, np) = 1");
    require(n > a.degree() && n - b.degree() >= e + 2, Errc::DegreeTooSmall, "n too small for the forced e");
  } else {
    try {
      e = find_cycle_length(n, m, p);
    } catch (const Error& err) {
      if (err.code() == Errc::NoValidCycleLength)
        fail(Errc::DegreeTooSmall, "no cycle length e with n/2 < e < n - m for n=" + std::to_string(n) +
                                       ", m=" + std::to_string(m));
      throw;
    }
    require(n > std::max(a.degree(), e + 2 + b.degree()), Errc::DegreeTooSmall, "n <= max(deg a, e + 2 + deg b)");
  }

  const u64 limit = detail::enumeration_limit(field, params.search_budget);
  std::vector<typename F::value_type> alphas, gammas;
  const P ab = a * b;
  for (u64 k = 0; k < limit && (alphas.size() < 2 || gammas.size() < 2); ++k) {
    const auto x = field.enumerate(k);
    if (alphas.size() < 2 && !field.is_zero(x)) alphas.push_back(x);
    if (gammas.size() < 2 && !detail::is_root(ab, x)) gammas.push_back(x);
  }
  require(alphas.size() == 2 && gammas.size() == 2, Errc::FieldTooSmall, "cannot choose alpha_i and gamma_i");

  DirichletCertificate<F> cert{a, b, P(field), P(field), P(field), P::linear(field, gammas[0]).pow(static_cast<u64>(e)),
                               P::linear(field, gammas[1]).pow(2), n, e, alphas[0], alphas[1], gammas[0], gammas[1]};
  // alpha_i is the specialization point, a + alpha_i b c = p_i h_i, which is
  // the congruence form with -alpha_i
  auto sol = build_congruence_c(a, b, cert.p1, cert.p2, field.neg(cert.alpha1), field.neg(cert.alpha2), n - b.degree(),
                                params.search_budget);
  cert.c = std::move(sol.c);
  cert.h1 = std::move(sol.h1);
  cert.h2 = std::move(sol.h2);
  return cert;
}

/// Every alpha in F_p, ascending, with a + alpha b c irreducible of degree n,
/// stopping after `limit`. Blocks of candidates are factored in parallel and
/// collected in order, so the result does not depend on `jobs`.
inline std::vector<u64> find_irreducible_offsets(const DirichletCertificate<PrimeField>& cert, std::size_t limit,
                                                 unsigned jobs = 1) {
  const u64 p = cert.field().modulus();
  const FpPoly bc = cert.b * cert.c;
  auto good = [&](u64 alpha) {
    const FpPoly f = cert.a + bc.scaled(alpha);
    return f.degree() == cert.n && is_irreducible(f);
  };
  std::vector<u64> out;
  const unsigned workers = std::max(1u, jobs);
  const u64 block = 32 * static_cast<u64>(workers);
  for (u64 start = 0; start < p && out.size() < limit; start += block) {
    const u64 end = std::min(p, start + block);
    std::vector<char> hit(end - start, 0);
    if (workers == 1) {
      for (u64 x = start; x < end; ++x) hit[x - start] = good(x);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (u64 x = start + w; x < end; x += workers) hit[x - start] = good(x);
        });
    }
    for (u64 x = start; x < end && out.size() < limit; ++x)
      if (hit[x - start]) out.push_back(x);
  }
  return out;
}

}  // namespace dirichlet
