#pragma once

#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dirichlet/dirichlet.hpp"
#include "dirichlet/permutation.hpp"

namespace dirichlet {

struct ClauseResult {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const ClauseResult&, const ClauseResult&) = default;
};

inline constexpr const char* kCertified = "SymmetricGroupCertified";

template <Field F>
struct SnCertificate {
  DirichletCertificate<F> certificate;
  std::vector<ClauseResult> clauses;
  /// SymmetricGroupCertified, or Rejected(<first failing clause>).
  std::string conclusion;

  bool certified() const { return conclusion == kCertified; }
};

/// a + alpha_i b c = (X - gamma_i)^e_i h_i with e_1 = e, e_2 = 2, h_i separable,
/// h_i(gamma_i) != 0, gcd(h_i, a) = 1, and a tame ramification index.
template <Field F>
ClauseResult certify_ramification(const DirichletCertificate<F>& cert, int which) {
  require(which == 1 || which == 2, Errc::InvalidArgument, "which must be 1 or 2");
  using P = Polynomial<F>;
  const F& field = cert.field();
  const auto& alpha = which == 1 ? cert.alpha1 : cert.alpha2;
  const auto& gamma = which == 1 ? cert.gamma1 : cert.gamma2;
  const P& h = which == 1 ? cert.h1 : cert.h2;
  const P& stored_p = which == 1 ? cert.p1 : cert.p2;
  const int ei = which == 1 ? cert.e : 2;
  ClauseResult r{"ramification" + std::to_string(which), false, ""};
  auto reject = [&](const std::string& why) {
    r.detail = why;
    return r;
  };
  if (ei < 1) return reject("multiplicity: e must be positive");
  const P pi = P::linear(field, gamma).pow(static_cast<u64>(ei));
  if (!(stored_p == pi)) return reject("shape: p" + std::to_string(which) + " is not (X - gamma)^" + std::to_string(ei));
  if (!(cert.specialize(alpha) == pi * h)) return reject("congruence: a + alpha b c != p h");
  if (!is_separable(h)) return reject("separable: h is not separable");
  if (field.is_zero(h.eval(gamma))) return reject("coprime: h(gamma) = 0");
  if (!detail::coprime(h, cert.a)) return reject("coprime: gcd(h, a) != 1");
  const u64 p = field.characteristic();
  std::string tame;
  if (p == 0) {
    tame = "characteristic 0";
  } else if (std::gcd(static_cast<u64>(ei), p) == 1) {
    tame = "case (b): gcd(e_i, p) = 1";
  } else if (p == 2 && ei == 2) {
    // every other multiplicity is 1 since h is separable and prime to X - gamma
    tame = "case (c): p = 2, e_i = 2, other multiplicities odd";
  } else {
    return reject("tameness: gcd(" + std::to_string(ei) + ", " + std::to_string(p) + ") != 1");
  }
  r.passed = true;
  r.detail = tame;
  return r;
}

/// Evaluates every clause in order and names the first failure.
template <Field F>
SnCertificate<F> conclude_sn(const DirichletCertificate<F>& cert) {
  const F& field = cert.field();
  std::vector<ClauseResult> clauses;
  const auto bc = cert.b * cert.c;

  const bool irreducible = !cert.a.is_zero() && !bc.is_zero() && detail::coprime(cert.a, bc);
  clauses.push_back({"irreducibility", irreducible, irreducible ? "gcd(a, b c) = 1" : "gcd(a, b c) != 1"});

  const bool degree = bc.degree() == cert.n && cert.a.degree() < cert.n;
  clauses.push_back({"degree", degree,
                     "deg(b c) = " + std::to_string(bc.is_zero() ? -1 : bc.degree()) + ", n = " + std::to_string(cert.n)});

  const int n = cert.n, e = cert.e;
  const bool primitive = 2 * e > n && e < n && std::gcd(e, n) == 1;
  clauses.push_back({"primitivity", primitive,
                     "e = " + std::to_string(e) + (primitive ? ": n/2 < e < n and gcd(e, n) = 1" : ": needs n/2 < e < n and gcd(e, n) = 1")});

  const auto ab = cert.a * cert.b;
  std::string why;
  if (cert.alpha1 == cert.alpha2) why = "alpha1 = alpha2";
  else if (field.is_zero(cert.alpha1) || field.is_zero(cert.alpha2)) why = "alpha_i = 0";
  else if (cert.gamma1 == cert.gamma2) why = "gamma1 = gamma2";
  else if (detail::is_root(ab, cert.gamma1) || detail::is_root(ab, cert.gamma2)) why = "gamma_i is a root of a b";
  clauses.push_back({"places", why.empty(), why.empty() ? "alpha_i distinct nonzero, gamma_i distinct non-roots of a b" : why});

  clauses.push_back(certify_ramification(cert, 1));
  clauses.push_back(certify_ramification(cert, 2));

  SnCertificate<F> out{cert, std::move(clauses), kCertified};
  for (const auto& c : out.clauses)
    if (!c.passed) {
      out.conclusion = "Rejected(" + c.name + ")";
      break;
    }
  return out;
}

struct CycleTypeSample {
  std::size_t trials = 0;
  std::map<CycleType, std::size_t> histogram;
  std::size_t skipped = 0;

  std::size_t count(const CycleType& t) const {
    auto it = histogram.find(t);
    return it == histogram.end() ? 0 : it->second;
  }

  /// `cycle_type,count` rows in cycle-type order.
  std::string to_csv() const {
    std::ostringstream os;
    os << "cycle_type,count\n";
    for (const auto& [t, k] : histogram) os << t.to_string() << ',' << k << '\n';
    return os.str();
  }
};

/// Factor-degree cycle types of a + alpha b c over the given alphas. Alphas
/// whose specialization is not squarefree of degree n are skipped.
inline CycleTypeSample frobenius_sample(const DirichletCertificate<PrimeField>& cert, const std::vector<u64>& alphas,
                                        unsigned jobs = 1, u64 seed = kDefaultSeed) {
  const FpPoly bc = cert.b * cert.c;
  std::vector<std::optional<CycleType>> types(alphas.size());
  auto run = [&](std::size_t i) {
    const FpPoly f = cert.a + bc.scaled(cert.field().from_int(static_cast<i64>(alphas[i] % cert.field().modulus())));
    if (f.degree() != cert.n || !is_separable(f)) return;
    types[i] = CycleType::from_parts(factor(f, seed).degree_multiset());
  };
  const unsigned workers = std::max(1u, jobs);
  if (workers == 1) {
    for (std::size_t i = 0; i < alphas.size(); ++i) run(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < alphas.size(); i += workers) run(i);
      });
  }
  CycleTypeSample s;
  s.trials = alphas.size();
  for (const auto& t : types) {
    if (t) ++s.histogram[*t];
    else ++s.skipped;
  }
  return s;
}

/// Every alpha in F_p.
inline std::vector<u64> all_offsets(u64 p) {
  std::vector<u64> v(p);
  std::iota(v.begin(), v.end(), u64{0});
  return v;
}

/// `trials` alphas drawn uniformly from F_p with a seeded generator.
inline std::vector<u64> random_offsets(u64 p, std::size_t trials, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> pick(0, p - 1);
  std::vector<u64> v(trials);
  for (auto& x : v) x = pick(rng);
  return v;
}

}  // namespace dirichlet
