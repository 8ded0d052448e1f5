#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "dirichlet/factor.hpp"
#include "dirichlet/fiber.hpp"
#include "dirichlet/finite_group.hpp"
#include "dirichlet/perm_group.hpp"
#include "dirichlet/wreath.hpp"

namespace dirichlet {

inline constexpr long long kSolutionSearchBudget = 10'000'000;

/// Epimorphisms mu: Gamma -> A and alpha: G -> A, with an optional
/// distinguished subgroup G0 of G.
struct EmbeddingProblem {
  FiniteGroup gamma, a, g;
  Hom mu, alpha;
  std::optional<std::vector<int>> g0;

  static EmbeddingProblem make(FiniteGroup gamma, Hom mu, FiniteGroup a, FiniteGroup g, Hom alpha,
                               std::optional<std::vector<int>> g0 = std::nullopt) {
    require(is_homomorphism(gamma, a, mu), Errc::InvalidArgument, "mu is not a homomorphism");
    require(is_homomorphism(g, a, alpha), Errc::InvalidArgument, "alpha is not a homomorphism");
    require(is_surjective(mu, a), Errc::NotSurjective, "mu is not surjective");
    require(is_surjective(alpha, a), Errc::NotSurjective, "alpha is not surjective");
    if (g0) {
      std::sort(g0->begin(), g0->end());
      require(g.is_subgroup(*g0), Errc::NotASubgroup, "G0 is not a subgroup of G");
    }
    return EmbeddingProblem{std::move(gamma), std::move(a), std::move(g), std::move(mu), std::move(alpha), std::move(g0)};
  }
};

struct Solution {
  Hom theta;
  bool surjective = false;
  /// Empty when the problem has no distinguished subgroup.
  std::optional<bool> transitive;
};

/// Surjectivity through the kernel criterion: ker alpha is inside the image.
inline bool is_surjective_solution(const EmbeddingProblem& ep, const Hom& theta) {
  std::vector<char> in(static_cast<std::size_t>(ep.g.order()), 0);
  for (int x : theta) in[static_cast<std::size_t>(x)] = 1;
  for (int k : hom_kernel(ep.alpha))
    if (!in[static_cast<std::size_t>(k)]) return false;
  return true;
}

/// (G:G0) = (D:D n G0) for D the image of theta.
inline bool is_transitive_solution(const EmbeddingProblem& ep, const Hom& theta) {
  require(ep.g0.has_value(), Errc::InvalidArgument, "problem has no distinguished subgroup");
  const std::vector<int> d = hom_image(theta);
  std::vector<char> in_g0(static_cast<std::size_t>(ep.g.order()), 0);
  for (int x : *ep.g0) in_g0[static_cast<std::size_t>(x)] = 1;
  long meet = 0;
  for (int x : d) meet += in_g0[static_cast<std::size_t>(x)];
  return static_cast<long>(ep.g.order()) * meet == static_cast<long>(d.size()) * static_cast<long>(ep.g0->size());
}

inline Solution classify_solution(const EmbeddingProblem& ep, Hom theta) {
  Solution s;
  s.theta = std::move(theta);
  s.surjective = is_surjective_solution(ep, s.theta);
  if (ep.g0) s.transitive = is_transitive_solution(ep, s.theta);
  return s;
}

namespace detail {

/// Odometer over generator images beyond the first, for one fixed first image.
inline void search_branch(const EmbeddingProblem& ep, const std::vector<int>& gens,
                          const std::vector<std::vector<int>>& cands, int first, std::vector<Hom>& out) {
  const std::size_t k = gens.size();
  std::vector<std::size_t> ctr(k, 0);
  std::vector<int> images(k);
  images[0] = first;
  for (;;) {
    for (std::size_t i = 1; i < k; ++i) images[i] = cands[i][ctr[i]];
    if (auto h = extend_hom(ep.gamma, ep.g, gens, images)) out.push_back(std::move(*h));
    std::size_t i = k;
    while (i > 1) {
      --i;
      if (++ctr[i] < cands[i].size()) break;
      ctr[i] = 0;
      if (i == 1) return;
    }
    if (k <= 1) return;
  }
}

}  // namespace detail

/// Every homomorphism theta: Gamma -> G with alpha theta = mu. Generator
/// images are restricted to the fibres of alpha, then checked for
/// consistency. The search is split by the first generator's image across
/// `jobs` threads and merged in enumeration order.
inline std::vector<Solution> enumerate_weak_solutions(const EmbeddingProblem& ep, unsigned jobs = 1,
                                                      long long budget = kSolutionSearchBudget) {
  const std::vector<int>& gens = ep.gamma.generators();
  long double space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) space *= ep.g.order();
  require(space <= static_cast<long double>(budget), Errc::BudgetExceeded,
          "search space exceeds budget of " + std::to_string(budget) + " candidate assignments");
  std::vector<Hom> found;
  if (gens.empty()) {
    found.push_back(Hom{0});
  } else {
    std::vector<std::vector<int>> cands(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (int x = 0; x < ep.g.order(); ++x)
        if (ep.alpha[static_cast<std::size_t>(x)] == ep.mu[static_cast<std::size_t>(gens[i])]) cands[i].push_back(x);
    const std::vector<int>& firsts = cands[0];
    std::vector<std::vector<Hom>> parts(firsts.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(firsts.size())));
    if (workers == 1) {
      for (std::size_t i = 0; i < firsts.size(); ++i) detail::search_branch(ep, gens, cands, firsts[i], parts[i]);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < firsts.size(); i += workers) detail::search_branch(ep, gens, cands, firsts[i], parts[i]);
        });
    }
    for (auto& p : parts)
      for (auto& h : p) found.push_back(std::move(h));
  }
  std::vector<Solution> out;
  for (auto& h : found) out.push_back(classify_solution(ep, std::move(h)));
  return out;
}

/// The wreath-target criterion: if the image maps onto G and contains every
/// f_a with a in A (the image of A x| G0 under rho at sigma = 1), theta is
/// surjective onto A wr_G0 G.
inline bool wreath_surjectivity_criterion(const TwistedWreath& w, const std::vector<int>& image) {
  std::vector<char> in(static_cast<std::size_t>(w.order()), 0);
  for (int x : image) in[static_cast<std::size_t>(x)] = 1;
  std::vector<char> hit(static_cast<std::size_t>(w.G().order()), 0);
  for (int x : image) hit[static_cast<std::size_t>(w.decode(x).sigma)] = 1;
  if (std::count(hit.begin(), hit.end(), 1) != w.G().order()) return false;
  for (int a = 0; a < w.A().order(); ++a)
    if (!in[static_cast<std::size_t>(w.embed_semidirect(w.semidirect().encode(a, 0)))]) return false;
  return true;
}

/// Two compatible problems: lower (mu: Gamma -> A, alpha: G -> A) inside
/// higher (nu: Lambda -> B, beta: H -> B) through injective inclusions.
struct DoubleEmbeddingProblem {
  EmbeddingProblem lower, higher;
  Hom gamma_in_lambda, g_in_h, a_in_b;

  static DoubleEmbeddingProblem make(EmbeddingProblem lower, EmbeddingProblem higher, Hom gamma_in_lambda, Hom g_in_h,
                                     Hom a_in_b) {
    auto check_inclusion = [](const FiniteGroup& s, const FiniteGroup& t, const Hom& i, const char* what) {
      require(is_homomorphism(s, t, i) && is_injective(i), Errc::InvalidArgument, std::string(what) + " is not an injective homomorphism");
    };
    check_inclusion(lower.gamma, higher.gamma, gamma_in_lambda, "Gamma -> Lambda");
    check_inclusion(lower.g, higher.g, g_in_h, "G -> H");
    check_inclusion(lower.a, higher.a, a_in_b, "A -> B");
    require(compose(higher.mu, gamma_in_lambda) == compose(a_in_b, lower.mu), Errc::InvalidArgument,
            "the Gamma/Lambda square does not commute");
    require(compose(higher.alpha, g_in_h) == compose(a_in_b, lower.alpha), Errc::InvalidArgument,
            "the G/H square does not commute");
    return DoubleEmbeddingProblem{std::move(lower), std::move(higher), std::move(gamma_in_lambda), std::move(g_in_h),
                                  std::move(a_in_b)};
  }
};

struct DepSolution {
  Hom eta;    ///< Gamma -> G
  Hom theta;  ///< Lambda -> H
};

/// Weak solutions theta of the higher problem with theta(Gamma) <= G, paired
/// with their restrictions eta to Gamma.
inline std::vector<DepSolution> solve_dep(const DoubleEmbeddingProblem& dep, unsigned jobs = 1,
                                          long long budget = kSolutionSearchBudget) {
  std::vector<int> back(static_cast<std::size_t>(dep.higher.g.order()), -1);
  for (std::size_t x = 0; x < dep.g_in_h.size(); ++x) back[static_cast<std::size_t>(dep.g_in_h[x])] = static_cast<int>(x);
  std::vector<DepSolution> out;
  for (auto& s : enumerate_weak_solutions(dep.higher, jobs, budget)) {
    Hom eta(dep.gamma_in_lambda.size());
    bool inside = true;
    for (std::size_t x = 0; x < eta.size() && inside; ++x) {
      eta[x] = back[static_cast<std::size_t>(s.theta[static_cast<std::size_t>(dep.gamma_in_lambda[x])])];
      inside = eta[x] >= 0;
    }
    if (inside) out.push_back({std::move(eta), std::move(s.theta)});
  }
  return out;
}

/// (mu', alpha') with G' = G x_A A' dominating (mu, alpha).
struct DominatingProblem {
  EmbeddingProblem problem;
  FiberProduct fiber;
  /// The induced map A' -> A with pi mu' = mu.
  Hom a_prime_to_a;
  /// G' -> G, the first fibre projection.
  Hom to_g;
};

inline DominatingProblem dominate_by_fiber_product(const EmbeddingProblem& ep, const FiniteGroup& a_prime,
                                                   const Hom& mu_prime) {
  require(is_homomorphism(ep.gamma, a_prime, mu_prime), Errc::InvalidArgument, "mu' is not a homomorphism");
  require(is_surjective(mu_prime, a_prime), Errc::NotSurjective, "mu' is not surjective");
  Hom pi(static_cast<std::size_t>(a_prime.order()), -1);
  for (int x = 0; x < ep.gamma.order(); ++x) {
    int& slot = pi[static_cast<std::size_t>(mu_prime[static_cast<std::size_t>(x)])];
    const int want = ep.mu[static_cast<std::size_t>(x)];
    require(slot < 0 || slot == want, Errc::KernelCondition, "ker mu' is not contained in ker mu");
    slot = want;
  }
  FiberProduct fp = fiber_product(ep.g, ep.alpha, a_prime, pi, ep.a);
  Hom to_g = fp.projections[0];
  EmbeddingProblem dom = EmbeddingProblem::make(ep.gamma, mu_prime, a_prime, fp.group, fp.projections[1]);
  return DominatingProblem{std::move(dom), std::move(fp), std::move(pi), std::move(to_g)};
}

/// theta' -> (G' -> G) theta'.
inline Hom project_solution(const DominatingProblem& d, const Hom& theta_prime) { return compose(d.to_g, theta_prime); }

/// theta -> (theta, mu'), a weak solution of the dominating problem.
inline Hom induced_solution(const DominatingProblem& d, const Hom& theta) {
  Hom out(theta.size());
  for (std::size_t x = 0; x < theta.size(); ++x) {
    const std::vector<int> t{theta[x], d.problem.mu[x]};
    const auto it = std::find(d.fiber.tuples.begin(), d.fiber.tuples.end(), t);
    require(it != d.fiber.tuples.end(), Errc::InvalidArgument, "theta is not a weak solution of the original problem");
    out[x] = static_cast<int>(it - d.fiber.tuples.begin());
  }
  return out;
}

/// When ker mu' <= ker theta, the section beta'(mu'(x)) = (theta(x), mu'(x))
/// splits alpha'. Returns nullopt if the kernel condition fails.
inline std::optional<Hom> split_from_solution(const DominatingProblem& d, const Hom& theta) {
  const Hom lifted = induced_solution(d, theta);
  Hom beta(static_cast<std::size_t>(d.problem.a.order()), -1);
  for (std::size_t x = 0; x < lifted.size(); ++x) {
    int& slot = beta[static_cast<std::size_t>(d.problem.mu[x])];
    if (slot >= 0 && slot != lifted[x]) return std::nullopt;
    slot = lifted[x];
  }
  return beta;
}

inline constexpr std::size_t kIndependenceGuard = 4;

/// (ker mu : n_{i in S} ker theta_i) = prod_{i in S} (ker mu : ker theta_i)
/// for every nonempty subset S.
inline bool check_independence(const EmbeddingProblem& ep, const std::vector<Hom>& thetas) {
  require(!thetas.empty(), Errc::InvalidArgument, "no solutions given");
  require(thetas.size() <= kIndependenceGuard, Errc::GuardExceeded, "independence check is limited to 4 solutions");
  for (const auto& t : thetas)
    require(compose(ep.alpha, t) == ep.mu && is_surjective(t, ep.g), Errc::InvalidArgument,
            "independence needs surjective solutions");
  const std::vector<int> kmu = hom_kernel(ep.mu);
  const std::size_t k = thetas.size();
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    long long prod = 1;
    std::size_t meet = 0;
    for (int x : kmu) {
      bool all = true;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) all = all && thetas[i][static_cast<std::size_t>(x)] == 0;
      meet += all;
    }
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) prod *= static_cast<long long>(kmu.size() / hom_kernel(thetas[i]).size());
    if (static_cast<long long>(kmu.size() / meet) != prod) return false;
  }
  return true;
}

/// The Frobenius of a squarefree f over F_p as a permutation of its roots:
/// one cycle per irreducible factor, of that factor's degree.
inline std::pair<PermGroup, CycleType> galois_group_over_fq(const FpPoly& f, u64 seed = kDefaultSeed) {
  require(f.degree() >= 1, Errc::InvalidArgument, "polynomial must be nonconstant");
  require(is_separable(f), Errc::NotSeparable, "polynomial is not squarefree");
  const std::vector<int> degs = factor(f, seed).degree_multiset();
  const int n = f.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  int start = 0;
  for (int d : degs) {
    for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(start + i)] = start + (i + 1) % d;
    start += d;
  }
  Permutation frob(images);
  return {PermGroup(n, {frob}), frob.cycle_type()};
}

}  // namespace dirichlet
