// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "dirichlet/certifier.hpp"
#include "dirichlet/embedding.hpp"
#include "dirichlet/quasi_p.hpp"
#include "support/group_oracles.hpp"
#include "support/oracles.hpp"

using namespace dirichlet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

Hom mod_map(int from, int to) {
  Hom h(static_cast<std::size_t>(from));
  for (int x = 0; x < from; ++x) h[static_cast<std::size_t>(x)] = x % to;
  return h;
}

bool hom_exhaustive(const FiniteGroup& src, const FiniteGroup& dst, const Hom& phi) {
  for (int x = 0; x < src.order(); ++x)
    for (int y = 0; y < src.order(); ++y)
      if (phi[static_cast<std::size_t>(src.mul(x, y))] != dst.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

bool injective(const Hom& phi) { return std::set<int>(phi.begin(), phi.end()).size() == phi.size(); }

int label(const FiniteGroup& g, const std::string& l) { return *g.index_of_label(l); }

FpPoly random_poly(const PrimeField& f, int max_degree, std::mt19937_64& rng) {
  const int d = static_cast<int>(rng() % static_cast<u64>(max_degree + 1));
  std::vector<u64> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = rng() % f.modulus();
  if (c.back() == 0) c.back() = 1;
  return FpPoly(f, c);
}

bool has_cycle_length(int n, int m, u64 p) {
  for (int e = n / 2 + 1; e < n - m; ++e)
    if (std::gcd(e, n) == 1 && std::gcd(static_cast<u64>(e), p) == 1) return true;
  return false;
}

Outcome criterion1() {
  Outcome o;
  int constructed = 0, empty = 0;
  double expected_empty = 0;
  std::string first_empty;
  for (u64 p : {101u, 257u}) {
    const PrimeField f(p);
    std::mt19937_64 rng(1000 + p);
    int pairs = 0;
    while (pairs < 50) {
      const FpPoly a = random_poly(f, 3, rng), b = random_poly(f, 3, rng);
      if (a.is_zero() || b.is_zero() || poly_gcd(a, b).degree() > 0) continue;
      ++pairs;
      const int m = std::max(a.degree(), 2 + b.degree());
      for (int n = 12; n <= 24; ++n) {
        const std::string tag = "p=" + std::to_string(p) + " a=" + a.to_string() + " b=" + b.to_string() + " n=" + std::to_string(n);
        if (!has_cycle_length(n, m, p)) {
          bool refused = false;
          try {
            construct_dirichlet(ConstructionParams<PrimeField>(a, b, n));
          } catch (const Error& e) {
            refused = e.code() == Errc::DegreeTooSmall;
          }
          o.check(refused, "inadmissible n not refused: " + tag);
          continue;
        }
        try {
          const auto cert = construct_dirichlet(ConstructionParams<PrimeField>(a, b, n));
          o.check(conclude_sn(cert).certified(), "not certified: " + tag);
          const auto offsets = find_irreducible_offsets(cert, 1);
          // heuristic chance that none of the p - 1 nonzero alphas gives an n-cycle
          expected_empty += std::pow(1.0 - 1.0 / n, static_cast<double>(p - 1));
          if (offsets.empty()) {
            if (empty++ == 0) first_empty = tag;
            // an empty list is only acceptable if exhaustive factorization agrees
            bool any = false;
            for (u64 alpha = 1; alpha < p && !any; ++alpha)
              any = oracle::irreducible_by_rabin(cert.specialize(alpha)) && cert.specialize(alpha).degree() == n;
            o.check(!any, "missed an irreducible offset: " + tag);
          }
          for (u64 alpha : offsets) {
            const FpPoly g = cert.specialize(alpha);
            o.check(g.degree() == n && oracle::irreducible_by_rabin(g), "oracle rejects offset: " + tag);
          }
          ++constructed;
        } catch (const Error& e) {
          o.check(false, std::string(e.what()) + ": " + tag);
        }
      }
    }
  }
  o.check(empty == 0, std::to_string(empty) + " of " + std::to_string(constructed) +
                         " certified instances have no irreducible specialization in F_p (heuristic expectation " +
                         std::to_string(expected_empty).substr(0, 4) + "), first: " + first_empty);
  if (o.pass) o.detail = std::to_string(constructed) + " constructions certified, offsets confirmed by Rabin's test";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const PrimeField f(101);
  ConstructionParams<PrimeField> params(FpPoly::one(f), FpPoly::one(f), 5);
  params.cycle_length = 3;
  const auto cert = construct_dirichlet(params);
  o.check(conclude_sn(cert).certified(), "S_5 instance not certified");
  const auto s = frobenius_sample(cert, all_offsets(101));
  const double freq = static_cast<double>(s.count(CycleType::from_parts({5}))) / 101.0;
  o.check(freq >= 0.05 && freq <= 0.35, "5-cycle frequency " + std::to_string(freq));
  o.check(s.count(CycleType::from_parts({2, 1, 1, 1})) >= 1, "no {2,1,1,1} specialization");
  if (o.pass)
    o.detail = "5-cycle frequency " + std::to_string(freq).substr(0, 5) + ", {2,1,1,1} count " +
               std::to_string(s.count(CycleType::from_parts({2, 1, 1, 1})));
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.check(find_cycle_length(12, 2, 0) == 7 && find_cycle_length(9, 2, 0) == 5 && find_cycle_length(14, 2, 3) == 11,
          "catalogued triples differ");
  int scanned = 0;
  for (int n = 1; n <= 60; ++n)
    for (int m = 1; m <= 4; ++m)
      for (u64 p : {0u, 2u, 3u, 5u, 7u}) {
        bool exists = false;
        for (int e = 1; e < n; ++e)
          exists = exists || (2 * e > n && e < n - m && std::gcd(e, n) == 1 && (p == 0 || std::gcd(static_cast<u64>(e), p) == 1));
        const std::string tag = std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(p);
        try {
          const int e = find_cycle_length(n, m, p);
          o.check(exists, "returned e without a valid one: " + tag);
          o.check(2 * e > n && e < n - m && std::gcd(e, n) == 1 && (p == 0 || std::gcd(static_cast<u64>(e), p) == 1),
                  "invalid e: " + tag);
        } catch (const Error& err) {
          o.check(!exists && err.code() == Errc::NoValidCycleLength, "missed a valid e: " + tag);
        }
        ++scanned;
      }
  if (o.pass) o.detail = std::to_string(scanned) + " triples agree with the exhaustive scan";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const FiniteGroup s3 = FiniteGroup::symmetric(3), z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  const int t = label(s3, "(1 2)"), r = label(s3, "(1 2 3)");
  std::vector<TwistedWreath> ws;
  ws.emplace_back(z2, s3, trivial_action(s3, {0}, z2));
  ws.emplace_back(z3, s3, inversion_action(s3, {t}, z3));
  ws.emplace_back(z3, s3, action_from_generators(s3, {t, r}, {Hom{0, 2, 1}, Hom{0, 1, 2}}, z3));
  const std::vector<int> expected_orders{384, 162, 18};
  int lifts = 0;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    const TwistedWreath& w = ws[k];
    const std::string tag = "instance " + std::to_string(k + 1);
    const FiniteGroup& g = w.group();
    // associativity on all triples
    bool assoc = true;
    for (int x = 0; x < g.order() && assoc; ++x)
      for (int y = 0; y < g.order() && assoc; ++y) {
        const int xy = g.mul(x, y);
        for (int z = 0; z < g.order() && assoc; ++z) assoc = g.mul(xy, z) == g.mul(x, g.mul(y, z));
      }
    o.check(assoc, "associativity fails: " + tag);
    long formula = w.G().order();
    for (int i = 0; i < w.index(); ++i) formula *= w.A().order();
    o.check(w.order() == formula && w.order() == expected_orders[k], "order formula: " + tag);
    const Semidirect& sd = w.semidirect();
    for (int x = 0; x < sd.group().order(); ++x) o.check(w.shapiro(w.embed_semidirect(x)) == x, "pi o rho != id: " + tag);
    // every splitting cocycle a: G0 -> A lifts
    const int g0 = static_cast<int>(w.G0().size());
    std::vector<int> cocycle(static_cast<std::size_t>(g0), 0);
    std::function<void(int)> visit = [&](int i) {
      if (i == g0) {
        if (!is_splitting_cocycle(w, cocycle)) return;
        const Hom j = lift_splitting(w, cocycle);
        o.check(hom_exhaustive(w.G(), g, j), "lift is not a homomorphism: " + tag);
        for (int pos = 0; pos < g0; ++pos)
          o.check(w.shapiro(j[static_cast<std::size_t>(w.G0()[static_cast<std::size_t>(pos)])]) ==
                      sd.encode(cocycle[static_cast<std::size_t>(pos)], pos),
                  "pi(j(s)) != i(s): " + tag);
        ++lifts;
        return;
      }
      for (int v = 0; v < w.A().order(); ++v) {
        cocycle[static_cast<std::size_t>(i)] = v;
        visit(i + 1);
      }
    };
    visit(0);
  }
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const KrasnerEmbedding k4 = kaloujnine_krasner_embed(z4, {0, 2}, z2, mod_map(4, 2));
  o.check(hom_exhaustive(z4, k4.wreath.group(), k4.i) && injective(k4.i) && compose(k4.wreath.alpha(), k4.i) == mod_map(4, 2),
          "Z/4 embedding");
  Hom sign;
  for (const auto& p : *s3.perms()) {
    int tr = 0;
    for (const auto& c : p.cycles()) tr += static_cast<int>(c.size()) - 1;
    sign.push_back(tr % 2);
  }
  const KrasnerEmbedding ks = kaloujnine_krasner_embed(s3, hom_kernel(sign), z2, sign);
  o.check(hom_exhaustive(s3, ks.wreath.group(), ks.i) && injective(ks.i) && compose(ks.wreath.alpha(), ks.i) == sign, "S_3 embedding");
  if (o.pass) o.detail = "orders 384/162/18 exact, " + std::to_string(lifts) + " splittings lifted, both embeddings injective";
  return o;
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

Permutation random_block_perm(int n, int d, std::mt19937_64& rng) {
  std::vector<int> outer(static_cast<std::size_t>(n / d));
  std::iota(outer.begin(), outer.end(), 0);
  std::shuffle(outer.begin(), outer.end(), rng);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int b = 0; b < n / d; ++b) {
    std::vector<int> inner(static_cast<std::size_t>(d));
    std::iota(inner.begin(), inner.end(), 0);
    std::shuffle(inner.begin(), inner.end(), rng);
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(b * d + i)] = outer[static_cast<std::size_t>(b)] * d + inner[static_cast<std::size_t>(i)];
  }
  return Permutation(v);
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(55);
  int tested = 0, primitive = 0, accepted = 0;
  while (tested < 200) {
    const int n = 4 + tested % 5;
    // about a third of the draws preserve a block system
    int d = 1;
    for (int cand : {2, 3, 4})
      if (n % cand == 0 && n > cand && rng() % 3 == 0) d = cand;
    const Permutation x = d > 1 ? random_block_perm(n, d, rng) : random_perm(n, rng);
    const Permutation y = d > 1 ? random_block_perm(n, d, rng) : random_perm(n, rng);
    const PermGroup g(n, {x, y});
    if (!g.is_transitive()) continue;
    ++tested;
    const bool expected = oracle::primitive_by_partitions({x.images(), y.images()}, n);
    primitive += expected;
    o.check(is_primitive(g) == expected, "primitivity disagrees on " + x.to_string() + ", " + y.to_string());
    const std::size_t order = oracle::naive_closure({x.images(), y.images()}, n).size();
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    for (int e = n / 2 + 1; e < n; ++e)
      if (certify_symmetric(n, e, g).accepted) {
        ++accepted;
        o.check(order == fact, "false accept on " + x.to_string() + ", " + y.to_string());
      }
  }
  o.check(primitive > 0 && primitive < 200, "sample lacks primitive or imprimitive groups");
  if (o.pass)
    o.detail = "200 groups, " + std::to_string(primitive) + " primitive, " + std::to_string(accepted) + " accepts, 0 false accepts";
  return o;
}

std::vector<Hom> oracle_weak(const EmbeddingProblem& ep) {
  std::vector<Hom> out;
  for (auto& h : oracle::all_homs(ep.gamma, ep.g))
    if (compose(ep.alpha, h) == ep.mu) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome criterion6() {
  Outcome o;
  const FiniteGroup z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4);
  const FiniteGroup v = FiniteGroup::direct_product(z2, z2);
  struct Case {
    EmbeddingProblem ep;
    std::size_t weak, surjective;
  };
  const std::vector<Case> cases = {{EmbeddingProblem::make(z4, mod_map(4, 2), z2, v, Hom{0, 0, 1, 1}), 2, 0},
                                   {EmbeddingProblem::make(z4, mod_map(4, 2), z2, z2, Hom{0, 1}), 1, 1},
                                   {EmbeddingProblem::make(z2, Hom{0, 1}, z2, z4, mod_map(4, 2)), 0, 0}};
  std::size_t solutions = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& c = cases[k];
    const auto sols = enumerate_weak_solutions(c.ep);
    std::vector<Hom> th;
    std::size_t surj = 0;
    for (const auto& s : sols) {
      th.push_back(s.theta);
      surj += s.surjective;
      // kernel criterion against the image itself
      o.check(is_surjective_solution(c.ep, s.theta) == is_surjective(s.theta, c.ep.g), "criterion mismatch");
      ++solutions;
    }
    std::sort(th.begin(), th.end());
    o.check(sols.size() == c.weak && surj == c.surjective, "catalogue count " + std::to_string(k));
    o.check(th == oracle_weak(c.ep), "oracle disagrees on catalogue problem " + std::to_string(k));
  }
  // criterion equivalence on every weak solution of a wider family
  const std::vector<FiniteGroup> groups = {z2, z4, v, FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)};
  for (const auto& src : groups)
    for (const auto& dst : groups)
      for (const auto& alpha : oracle::all_homs(dst, z2)) {
        if (!is_surjective(alpha, z2)) continue;
        for (const auto& mu : oracle::all_homs(src, z2)) {
          if (!is_surjective(mu, z2)) continue;
          const EmbeddingProblem ep = EmbeddingProblem::make(src, mu, z2, dst, alpha);
          for (const auto& s : enumerate_weak_solutions(ep)) {
            o.check(is_surjective_solution(ep, s.theta) == is_surjective(s.theta, dst), "criterion mismatch");
            ++solutions;
          }
        }
      }
  const Hom q = mod_map(4, 2);
  for (int copies = 2; copies <= 3; ++copies) {
    const FiberProduct fp = fiber_power(z4, q, z2, copies);
    const EmbeddingProblem ep = EmbeddingProblem::make(fp.group, compose(q, fp.projections[0]), z2, z4, q);
    o.check(check_independence(ep, fp.projections), "fiber-power projections not independent");
    o.check(!check_independence(ep, {fp.projections[0], fp.projections[0]}), "duplicated solutions judged independent");
  }
  if (o.pass) o.detail = "counts 2/0, 1, 0 match the oracle; criterion holds on " + std::to_string(solutions) + " solutions";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const PrimeField f5(5);
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 100) {
    const FpPoly f = random_poly(f5, 6, rng);
    if (f.degree() < 1 || !is_separable(f)) continue;
    ++tested;
    o.check(factor(f).degree_multiset() == oracle::frobenius_orbit_sizes(f), "mismatch on " + f.to_string());
  }
  if (o.pass) o.detail = "100 squarefree polynomials over F_5 agree with splitting-field orbits";
  return o;
}

/// All subgroups, as closures of pairs (enough for metacyclic groups).
std::set<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x; y < g.order(); ++y) out.insert(g.closure({x, y}));
  return out;
}

Outcome criterion8() {
  Outcome o;
  for (auto [p, k, m, alpha] : {std::tuple{2, 1, 3, 2}, std::tuple{3, 1, 13, 3}}) {
    const QuasiPReport r = quasi_p_semidirect(p, k, m, alpha);
    const FiniteGroup& h = r.group;
    const std::string tag = "(" + std::to_string(p) + ",1," + std::to_string(m) + "," + std::to_string(alpha) + ")";
    o.check(h.order() == p * m, "order " + tag);
    o.check(r.generated_by_sylows && r.only_trivial_prime_to_p_quotient && r.all_orders_realized, "reported property false " + tag);
    // (a) elements of p-power order generate H
    std::vector<int> p_elements;
    for (int x = 0; x < h.order(); ++x) {
      int ord = h.element_order(x);
      while (ord % p == 0) ord /= p;
      if (ord == 1) p_elements.push_back(x);
    }
    o.check(static_cast<int>(h.closure(p_elements).size()) == h.order(), "p-elements do not generate " + tag);
    // (b) every normal N of index prime to p is H
    const auto subs = all_subgroups(h);
    for (const auto& n : subs) {
      bool normal = true;
      for (int g = 0; g < h.order() && normal; ++g)
        for (int x : n) normal = normal && std::binary_search(n.begin(), n.end(), h.conj(g, x));
      const int index = h.order() / static_cast<int>(n.size());
      if (normal && index % p != 0) o.check(index == 1, "proper normal subgroup of index prime to p " + tag);
    }
    // (c) a subgroup of every order dividing |H|
    for (int d = 1; d <= h.order(); ++d) {
      if (h.order() % d != 0) continue;
      const auto it = r.subgroup_of_order.find(d);
      o.check(it != r.subgroup_of_order.end() && static_cast<int>(it->second.size()) == d && subs.contains(it->second),
              "no subgroup of order " + std::to_string(d) + " " + tag);
    }
  }
  if (o.pass) o.detail = "(2,1,3,2) and (3,1,13,3): all three properties confirmed exhaustively";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"end-to-end construction over F_101 and F_257", criterion1},
      {"Chebotarev sanity for S_5 over F_101", criterion2},
      {"cycle-length selection", criterion3},
      {"twisted wreath algebra", criterion4},
      {"primitivity oracle and S_n certification", criterion5},
      {"embedding-problem enumeration", criterion6},
      {"Frobenius orbit correspondence", criterion7},
      {"quasi-p semidirect products", criterion8},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (i == 0 && secs >= 60.0) o.check(false, "runtime " + std::to_string(secs) + " s exceeds 60 s");
    all = all && o.pass;
    std::printf("criterion %zu %s: %s (%.2f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs, o.detail.c_str());
  }
  return all ? 0 : 1;
}
