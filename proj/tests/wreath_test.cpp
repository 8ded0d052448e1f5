#include <gtest/gtest.h>

#include "dirichlet/fiber.hpp"
#include "dirichlet/quasi_p.hpp"
#include "dirichlet/wreath.hpp"

using namespace dirichlet;

namespace {

int L(const FiniteGroup& g, const std::string& label) {
  auto i = g.index_of_label(label);
  if (!i) throw std::runtime_error("no element " + label);
  return *i;
}

/// phi(xy) = phi(x)phi(y) over all pairs.
bool hom_exhaustive(const FiniteGroup& src, const FiniteGroup& dst, const Hom& phi) {
  for (int x = 0; x < src.order(); ++x)
    for (int y = 0; y < src.order(); ++y)
      if (phi[static_cast<std::size_t>(src.mul(x, y))] != dst.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) return false;
  return true;
}

Hom mod_map(int from, int to) {
  Hom h(static_cast<std::size_t>(from));
  for (int x = 0; x < from; ++x) h[static_cast<std::size_t>(x)] = x % to;
  return h;
}

/// Sign of each element of a permutation group, as 0/1.
Hom sign_map(const FiniteGroup& g) {
  Hom h;
  for (const auto& p : *g.perms()) {
    int transpositions = 0;
    for (const auto& c : p.cycles()) transpositions += static_cast<int>(c.size()) - 1;
    h.push_back(transpositions % 2);
  }
  return h;
}

TwistedWreath z2_wr_s3() {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup a = FiniteGroup::cyclic(2);
  return TwistedWreath(a, s3, trivial_action(s3, {0}, a));
}

TwistedWreath z3_wr_s3_inversion() {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup a = FiniteGroup::cyclic(3);
  return TwistedWreath(a, s3, inversion_action(s3, {L(s3, "(1 2)")}, a));
}

/// Z/3 with S_3 acting through the sign; G0 = G.
TwistedWreath z3_wr_s3_full() {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup a = FiniteGroup::cyclic(3);
  Hom inv{0, 2, 1}, id{0, 1, 2};
  return TwistedWreath(a, s3, action_from_generators(s3, {L(s3, "(1 2)"), L(s3, "(1 2 3)")}, {inv, id}, a));
}

}  // namespace

TEST(FiniteGroup, Constructors) {
  EXPECT_EQ(FiniteGroup::cyclic(6).order(), 6);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24);
  EXPECT_EQ(FiniteGroup::dihedral(4).order(), 8);
  EXPECT_EQ(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)).order(), 6);
  EXPECT_TRUE(FiniteGroup::dihedral(5).verify_associativity_exhaustive());
  EXPECT_EQ(FiniteGroup::symmetric(3).label(0), "()");
  EXPECT_EQ(FiniteGroup::cyclic(12).element_order(8), 3);
}

TEST(FiniteGroup, TableValidation) {
  // identity at index 1 is moved to 0
  FiniteGroup g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  EXPECT_EQ(g.mul(0, 1), 1);
  EXPECT_EQ(g.label(0), "1");
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);  // not a Latin square
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {1, 0}}), Error);  // no identity
  // a commutative loop of order 5 that is not associative
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(loop), Error);
  EXPECT_THROW(FiniteGroup::cyclic(5001), Error);
}

TEST(FiniteGroup, LightTestAgreesWithTripleCheck) {
  for (int n = 3; n <= 6; ++n) EXPECT_TRUE(FiniteGroup::dihedral(n).verify_associativity_exhaustive());
  FiniteGroup d = FiniteGroup::direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(4));
  EXPECT_TRUE(d.verify_associativity_exhaustive());
}

TEST(FiniteGroup, HomomorphismExtension) {
  FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
  auto h = extend_hom(z4, z2, {1}, {1});
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(*h, mod_map(4, 2));
  EXPECT_FALSE(extend_hom(z2, z4, {1}, {1}).has_value());  // 1 has order 4 in Z/4
  EXPECT_TRUE(is_homomorphism(z4, z2, *h));
  EXPECT_EQ(hom_kernel(*h), (std::vector<int>{0, 2}));
}

TEST(TwistedWreath, CatalogueOrders) {
  TwistedWreath w1 = z2_wr_s3();
  EXPECT_EQ(w1.order(), 384);
  EXPECT_EQ(w1.index(), 6);
  TwistedWreath w2 = z3_wr_s3_inversion();
  EXPECT_EQ(w2.order(), 162);
  EXPECT_EQ(w2.index(), 3);
  TwistedWreath w3 = z3_wr_s3_full();
  EXPECT_EQ(w3.order(), 18);
  EXPECT_EQ(w3.index(), 1);
}

TEST(TwistedWreath, AssociativityExhaustive) {
  for (const auto& w : {z2_wr_s3(), z3_wr_s3_inversion(), z3_wr_s3_full()})
    EXPECT_TRUE(w.group().verify_associativity_exhaustive());
}

TEST(TwistedWreath, MultiplicationMatchesDefinition) {
  // (f s)(g t) = f g^(s^-1) s t with g^(s^-1)(x) = g(s^-1 x), checked on full functions
  TwistedWreath w = z3_wr_s3_inversion();
  const FiniteGroup& g = w.G();
  for (int x = 0; x < w.order(); x += 7)
    for (int y = 0; y < w.order(); y += 5) {
      auto ex = w.decode(x), ey = w.decode(y);
      auto fx = w.full_function(ex.f), fy = w.full_function(ey.f);
      std::vector<int> expect(static_cast<std::size_t>(g.order()));
      for (int s = 0; s < g.order(); ++s)
        expect[static_cast<std::size_t>(s)] = w.A().mul(fx[static_cast<std::size_t>(s)], fy[static_cast<std::size_t>(g.mul(g.inv(ex.sigma), s))]);
      auto z = w.decode(w.group().mul(x, y));
      EXPECT_EQ(w.full_function(z.f), expect);
      EXPECT_EQ(z.sigma, g.mul(ex.sigma, ey.sigma));
    }
}

TEST(TwistedWreath, KernelOfAlphaIsInducedModule) {
  for (const auto& w : {z2_wr_s3(), z3_wr_s3_inversion(), z3_wr_s3_full()}) {
    Hom a = w.alpha();
    EXPECT_TRUE(hom_exhaustive(w.group(), w.G(), a));
    EXPECT_TRUE(is_surjective(a, w.G()));
    EXPECT_EQ(hom_kernel(a), w.induced_module());
    long expected = 1;
    for (int i = 0; i < w.index(); ++i) expected *= w.A().order();
    EXPECT_EQ(static_cast<long>(w.induced_module().size()), expected);
    // every kernel element's full function satisfies f(s r) = f(s)^r
    for (int x : w.induced_module()) EXPECT_TRUE(w.restrict_induced(w.full_function(w.decode(x).f)).has_value());
  }
}

TEST(TwistedWreath, ShapiroSectionExhaustive) {
  for (const auto& w : {z2_wr_s3(), z3_wr_s3_inversion(), z3_wr_s3_full()}) {
    const Semidirect& sd = w.semidirect();
    EXPECT_EQ(sd.group().order(), w.A().order() * static_cast<int>(w.G0().size()));
    Hom rho(static_cast<std::size_t>(sd.group().order()));
    for (int x = 0; x < sd.group().order(); ++x) {
      rho[static_cast<std::size_t>(x)] = w.embed_semidirect(x);
      EXPECT_EQ(w.shapiro(rho[static_cast<std::size_t>(x)]), x);
    }
    EXPECT_EQ(rho[0], 0);
    EXPECT_TRUE(hom_exhaustive(sd.group(), w.group(), rho));
    EXPECT_TRUE(is_injective(rho));
    // pi is a surjective homomorphism on Ind x| G0
    std::vector<int> dom;
    for (int x = 0; x < w.order(); ++x)
      if (sd.position(w.decode(x).sigma) >= 0) dom.push_back(x);
    for (int x : dom)
      for (int y : dom) EXPECT_EQ(w.shapiro(w.group().mul(x, y)), sd.group().mul(w.shapiro(x), w.shapiro(y)));
  }
  TwistedWreath w = z3_wr_s3_inversion();
  int outside = -1;
  for (int x = 0; x < w.order() && outside < 0; ++x)
    if (w.semidirect().position(w.decode(x).sigma) < 0) outside = x;
  EXPECT_THROW(w.shapiro(outside), Error);
}

TEST(LiftSplitting, SignCharacterOnTransposition) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup a = FiniteGroup::cyclic(2);
  const int t = L(s3, "(1 2)");
  TwistedWreath w(a, s3, trivial_action(s3, {0, t}, a));
  ASSERT_EQ(w.G0(), (std::vector<int>{0, t}));
  std::vector<int> chi{0, 1};
  Hom j = lift_splitting(w, chi);
  EXPECT_TRUE(hom_exhaustive(s3, w.group(), j));
  EXPECT_EQ(compose(w.alpha(), j), Hom({0, 1, 2, 3, 4, 5}));
  for (std::size_t p = 0; p < w.G0().size(); ++p) {
    const int s = w.G0()[p];
    EXPECT_EQ(w.shapiro(j[static_cast<std::size_t>(s)]), w.semidirect().encode(chi[p], static_cast<int>(p)));
  }
  // the splitting given as a map into A x| G0 yields the same cocycle
  Hom i{w.semidirect().encode(0, 0), w.semidirect().encode(1, 1)};
  EXPECT_EQ(cocycle_of_splitting(w, i), chi);
}

TEST(LiftSplitting, TrivialSplittingLiftsTrivially) {
  TwistedWreath w = z3_wr_s3_inversion();
  Hom j = lift_splitting(w, std::vector<int>(w.G0().size(), 0));
  for (int s = 0; s < w.G().order(); ++s) {
    auto e = w.decode(j[static_cast<std::size_t>(s)]);
    EXPECT_EQ(e.sigma, s);
    EXPECT_EQ(e.f, std::vector<int>(static_cast<std::size_t>(w.index()), 0));
  }
  EXPECT_EQ(w.decode(j[0]).f, std::vector<int>(3, 0));  // f_1 = 1
}

TEST(LiftSplitting, TwistedCocycleExhaustive) {
  // Z/3 with inversion by (1 2): a_(12) = 1 satisfies a_1 = a_(12) a_(12)^(12) = 1 + 2 = 0
  TwistedWreath w = z3_wr_s3_inversion();
  std::vector<int> a{0, 1};
  Hom j = lift_splitting(w, a);
  EXPECT_TRUE(hom_exhaustive(w.G(), w.group(), j));
  EXPECT_EQ(compose(w.alpha(), j), [&] { Hom id(6); std::iota(id.begin(), id.end(), 0); return id; }());
  for (std::size_t p = 0; p < w.G0().size(); ++p)
    EXPECT_EQ(w.shapiro(j[static_cast<std::size_t>(w.G0()[p])]), w.semidirect().encode(a[p], static_cast<int>(p)));
  EXPECT_THROW(lift_splitting(z2_wr_s3(), {1}), Error);  // a_1 must be 1
}

TEST(EmbedBigger, DegenerateInclusion) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup a = FiniteGroup::cyclic(2);
  const int t = L(s3, "(1 2)");
  GroupAction act = trivial_action(s3, {0, t}, a);
  BiggerEmbedding e = embed_wreath_into_bigger(a, s3, act, {0, t}, {0, 1});
  EXPECT_EQ(e.big.order(), 2 * 2 * 2 * 6);
  EXPECT_TRUE(hom_exhaustive(subgroup_as_group(s3, {0, t}), e.big.group(), e.j));
  EXPECT_TRUE(is_injective(e.j));
  EXPECT_EQ(e.j, compose(e.phi, e.lifted));
  // pi(j(s)) = i(s) on G0
  EXPECT_EQ(e.big.shapiro(e.j[1]), e.big.semidirect().encode(1, 1));
}

TEST(EmbedBigger, ExtensionPreservesInducedAndIsInjective) {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup a = FiniteGroup::cyclic(2);
  const int t = L(s3, "(1 2)");
  GroupAction act = trivial_action(s3, {0, t}, a);
  std::vector<int> c3 = s3.closure({L(s3, "(1 2 3)")});
  // G = A_3, H0 = <(1 2)>, so G0 = 1 and (H:H0) = 3
  BiggerEmbedding e = embed_wreath_into_bigger(a, s3, act, c3, {0});
  EXPECT_EQ(e.big.index(), 3);
  EXPECT_TRUE(hom_exhaustive(e.small.group(), e.big.group(), e.phi));
  EXPECT_TRUE(is_injective(e.phi));
  EXPECT_TRUE(is_injective(e.j));
  EXPECT_TRUE(hom_exhaustive(subgroup_as_group(s3, c3), e.big.group(), e.j));
  for (int x = 0; x < e.small.order(); ++x) {
    auto full = extend_function(e.small, e.big, e.g_members, e.small.decode(x).f);
    EXPECT_TRUE(e.big.restrict_induced(full).has_value());
  }
  // G = S_3 itself: G0 = H0
  BiggerEmbedding whole = embed_wreath_into_bigger(a, s3, act, {0, 1, 2, 3, 4, 5}, {0, 1});
  EXPECT_TRUE(is_injective(whole.j));
  EXPECT_TRUE(hom_exhaustive(s3, whole.big.group(), whole.j));
  EXPECT_EQ(whole.big.shapiro(whole.j[static_cast<std::size_t>(t)]), whole.big.semidirect().encode(1, 1));
}

TEST(KaloujnineKrasner, CyclicFourIntoWreath) {
  FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
  KrasnerEmbedding e = kaloujnine_krasner_embed(z4, {0, 2}, z2, mod_map(4, 2));
  EXPECT_EQ(e.wreath.order(), 8);
  EXPECT_TRUE(hom_exhaustive(z4, e.wreath.group(), e.i));
  EXPECT_TRUE(is_injective(e.i));
  EXPECT_EQ(compose(e.wreath.alpha(), e.i), mod_map(4, 2));
}

TEST(KaloujnineKrasner, SymmetricThreeIntoWreath) {
  FiniteGroup s3 = FiniteGroup::symmetric(3), z2 = FiniteGroup::cyclic(2);
  Hom sign = sign_map(s3);
  KrasnerEmbedding e = kaloujnine_krasner_embed(s3, hom_kernel(sign), z2, sign);
  EXPECT_EQ(e.wreath.order(), 18);
  EXPECT_TRUE(hom_exhaustive(s3, e.wreath.group(), e.i));
  EXPECT_TRUE(is_injective(e.i));
  EXPECT_EQ(compose(e.wreath.alpha(), e.i), sign);
}

TEST(KaloujnineKrasner, SplitExtensionAndBadData) {
  // Z/2 x Z/2 -> Z/2 second factor, kernel the first factor
  FiniteGroup v = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  Hom second{0, 1, 0, 1};
  KrasnerEmbedding e = kaloujnine_krasner_embed(v, {0, 2}, FiniteGroup::cyclic(2), second);
  EXPECT_TRUE(hom_exhaustive(v, e.wreath.group(), e.i));
  EXPECT_TRUE(is_injective(e.i));
  EXPECT_THROW(kaloujnine_krasner_embed(v, {0, 1}, FiniteGroup::cyclic(2), second), Error);
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  EXPECT_THROW(kaloujnine_krasner_embed(s3, {0, L(s3, "(1 2)")}, FiniteGroup::cyclic(3), Hom(6, 0)), Error);
}

TEST(FineAction, WreathOfS2ByZ2) {
  FineWreath fw = fine_wreath_action(FiniteGroup::symmetric(2), FiniteGroup::cyclic(2));
  EXPECT_EQ(fw.wreath.order(), 8);
  EXPECT_TRUE(is_group_action(fw.wreath.group(), fw.action));
  EXPECT_TRUE(is_faithful_action(fw.action));
  EXPECT_TRUE(is_transitive_action(fw.wreath.group(), fw.action));
}

TEST(FineAction, CocycleIdentityAndEmbedding) {
  // Z/4 acting regularly on {0,1} x Z/2 via k <-> (k / 2, k % 2)
  FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
  ActionTable act(4, std::vector<int>(4));
  for (int h = 0; h < 4; ++h)
    for (int pt = 0; pt < 4; ++pt) {
      const int k = (pt / 2) * 2 + pt % 2;  // point x*2 + t is k = 2x + t
      act[static_cast<std::size_t>(h)][static_cast<std::size_t>(pt)] = (k + h) % 4;
    }
  Hom beta = mod_map(4, 2);
  for (int h1 = 0; h1 < 4; ++h1)
    for (int h2 = 0; h2 < 4; ++h2)
      for (int tau = 0; tau < 2; ++tau) {
        auto lhs = fine_component(act, z4.mul(h1, h2), tau, 2, 2);
        auto a = fine_component(act, h1, (beta[static_cast<std::size_t>(h2)] + tau) % 2, 2, 2);
        auto b = fine_component(act, h2, tau, 2, 2);
        EXPECT_EQ(lhs, (Permutation(a) * Permutation(b)).images());
      }
  FineEmbedding e = embed_fine(z4, z2, beta, 2, act);
  EXPECT_TRUE(hom_exhaustive(z4, e.target.wreath.group(), e.nu));
  EXPECT_TRUE(is_injective(e.nu));
  EXPECT_EQ(compose(e.target.wreath.alpha(), e.nu), beta);
  for (int h = 0; h < 4; ++h) EXPECT_EQ(e.target.action[static_cast<std::size_t>(e.nu[static_cast<std::size_t>(h)])], act[static_cast<std::size_t>(h)]);
  // an action that does not respect the fibres is refused
  ActionTable bad = act;
  for (auto& row : bad) std::swap(row[1], row[2]);
  EXPECT_THROW(embed_fine(z4, z2, beta, 2, bad), Error);
}

TEST(FiberProduct, Orders) {
  FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
  Hom q = mod_map(4, 2);
  FiberProduct fp = fiber_product(z4, q, z4, q, z2);
  EXPECT_EQ(fp.group.order(), 8);
  for (int x = 0; x < fp.group.order(); ++x)
    EXPECT_EQ(q[static_cast<std::size_t>(fp.projections[0][static_cast<std::size_t>(x)])], q[static_cast<std::size_t>(fp.projections[1][static_cast<std::size_t>(x)])]);
  for (const auto& pr : fp.projections) {
    EXPECT_TRUE(hom_exhaustive(fp.group, z4, pr));
    EXPECT_TRUE(is_surjective(pr, z4));
  }
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  Hom id(6);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(fiber_product(s3, id, s3, id, s3).group.order(), 6);
  FiberProduct cube = fiber_power(z4, q, z2, 3);
  EXPECT_EQ(cube.group.order(), 16);
  EXPECT_TRUE(cube.group.verify_associativity_exhaustive());
  EXPECT_THROW(fiber_product(z4, Hom(4, 0), z4, q, z2), Error);
}

TEST(QuasiP, SymmetricThree) {
  QuasiPReport r = quasi_p_semidirect(2, 1, 3, 2);
  EXPECT_EQ(r.group.order(), 6);
  // non-abelian of order 6
  bool abelian = true;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) abelian = abelian && r.group.mul(x, y) == r.group.mul(y, x);
  EXPECT_FALSE(abelian);
  EXPECT_TRUE(r.generated_by_sylows);
  EXPECT_TRUE(r.closed_form_identity);
  EXPECT_TRUE(r.only_trivial_prime_to_p_quotient);
  EXPECT_TRUE(r.all_orders_realized);
  for (int d : {1, 2, 3, 6}) {
    EXPECT_EQ(static_cast<int>(r.subgroup_of_order.at(d).size()), d);
    EXPECT_TRUE(r.group.is_subgroup(r.subgroup_of_order.at(d)));
  }
}

TEST(QuasiP, OrderThirtyNine) {
  QuasiPReport r = quasi_p_semidirect(3, 1, 13, 3);
  EXPECT_EQ(r.group.order(), 39);
  EXPECT_TRUE(r.generated_by_sylows);
  EXPECT_TRUE(r.closed_form_identity);
  EXPECT_TRUE(r.only_trivial_prime_to_p_quotient);
  EXPECT_EQ(r.prime_to_p_quotient_orders, std::vector<int>{1});
  EXPECT_EQ(normal_subgroups(r.group).size(), 3u);  // 1, Z/13, H
  EXPECT_TRUE(r.all_orders_realized);
}

TEST(QuasiP, RejectsBadParameters) {
  EXPECT_THROW(quasi_p_semidirect(2, 1, 4, 3), Error);   // p | m
  EXPECT_THROW(quasi_p_semidirect(3, 1, 13, 2), Error);  // 2 has order 12 mod 13
  EXPECT_THROW(quasi_p_semidirect(4, 1, 5, 2), Error);   // p not prime
}
