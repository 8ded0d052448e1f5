#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dirichlet/finite_group.hpp"

namespace dirichlet {

/// Right action of a subgroup G0 <= G on A by automorphisms:
/// table[sigma][a] = a^sigma for sigma in G0, empty rows elsewhere.
struct GroupAction {
  std::vector<int> acting;
  std::vector<std::vector<int>> table;

  int apply(int a, int sigma) const {
    const auto& row = table[static_cast<std::size_t>(sigma)];
    require(!row.empty(), Errc::InvalidArgument, "element outside the acting subgroup");
    return row[static_cast<std::size_t>(a)];
  }
  bool acts(int sigma) const { return !table[static_cast<std::size_t>(sigma)].empty(); }
};

/// Checks that every row is an automorphism of A and that
/// (a^sigma)^tau = a^(sigma tau).
inline void validate_action(const FiniteGroup& g, const FiniteGroup& a, const GroupAction& act) {
  require(g.is_subgroup(act.acting), Errc::NotASubgroup, "acting set is not a subgroup");
  require(static_cast<int>(act.table.size()) == g.order(), Errc::InvalidArgument, "action table size mismatch");
  for (int s : act.acting) {
    const auto& row = act.table[static_cast<std::size_t>(s)];
    require(static_cast<int>(row.size()) == a.order(), Errc::InvalidArgument, "action row size mismatch");
    require(is_homomorphism(a, a, row) && is_injective(row), Errc::InvalidArgument, "action row is not an automorphism");
    for (int t : act.acting)
      for (int x = 0; x < a.order(); ++x)
        require(act.apply(act.apply(x, s), t) == act.apply(x, g.mul(s, t)), Errc::InvalidArgument,
                "action is not a right action");
  }
}

inline GroupAction trivial_action(const FiniteGroup& g, std::vector<int> acting, const FiniteGroup& a) {
  GroupAction act{std::move(acting), std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()))};
  std::vector<int> id(static_cast<std::size_t>(a.order()));
  std::iota(id.begin(), id.end(), 0);
  for (int s : act.acting) act.table[static_cast<std::size_t>(s)] = id;
  return act;
}

/// Right action determined by automorphisms assigned to generators of G0.
inline GroupAction action_from_generators(const FiniteGroup& g, const std::vector<int>& gens,
                                          const std::vector<Hom>& automorphisms, const FiniteGroup& a) {
  require(gens.size() == automorphisms.size(), Errc::InvalidArgument, "generator/automorphism count mismatch");
  GroupAction act{g.closure(gens), std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()))};
  std::vector<int> id(static_cast<std::size_t>(a.order()));
  std::iota(id.begin(), id.end(), 0);
  act.table[0] = id;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mul(x, gens[k]);
      std::vector<int> row(static_cast<std::size_t>(a.order()));
      for (int v = 0; v < a.order(); ++v)
        row[static_cast<std::size_t>(v)] = automorphisms[k][static_cast<std::size_t>(act.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)])];
      auto& slot = act.table[static_cast<std::size_t>(y)];
      if (slot.empty()) {
        slot = std::move(row);
        queue.push_back(y);
      } else {
        require(slot == row, Errc::InvalidArgument, "automorphism assignment does not define an action");
      }
    }
  }
  validate_action(g, a, act);
  return act;
}

/// Each generator of G0 acts by inversion (A must be abelian).
inline GroupAction inversion_action(const FiniteGroup& g, const std::vector<int>& gens, const FiniteGroup& a) {
  Hom inv(static_cast<std::size_t>(a.order()));
  for (int x = 0; x < a.order(); ++x) inv[static_cast<std::size_t>(x)] = a.inv(x);
  require(is_homomorphism(a, a, inv), Errc::InvalidArgument, "inversion is an automorphism only for abelian A");
  return action_from_generators(g, gens, std::vector<Hom>(gens.size(), inv), a);
}

/// A semidirect product A x| G0 with (a s)(b t) = a b^(s^-1) s t, where G0 is
/// a subgroup of G acting from the right. Index a*|G0| + position of s in G0.
class Semidirect {
 public:
  Semidirect(FiniteGroup a, const FiniteGroup& g, GroupAction act) : a_(std::move(a)), act_(std::move(act)) {
    validate_action(g, a_, act_);
    pos_.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < act_.acting.size(); ++i) pos_[static_cast<std::size_t>(act_.acting[i])] = static_cast<int>(i);
    g0_ = subgroup_as_group(g, act_.acting);
    const long n = static_cast<long>(a_.order()) * g0_.order();
    require(n <= kGroupOrderGuard, Errc::OrderGuardExceeded, "semidirect product exceeds guard");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> labels;
    for (int x = 0; x < n; ++x) {
      labels.push_back(a_.label(x / g0_.order()) + "*" + g0_.label(x % g0_.order()));
      for (int y = 0; y < n; ++y) t[x][y] = mul_raw(x, y);
    }
    group_ = FiniteGroup::from_table(std::move(t), std::move(labels));
  }

  const FiniteGroup& group() const { return group_; }
  const FiniteGroup& A() const { return a_; }
  /// G0 as a group; its element i is acting()[i] in G.
  const FiniteGroup& G0() const { return g0_; }
  const std::vector<int>& acting() const { return act_.acting; }
  const GroupAction& action() const { return act_; }
  /// Position of a G-element inside G0, or -1.
  int position(int sigma_in_g) const { return pos_[static_cast<std::size_t>(sigma_in_g)]; }

  int encode(int a, int g0_pos) const { return a * g0_.order() + g0_pos; }
  int a_part(int x) const { return x / g0_.order(); }
  int g0_part(int x) const { return x % g0_.order(); }
  /// The quotient map onto G0, as positions.
  Hom alpha0() const {
    Hom h(static_cast<std::size_t>(group_.order()));
    for (int x = 0; x < group_.order(); ++x) h[static_cast<std::size_t>(x)] = g0_part(x);
    return h;
  }

 private:
  int mul_raw(int x, int y) const {
    const int s = g0_part(x), t = g0_part(y);
    const int sinv_g = act_.acting[static_cast<std::size_t>(g0_.inv(s))];
    const int b = act_.apply(a_part(y), sinv_g);
    return encode(a_.mul(a_part(x), b), g0_.mul(s, t));
  }

  FiniteGroup a_;
  GroupAction act_;
  std::vector<int> pos_;
  FiniteGroup g0_ = FiniteGroup::trivial();
  FiniteGroup group_ = FiniteGroup::trivial();
};

/// Twisted wreath product A wr_{G0} G = Ind_{G0}^G(A) x| G with
/// (f s)(g t) = f g^(s^-1) s t, where g^(s^-1)(x) = g(s^-1 x).
/// Elements of Ind are stored by their values on a fixed left transversal
/// of G0 (smallest index in each coset, so the identity comes first).
class TwistedWreath {
 public:
  struct Element {
    std::vector<int> f;
    int sigma = 0;
    friend bool operator==(const Element&, const Element&) = default;
  };

  TwistedWreath(FiniteGroup a, FiniteGroup g, GroupAction act)
      : a_(std::move(a)), g_(std::move(g)), act_(std::move(act)) {
    validate_action(g_, a_, act_);
    const int n = g_.order();
    coset_.assign(static_cast<std::size_t>(n), -1);
    rho_.assign(static_cast<std::size_t>(n), -1);
    for (int t = 0; t < n; ++t) {
      if (coset_[static_cast<std::size_t>(t)] >= 0) continue;
      const int c = static_cast<int>(reps_.size());
      reps_.push_back(t);
      for (int r : act_.acting) {
        const int tr = g_.mul(t, r);
        coset_[static_cast<std::size_t>(tr)] = c;
        rho_[static_cast<std::size_t>(tr)] = r;
      }
    }
    long order = g_.order();
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      order *= a_.order();
      require(order <= kGroupOrderGuard, Errc::OrderGuardExceeded,
              "twisted wreath product order exceeds guard " + std::to_string(kGroupOrderGuard));
    }
    order_ = static_cast<int>(order);
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
    std::vector<Element> dec;
    dec.reserve(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_; ++x) dec.push_back(decode(x));
    std::vector<std::string> labels;
    for (int x = 0; x < order_; ++x) {
      std::string l = "[";
      for (std::size_t i = 0; i < reps_.size(); ++i) l += (i ? "," : "") + a_.label(dec[x].f[i]);
      labels.push_back(l + "]" + g_.label(dec[x].sigma));
      for (int y = 0; y < order_; ++y) t[x][y] = encode(mul(dec[x], dec[y]));
    }
    group_ = std::make_shared<FiniteGroup>(FiniteGroup::from_table(std::move(t), std::move(labels)));
  }

  /// Untwisted wreath product A wr G (G0 = 1).
  static TwistedWreath plain(FiniteGroup a, FiniteGroup g) {
    GroupAction act = trivial_action(g, {0}, a);
    return TwistedWreath(std::move(a), std::move(g), std::move(act));
  }

  const FiniteGroup& A() const { return a_; }
  const FiniteGroup& G() const { return g_; }
  const std::vector<int>& G0() const { return act_.acting; }
  const GroupAction& action() const { return act_; }
  const FiniteGroup& group() const { return *group_; }
  int order() const { return order_; }
  /// (G : G0)
  int index() const { return static_cast<int>(reps_.size()); }
  const std::vector<int>& transversal() const { return reps_; }

  int encode(const Element& e) const {
    int code = 0;
    for (std::size_t i = reps_.size(); i-- > 0;) code = code * a_.order() + e.f[i];
    return code * g_.order() + e.sigma;
  }
  Element decode(int x) const {
    Element e;
    e.sigma = x % g_.order();
    x /= g_.order();
    e.f.resize(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      e.f[i] = x % a_.order();
      x /= a_.order();
    }
    return e;
  }

  /// f(tau) for tau = r rho with r in the transversal: f(r)^rho.
  int value_at(const std::vector<int>& f, int tau) const {
    const auto c = static_cast<std::size_t>(coset_[static_cast<std::size_t>(tau)]);
    return act_.apply(f[c], rho_[static_cast<std::size_t>(tau)]);
  }

  std::vector<int> full_function(const std::vector<int>& f) const {
    std::vector<int> out(static_cast<std::size_t>(g_.order()));
    for (int t = 0; t < g_.order(); ++t) out[static_cast<std::size_t>(t)] = value_at(f, t);
    return out;
  }

  /// Restriction to the transversal when `full` satisfies f(s r) = f(s)^r.
  std::optional<std::vector<int>> restrict_induced(const std::vector<int>& full) const {
    for (int s = 0; s < g_.order(); ++s)
      for (int r : act_.acting)
        if (full[static_cast<std::size_t>(g_.mul(s, r))] != act_.apply(full[static_cast<std::size_t>(s)], r))
          return std::nullopt;
    std::vector<int> f;
    for (int r : reps_) f.push_back(full[static_cast<std::size_t>(r)]);
    return f;
  }

  Element mul(const Element& x, const Element& y) const {
    Element z;
    z.sigma = g_.mul(x.sigma, y.sigma);
    const int sinv = g_.inv(x.sigma);
    z.f.resize(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
      z.f[i] = a_.mul(x.f[i], value_at(y.f, g_.mul(sinv, reps_[i])));
    return z;
  }

  /// The quotient map f s -> s.
  Hom alpha() const {
    Hom h(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_; ++x) h[static_cast<std::size_t>(x)] = x % g_.order();
    return h;
  }

  /// ker(alpha) = Ind_{G0}^G(A), as sorted indices.
  std::vector<int> induced_module() const {
    std::vector<int> out;
    for (int x = 0; x < order_; ++x)
      if (x % g_.order() == 0) out.push_back(x);
    return out;
  }

  /// A x| G0 with the same action.
  const Semidirect& semidirect() const {
    if (!semi_) semi_ = std::make_shared<Semidirect>(a_, g_, act_);
    return *semi_;
  }

  /// rho(a s) = f_a s with f_a(t) = a^t on G0 and 1 elsewhere.
  int embed_semidirect(int x) const {
    const Semidirect& sd = semidirect();
    Element e;
    e.sigma = sd.acting()[static_cast<std::size_t>(sd.g0_part(x))];
    e.f.assign(reps_.size(), 0);
    e.f[0] = sd.a_part(x);
    return encode(e);
  }

  /// The Shapiro map pi(f s) = f(1) s, defined for s in G0.
  int shapiro(int x) const {
    const Semidirect& sd = semidirect();
    Element e = decode(x);
    const int pos = sd.position(e.sigma);
    require(pos >= 0, Errc::InvalidArgument, "Shapiro map needs sigma in G0");
    return sd.encode(e.f[0], pos);
  }

 private:
  FiniteGroup a_, g_;
  GroupAction act_;
  std::vector<int> reps_, coset_, rho_;
  int order_ = 0;
  std::shared_ptr<FiniteGroup> group_;
  mutable std::shared_ptr<Semidirect> semi_;
};

/// Checks a_{st} = a_s a_t^(s^-1) on G0, i.e. that s -> a_s s is a splitting.
/// `cocycle[i]` belongs to the i-th element of w.G0().
inline bool is_splitting_cocycle(const TwistedWreath& w, const std::vector<int>& cocycle) {
  const auto& g0 = w.G0();
  if (cocycle.size() != g0.size()) return false;
  std::unordered_map<int, int> a;
  for (std::size_t i = 0; i < g0.size(); ++i) a[g0[i]] = cocycle[i];
  for (int s : g0)
    for (int t : g0) {
      const int lhs = a.at(w.G().mul(s, t));
      const int rhs = w.A().mul(a.at(s), w.action().apply(a.at(t), w.G().inv(s)));
      if (lhs != rhs) return false;
    }
  return true;
}

/// Cocycle of a splitting given as a map G0 (positions) -> A x| G0.
inline std::vector<int> cocycle_of_splitting(const TwistedWreath& w, const Hom& i) {
  const Semidirect& sd = w.semidirect();
  require(is_homomorphism(sd.G0(), sd.group(), i), Errc::NotASplitting, "i is not a homomorphism");
  std::vector<int> a;
  for (int s = 0; s < sd.G0().order(); ++s) {
    require(sd.g0_part(i[static_cast<std::size_t>(s)]) == s, Errc::NotASplitting, "alpha0 o i is not the identity");
    a.push_back(sd.a_part(i[static_cast<std::size_t>(s)]));
  }
  return a;
}

/// Lifts a splitting s -> a_s s of A x| G0 -> G0 to a splitting j of
/// A wr_{G0} G -> G with j(t) = f_t t and f_t(s) = a_{s^-1}^-1 a_{s^-1 t},
/// where a is extended to G through the right cosets G0 r.
inline Hom lift_splitting(const TwistedWreath& w, const std::vector<int>& cocycle) {
  require(is_splitting_cocycle(w, cocycle), Errc::NotASplitting, "i is not a splitting of A x| G0 -> G0");
  const FiniteGroup& g = w.G();
  const FiniteGroup& a = w.A();
  std::vector<int> on_g0(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < w.G0().size(); ++i) on_g0[static_cast<std::size_t>(w.G0()[i])] = cocycle[i];
  // a_s = a_{s'} where s = s' r, r the smallest index of its right coset G0 s
  std::vector<int> ext(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (ext[static_cast<std::size_t>(s)] >= 0) continue;
    const int r = s;
    for (int sp : w.G0()) ext[static_cast<std::size_t>(g.mul(sp, r))] = on_g0[static_cast<std::size_t>(sp)];
  }
  Hom j(static_cast<std::size_t>(g.order()));
  for (int t = 0; t < g.order(); ++t) {
    std::vector<int> full(static_cast<std::size_t>(g.order()));
    for (int s = 0; s < g.order(); ++s) {
      const int sinv = g.inv(s);
      full[static_cast<std::size_t>(s)] =
          a.mul(a.inv(ext[static_cast<std::size_t>(sinv)]), ext[static_cast<std::size_t>(g.mul(sinv, t))]);
    }
    auto f = w.restrict_induced(full);
    require(f.has_value(), Errc::NotASplitting, "lifted function is not induced");
    j[static_cast<std::size_t>(t)] = w.encode({*f, t});
  }
  return j;
}

/// j: G -> A wr_{H0} H for subgroups G, H0 of H, built from a splitting of
/// A x| G0 -> G0 with G0 = G n H0.
struct BiggerEmbedding {
  TwistedWreath small;  // A wr_{G0} G, G indexed by position in g_members
  TwistedWreath big;    // A wr_{H0} H
  std::vector<int> g_members;
  Hom lifted;  // G -> small
  Hom phi;     // small -> big
  Hom j;       // G -> big
};

/// phi(f s) = f~ s with f~(s h) = f(s)^h on G.H0 and 1 elsewhere.
inline std::vector<int> extend_function(const TwistedWreath& small, const TwistedWreath& big,
                                        const std::vector<int>& g_members, const std::vector<int>& f) {
  const FiniteGroup& h = big.G();
  std::vector<int> full(static_cast<std::size_t>(h.order()), 0);
  for (int x = 0; x < h.order(); ++x) {
    for (std::size_t p = 0; p < g_members.size(); ++p) {
      const int hh = h.mul(h.inv(g_members[p]), x);
      if (big.action().acts(hh)) {
        full[static_cast<std::size_t>(x)] = big.action().apply(small.value_at(f, static_cast<int>(p)), hh);
        break;
      }
    }
  }
  return full;
}

inline BiggerEmbedding embed_wreath_into_bigger(const FiniteGroup& a, const FiniteGroup& h, const GroupAction& act_h0,
                                                std::vector<int> g_members, const std::vector<int>& cocycle) {
  std::sort(g_members.begin(), g_members.end());
  require(h.is_subgroup(g_members), Errc::NotASubgroup, "G is not a subgroup of H");
  validate_action(h, a, act_h0);
  FiniteGroup gg = subgroup_as_group(h, g_members);
  GroupAction act_g0{{}, std::vector<std::vector<int>>(g_members.size())};
  for (std::size_t p = 0; p < g_members.size(); ++p) {
    if (act_h0.acts(g_members[p])) {
      act_g0.acting.push_back(static_cast<int>(p));
      act_g0.table[p] = act_h0.table[static_cast<std::size_t>(g_members[p])];
    }
  }
  TwistedWreath small(a, gg, act_g0);
  TwistedWreath big(a, h, act_h0);
  Hom lifted = lift_splitting(small, cocycle);
  Hom phi(static_cast<std::size_t>(small.order()));
  for (int x = 0; x < small.order(); ++x) {
    auto e = small.decode(x);
    auto full = extend_function(small, big, g_members, e.f);
    auto f = big.restrict_induced(full);
    require(f.has_value(), Errc::PreconditionViolation, "extended function is not induced");
    phi[static_cast<std::size_t>(x)] = big.encode({*f, g_members[static_cast<std::size_t>(e.sigma)]});
  }
  Hom j = compose(phi, lifted);
  return BiggerEmbedding{std::move(small), std::move(big), std::move(g_members), std::move(lifted), std::move(phi), std::move(j)};
}

/// Extension 1 -> A -> H -> G -> 1 embedded in A wr G via a section t with
/// t(1) = 1: i(h) = f_h pi(h), f_h(x) = t(x)^-1 h t(pi(h)^-1 x).
struct KrasnerEmbedding {
  TwistedWreath wreath;
  std::vector<int> a_members;
  Hom i;
};

inline KrasnerEmbedding kaloujnine_krasner_embed(const FiniteGroup& h, std::vector<int> a_members,
                                                 const FiniteGroup& g, const Hom& pi) {
  std::sort(a_members.begin(), a_members.end());
  require(h.is_normal(a_members), Errc::InvalidExtension, "A is not a normal subgroup of H");
  require(is_homomorphism(h, g, pi), Errc::InvalidExtension, "pi is not a homomorphism");
  require(is_surjective(pi, g), Errc::InvalidExtension, "pi is not surjective");
  require(hom_kernel(pi) == a_members, Errc::InvalidExtension, "ker(pi) differs from A");
  FiniteGroup a = subgroup_as_group(h, a_members);
  std::vector<int> pos(static_cast<std::size_t>(h.order()), -1);
  for (std::size_t k = 0; k < a_members.size(); ++k) pos[static_cast<std::size_t>(a_members[k])] = static_cast<int>(k);
  std::vector<int> t(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < h.order(); ++x)
    if (t[static_cast<std::size_t>(pi[static_cast<std::size_t>(x)])] < 0) t[static_cast<std::size_t>(pi[static_cast<std::size_t>(x)])] = x;
  TwistedWreath w = TwistedWreath::plain(a, g);
  Hom i(static_cast<std::size_t>(h.order()));
  for (int x = 0; x < h.order(); ++x) {
    const int px = pi[static_cast<std::size_t>(x)];
    std::vector<int> f(static_cast<std::size_t>(g.order()));
    for (int y = 0; y < g.order(); ++y) {
      const int ty = t[static_cast<std::size_t>(y)];
      const int tz = t[static_cast<std::size_t>(g.mul(g.inv(px), y))];
      const int v = h.mul(h.mul(h.inv(ty), x), tz);
      f[static_cast<std::size_t>(y)] = pos[static_cast<std::size_t>(v)];
    }
    // the transversal of the trivial subgroup is G in index order
    i[static_cast<std::size_t>(x)] = w.encode({f, px});
  }
  return KrasnerEmbedding{std::move(w), std::move(a_members), std::move(i)};
}

/// Action of a group on points 0..m-1: table[g][x].
using ActionTable = std::vector<std::vector<int>>;

inline bool is_group_action(const FiniteGroup& g, const ActionTable& t) {
  if (static_cast<int>(t.size()) != g.order()) return false;
  const std::size_t m = t.empty() ? 0 : t[0].size();
  for (std::size_t x = 0; x < m; ++x)
    if (t[0][x] != static_cast<int>(x)) return false;
  for (int a = 0; a < g.order(); ++a) {
    if (t[static_cast<std::size_t>(a)].size() != m) return false;
    for (int b = 0; b < g.order(); ++b)
      for (std::size_t x = 0; x < m; ++x)
        if (t[static_cast<std::size_t>(g.mul(a, b))][x] != t[static_cast<std::size_t>(a)][static_cast<std::size_t>(t[static_cast<std::size_t>(b)][x])])
          return false;
  }
  return true;
}

inline bool is_faithful_action(const ActionTable& t) {
  for (std::size_t a = 1; a < t.size(); ++a)
    if (t[a] == t[0]) return false;
  return true;
}

inline bool is_transitive_action(const FiniteGroup& g, const ActionTable& t) {
  if (t.empty() || t[0].empty()) return true;
  std::vector<char> seen(t[0].size(), 0);
  seen[0] = 1;
  std::size_t count = 1;
  for (int a = 0; a < g.order(); ++a) {
    const int y = t[static_cast<std::size_t>(a)][0];
    if (!seen[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = 1;
      ++count;
    }
  }
  return count == t[0].size();
}

/// A wr G acting on X x G by (f s)(x, t) = (f(s t) x, s t).
/// Points are numbered x*|G| + t.
struct FineWreath {
  TwistedWreath wreath;
  int points_x = 0;
  ActionTable action;
};

inline FineWreath fine_wreath_action(const FiniteGroup& a, const FiniteGroup& g) {
  require(a.perms().has_value(), Errc::InvalidArgument, "A needs a permutation realization");
  const int n = a.perm_degree();
  TwistedWreath w = TwistedWreath::plain(a, g);
  const int gn = g.order();
  ActionTable t(static_cast<std::size_t>(w.order()), std::vector<int>(static_cast<std::size_t>(n * gn)));
  for (int x = 0; x < w.order(); ++x) {
    auto e = w.decode(x);
    for (int pt = 0; pt < n; ++pt)
      for (int tau = 0; tau < gn; ++tau) {
        const int st = g.mul(e.sigma, tau);
        const int fa = e.f[static_cast<std::size_t>(st)];
        t[static_cast<std::size_t>(x)][static_cast<std::size_t>(pt * gn + tau)] = (*a.perms())[static_cast<std::size_t>(fa)](pt) * gn + st;
      }
  }
  return FineWreath{std::move(w), n, std::move(t)};
}

/// h(x, t) = (h_t(x), beta(h) t); returns h_t as an image vector on X.
inline std::vector<int> fine_component(const ActionTable& act, int h, int tau, int n, int gn) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = act[static_cast<std::size_t>(h)][static_cast<std::size_t>(x * gn + tau)] / gn;
  return img;
}

struct FineEmbedding {
  FineWreath target;  // S_n wr G
  Hom nu;
};

/// nu(h) = f_h g with g = beta(h) and f_h(s)(x) = h_{g^-1 s}(x).
inline FineEmbedding embed_fine(const FiniteGroup& h, const FiniteGroup& g, const Hom& beta, int n, const ActionTable& act) {
  const int gn = g.order();
  require(is_homomorphism(h, g, beta) && is_surjective(beta, g), Errc::ActionNotFine, "beta is not an epimorphism");
  require(is_group_action(h, act), Errc::ActionNotFine, "table is not an action");
  require(act.empty() || static_cast<int>(act[0].size()) == n * gn, Errc::ActionNotFine, "action on wrong point set");
  require(is_faithful_action(act), Errc::ActionNotFine, "action is not faithful");
  require(is_transitive_action(h, act), Errc::ActionNotFine, "action is not transitive");
  for (int x = 0; x < h.order(); ++x)
    for (int p = 0; p < n * gn; ++p)
      require(act[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)] % gn == g.mul(beta[static_cast<std::size_t>(x)], p % gn),
              Errc::ActionNotFine, "h does not map X x {t} onto X x {beta(h) t}");
  FiniteGroup sn = FiniteGroup::symmetric(n);
  std::unordered_map<std::uint64_t, int> index;
  for (int k = 0; k < sn.order(); ++k) index.emplace((*sn.perms())[static_cast<std::size_t>(k)].key(), k);
  FineWreath target = fine_wreath_action(sn, g);
  Hom nu(static_cast<std::size_t>(h.order()));
  for (int x = 0; x < h.order(); ++x) {
    const int gx = beta[static_cast<std::size_t>(x)];
    std::vector<int> f(static_cast<std::size_t>(gn));
    for (int s = 0; s < gn; ++s)
      f[static_cast<std::size_t>(s)] = index.at(Permutation(fine_component(act, x, g.mul(g.inv(gx), s), n, gn)).key());
    nu[static_cast<std::size_t>(x)] = target.wreath.encode({f, gx});
  }
  return FineEmbedding{std::move(target), std::move(nu)};
}

}  // namespace dirichlet
