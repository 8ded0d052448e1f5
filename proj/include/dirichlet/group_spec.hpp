#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/wreath.hpp"

namespace dirichlet {

/// Textual group descriptions:
///   trivial | cyclic:n | sym:n | dihedral:n
///   table:{r0;r1;...}           rows of comma-separated entries
///   perm:{degree;(1 2 3);(1 2)} generators in 1-based cycle notation
///   direct:{G,H}
///   twisted_wreath:{A,G,<g;...>,trivial|inversion}  G0 generated by G labels
namespace spec {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Splits on `sep` outside (), {} and <>. The `>` of an arrow `->` is not a bracket.
inline std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '{' || c == '<') ++depth;
    else if (c == ')' || c == '}' || (c == '>' && (i == 0 || s[i - 1] != '-'))) {
      require(--depth >= 0, Errc::ParseError, "unbalanced brackets in '" + std::string(s) + "'");
    } else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  require(depth == 0, Errc::ParseError, "unbalanced brackets in '" + std::string(s) + "'");
  out.push_back(trim(s.substr(start)));
  return out;
}

inline int parse_int(std::string_view s, const std::string& what) {
  const std::string t = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  require(ec == std::errc{} && ptr == t.data() + t.size() && !t.empty(), Errc::ParseError,
          "expected an integer for " + what + ", got '" + t + "'");
  return v;
}

/// Contents of `open ... close` spanning the whole (trimmed) string.
inline std::string unwrap(std::string_view s, char open, char close, const std::string& what) {
  const std::string t = trim(s);
  require(t.size() >= 2 && t.front() == open && t.back() == close, Errc::ParseError,
          what + " must be enclosed in " + open + "..." + close);
  return t.substr(1, t.size() - 2);
}

inline int element(const FiniteGroup& g, const std::string& label) {
  const std::string t = trim(label);
  if (auto idx = g.index_of_label(t)) return *idx;
  if (g.perms() && !t.empty() && t.front() == '(') {
    // permutation groups also accept any spelling of the cycle notation
    const Permutation p = Permutation::parse(t, g.perm_degree());
    for (int x = 0; x < g.order(); ++x)
      if ((*g.perms())[static_cast<std::size_t>(x)] == p) return x;
  }
  fail(Errc::ParseError, "unknown group element '" + t + "'");
}

}  // namespace spec

inline FiniteGroup parse_group(std::string_view text);

struct WreathSpec {
  FiniteGroup a, g;
  GroupAction action;
  std::string action_name;
};

/// Parses the body of `twisted_wreath:{A,G,<g0 gens>,action}`.
inline WreathSpec parse_wreath_spec(std::string_view text) {
  std::string body = spec::trim(text);
  constexpr std::string_view kPrefix = "twisted_wreath:";
  require(body.rfind(kPrefix, 0) == 0, Errc::ParseError, "expected twisted_wreath:{A,G,<G0 generators>,action}");
  const auto parts = spec::split_top(spec::unwrap(body.substr(kPrefix.size()), '{', '}', "twisted_wreath"), ',');
  require(parts.size() == 4, Errc::ParseError, "twisted_wreath takes four arguments A,G,<G0>,action");
  WreathSpec w{parse_group(parts[0]), parse_group(parts[1]), {}, parts[3]};
  std::vector<int> gens;
  const std::string g0 = spec::trim(spec::unwrap(parts[2], '<', '>', "G0"));
  if (!g0.empty())
    for (const auto& l : spec::split_top(g0, ';')) gens.push_back(spec::element(w.g, l));
  if (w.action_name == "trivial") w.action = trivial_action(w.g, w.g.closure(gens), w.a);
  else if (w.action_name == "inversion") w.action = inversion_action(w.g, gens, w.a);
  else fail(Errc::ParseError, "unknown action '" + w.action_name + "' (expected trivial or inversion)");
  return w;
}

inline FiniteGroup parse_group(std::string_view text) {
  const std::string t = spec::trim(text);
  if (t == "trivial") return FiniteGroup::trivial();
  const auto colon = t.find(':');
  require(colon != std::string::npos, Errc::ParseError, "unknown group description '" + t + "'");
  const std::string kind = t.substr(0, colon);
  const std::string arg = t.substr(colon + 1);
  auto positive = [&](const std::string& what) {
    const int n = spec::parse_int(arg, what);
    require(n >= 1, Errc::ParseError, what + " must be positive");
    return n;
  };
  if (kind == "cyclic") return FiniteGroup::cyclic(positive("cyclic order"));
  if (kind == "sym") return FiniteGroup::symmetric(positive("symmetric degree"));
  if (kind == "dihedral") return FiniteGroup::dihedral(positive("dihedral degree"));
  if (kind == "table") {
    std::vector<std::vector<int>> rows;
    for (const auto& r : spec::split_top(spec::unwrap(arg, '{', '}', "table"), ';')) {
      std::vector<int> row;
      for (const auto& v : spec::split_top(r, ',')) row.push_back(spec::parse_int(v, "table entry"));
      rows.push_back(std::move(row));
    }
    return FiniteGroup::from_table(std::move(rows));
  }
  if (kind == "perm") {
    const auto parts = spec::split_top(spec::unwrap(arg, '{', '}', "perm"), ';');
    const int degree = spec::parse_int(parts[0], "permutation degree");
    std::vector<std::string> gens(parts.begin() + 1, parts.end());
    return FiniteGroup::from_perms(PermGroup::parse(degree, gens));
  }
  if (kind == "direct") {
    const auto parts = spec::split_top(spec::unwrap(arg, '{', '}', "direct"), ',');
    require(parts.size() >= 2, Errc::ParseError, "direct takes at least two factors");
    FiniteGroup g = parse_group(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = FiniteGroup::direct_product(g, parse_group(parts[i]));
    return g;
  }
  if (kind == "twisted_wreath") {
    WreathSpec w = parse_wreath_spec(t);
    return TwistedWreath(std::move(w.a), std::move(w.g), std::move(w.action)).group();
  }
  fail(Errc::ParseError, "unknown group kind '" + kind + "'");
}

/// Homomorphism from `src -> dst` label pairs separated by ';'. The listed
/// sources must generate the source group; the rest is forced.
inline Hom parse_hom(const FiniteGroup& src, const FiniteGroup& dst, std::string_view text) {
  std::vector<int> gens, images;
  const std::string t = spec::trim(text);
  if (!t.empty())
    for (const auto& pair : spec::split_top(t, ';')) {
      const auto arrow = pair.find("->");
      require(arrow != std::string::npos, Errc::ParseError, "expected 'source->image', got '" + pair + "'");
      gens.push_back(spec::element(src, pair.substr(0, arrow)));
      images.push_back(spec::element(dst, pair.substr(arrow + 2)));
    }
  auto h = extend_hom(src, dst, gens, images);
  require(h.has_value(), Errc::ParseError, "map '" + t + "' does not extend to a homomorphism on a generating set");
  return *h;
}

/// Subgroup generated by the labels in `<g;h;...>`.
inline std::vector<int> parse_subgroup(const FiniteGroup& g, std::string_view text) {
  const std::string body = spec::trim(spec::unwrap(text, '<', '>', "subgroup"));
  std::vector<int> gens;
  if (!body.empty())
    for (const auto& l : spec::split_top(body, ';')) gens.push_back(spec::element(g, l));
  return g.closure(gens);
}

}  // namespace dirichlet
