#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/error.hpp"

namespace dirichlet {

/// Multiset of cycle lengths, sorted descending, fixed points included.
struct CycleType {
  std::vector<int> parts;

  int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  /// Space-separated lengths, e.g. `3 2 1`.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + std::to_string(parts[i]);
    return out;
  }
  static CycleType from_parts(std::vector<int> parts) {
    std::sort(parts.rbegin(), parts.rend());
    return CycleType{std::move(parts)};
  }
  /// (e, 1, ..., 1) at degree n.
  static CycleType single_cycle(int e, int n) {
    std::vector<int> v{e};
    v.resize(static_cast<std::size_t>(n - e + 1), 1);
    return CycleType{std::move(v)};
  }
  auto operator<=>(const CycleType&) const = default;
};

/// Bijection of {0, ..., n-1}. Printed and parsed 1-based in cycle notation.
/// Composition is right to left: (g * h)(x) = g(h(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int y : img_) {
      require(y >= 0 && y < degree() && !seen[static_cast<std::size_t>(y)], Errc::InvalidArgument,
              "images do not form a permutation");
      seen[static_cast<std::size_t>(y)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v), Trusted{});
  }

  /// A single cycle on 0-based points.
  static Permutation cycle(int n, const std::vector<int>& points) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      require(points[i] >= 0 && points[i] < n, Errc::InvalidArgument, "cycle point out of range");
      v[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
    }
    return Permutation(std::move(v));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(v), Trusted{});
  }

  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    require(g.degree() == h.degree(), Errc::InvalidArgument, "permutations of different degree");
    std::vector<int> v(h.img_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.img_[static_cast<std::size_t>(h.img_[i])];
    return Permutation(std::move(v), Trusted{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    Permutation r = identity(degree());
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int s = 0; s < degree(); ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::vector<int> c;
      for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        c.push_back(x);
      }
      if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
  }

  CycleType cycle_type() const {
    std::vector<int> parts;
    int moved = 0;
    for (const auto& c : cycles()) {
      parts.push_back(static_cast<int>(c.size()));
      moved += static_cast<int>(c.size());
    }
    parts.resize(parts.size() + static_cast<std::size_t>(degree() - moved), 1);
    return CycleType::from_parts(std::move(parts));
  }

  /// Element order, the lcm of the cycle lengths.
  unsigned long long order() const {
    unsigned long long r = 1;
    for (const auto& c : cycles()) r = std::lcm(r, static_cast<unsigned long long>(c.size()));
    return r;
  }

  /// Canonical cycle notation, 1-based; the identity prints as `()`.
  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += "(";
      for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i] + 1);
      out += ")";
    }
    return out;
  }

  /// Parses cycle notation such as `(1 2 3)(4 5)` at degree n. Points may be
  /// separated by whitespace or commas; cycles compose right to left.
  static Permutation parse(std::string_view text, int n) {
    Permutation acc = identity(n);
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    std::vector<Permutation> factors;
    skip_space();
    require(i < text.size(), Errc::ParseError, "empty permutation");
    while (i < text.size()) {
      require(text[i] == '(', Errc::ParseError, "expected '(' in '" + std::string(text) + "'");
      ++i;
      std::vector<int> pts;
      for (;;) {
        skip_space();
        require(i < text.size(), Errc::ParseError, "unterminated cycle in '" + std::string(text) + "'");
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] == ',' && !pts.empty()) {
          ++i;
          continue;
        }
        require(std::isdigit(static_cast<unsigned char>(text[i])), Errc::ParseError,
                "bad character in '" + std::string(text) + "'");
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          require(v <= 1'000'000, Errc::ParseError, "point too large");
          ++i;
        }
        require(v >= 1 && v <= n, Errc::ParseError, "point " + std::to_string(v) + " outside 1.." + std::to_string(n));
        const int p = static_cast<int>(v - 1);
        require(std::find(pts.begin(), pts.end(), p) == pts.end(), Errc::ParseError, "repeated point in a cycle");
        pts.push_back(p);
      }
      factors.push_back(cycle(n, pts));
      skip_space();
    }
    for (const auto& f : factors) acc = acc * f;
    return acc;
  }

  /// Largest point mentioned in cycle notation; used to infer a degree.
  static int max_point(std::string_view text) {
    int best = 0;
    long v = -1;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        v = (v < 0 ? 0 : v * 10) + (ch - '0');
        if (v > 1'000'000) v = 1'000'000;
      } else {
        if (v > best) best = static_cast<int>(v);
        v = -1;
      }
    }
    if (v > best) best = static_cast<int>(v);
    return best;
  }

  /// Injective key for degree <= 16.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) k |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
    return k;
  }
  static Permutation from_key(std::uint64_t k, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<int>((k >> (4 * i)) & 0xF);
    return Permutation(std::move(v), Trusted{});
  }

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

 private:
  struct Trusted {};
  Permutation(std::vector<int> images, Trusted) : img_(std::move(images)) {}

  std::vector<int> img_;
};

inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

}  // namespace dirichlet
