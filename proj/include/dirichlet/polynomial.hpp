#pragma once

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "dirichlet/error.hpp"
#include "dirichlet/field.hpp"

namespace dirichlet {

/// Dense univariate polynomial over `F`, coefficients stored in ascending
/// degree. The zero polynomial has an empty coefficient vector and degree
/// `kZeroDegree`, which compares below every real degree.
template <Field F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = typename F::value_type;
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, std::vector<value_type> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const F& field, value_type c) { return Polynomial(field, {std::move(c)}); }
  static Polynomial one(const F& field) { return constant(field, field.one()); }
  static Polynomial x(const F& field) { return monomial(field, field.one(), 1); }
  static Polynomial monomial(const F& field, value_type c, int k) {
    std::vector<value_type> v(static_cast<std::size_t>(k) + 1, field.zero());
    v.back() = std::move(c);
    return Polynomial(field, std::move(v));
  }
  /// X - r
  static Polynomial linear(const F& field, const value_type& r) { return Polynomial(field, {field.neg(r), field.one()}); }
  static Polynomial from_ints(const F& field, std::initializer_list<i64> ascending) {
    std::vector<value_type> v;
    for (i64 c : ascending) v.push_back(field.from_int(c));
    return Polynomial(field, std::move(v));
  }

  const F& field() const { return field_; }
  const std::vector<value_type>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  value_type leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  value_type coeff(int k) const {
    return (k < 0 || k >= static_cast<int>(c_.size())) ? field_.zero() : c_[static_cast<std::size_t>(k)];
  }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

  Polynomial monic() const {
    if (c_.empty()) return *this;
    return scaled(field_.inv(c_.back()));
  }

  Polynomial scaled(const value_type& s) const {
    std::vector<value_type> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(field_.mul(a, s));
    return Polynomial(field_, std::move(v));
  }

  value_type eval(const value_type& x) const {
    value_type acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<value_type> v(c_.size() - 1, field_.zero());
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = field_.mul(c_[k], field_.from_int(static_cast<i64>(k)));
    return Polynomial(field_, std::move(v));
  }

  Polynomial pow(u64 e) const {
    Polynomial result = one(field_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const F& fd = a.field_;
    std::vector<value_type> v(std::max(a.c_.size(), b.c_.size()), fd.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = fd.add(v[i], b.c_[i]);
    return Polynomial(fd, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<value_type> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(a.field_.neg(c));
    return Polynomial(a.field_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    const F& fd = a.field_;
    if (a.is_zero() || b.is_zero()) return Polynomial(fd);
    std::vector<value_type> v(a.c_.size() + b.c_.size() - 1, fd.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (fd.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = fd.add(v[i + j], fd.mul(a.c_[i], b.c_[j]));
    }
    return Polynomial(fd, std::move(v));
  }

  /// Euclidean division; throws on division by zero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    require(!b.is_zero(), Errc::InvalidArgument, "polynomial division by zero");
    const F& fd = a.field_;
    if (a.degree() < b.degree()) return {Polynomial(fd), a};
    std::vector<value_type> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<value_type> q(r.size() - db, fd.zero());
    const value_type inv_lead = fd.inv(b.c_.back());
    for (std::size_t k = r.size(); k-- > db;) {
      if (fd.is_zero(r[k])) continue;
      value_type t = fd.mul(r[k], inv_lead);
      q[k - db] = t;
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = fd.sub(r[k - db + j], fd.mul(t, b.c_[j]));
    }
    r.resize(db);
    return {Polynomial(fd, std::move(q)), Polynomial(fd, std::move(r))};
  }

  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Canonical text form, e.g. `3*X^2 + 2*X + 1`; zero prints as `0`.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      value_type c = c_[static_cast<std::size_t>(k)];
      if (field_.is_zero(c)) continue;
      bool negative = is_negative(c);
      if (negative) c = field_.neg(c);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = field_.is_one(c);
      if (k == 0) {
        out += field_.to_string(c);
      } else {
        if (!unit) out += field_.to_string(c) + "*";
        out += "X";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  /// Parses `c*X^k`, `X^k`, `c*X`, `X`, `c` terms joined by `+`/`-`.
  static Polynomial parse(const F& field, std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    require(a.field_ == b.field_, Errc::FieldMismatch, "operands over different fields");
  }

  bool is_negative(const value_type& c) const {
    if constexpr (std::is_same_v<F, RationalField>) {
      return c < 0;
    } else {
      return false;
    }
  }

  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<value_type> c_;
};

template <Field F>
Polynomial<F> Polynomial<F>::parse(const F& field, std::string_view text) {
  auto is_word = [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '/'; };
  std::string s;
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = true;
      continue;
    }
    require(!(gap && !s.empty() && is_word(s.back()) && is_word(ch)), Errc::ParseError,
            "whitespace inside a term of '" + std::string(text) + "'");
    gap = false;
    s.push_back(ch);
  }
  require(!s.empty(), Errc::ParseError, "empty polynomial");
  std::map<int, value_type> terms;
  std::size_t pos = 0;
  bool first = true;
  auto read_digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else {
      require(first, Errc::ParseError, "expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    require(pos < s.size(), Errc::ParseError, "dangling sign");
    value_type coeff = field.one();
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string num = read_digits(pos);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den = read_digits(pos);
        require(!den.empty(), Errc::ParseError, "missing denominator");
        num += "/" + den;
      }
      coeff = field.parse(num);
      have_coeff = true;
    }
    int exponent = 0;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'X' || s[pos] == 'x')) {
      if (s[pos] == '*') {
        require(have_coeff, Errc::ParseError, "'*' without coefficient");
        ++pos;
      }
      require(pos < s.size() && (s[pos] == 'X' || s[pos] == 'x'), Errc::ParseError, "expected X");
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = read_digits(pos);
        require(!e.empty() && e.size() < 7, Errc::ParseError, "bad exponent");
        exponent = std::stoi(e);
      }
    } else {
      require(have_coeff, Errc::ParseError, "expected term at offset " + std::to_string(pos));
    }
    if (negative) coeff = field.neg(coeff);
    auto it = terms.find(exponent);
    if (it == terms.end()) {
      terms.emplace(exponent, coeff);
    } else {
      it->second = field.add(it->second, coeff);
    }
  }
  if (terms.empty()) return Polynomial(field);
  std::vector<value_type> v(static_cast<std::size_t>(terms.rbegin()->first) + 1, field.zero());
  for (auto& [k, c] : terms) v[static_cast<std::size_t>(k)] = c;
  return Polynomial(field, std::move(v));
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  require(a.field() == b.field(), Errc::FieldMismatch, "gcd operands over different fields");
  while (!b.is_zero()) {
    Polynomial<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <Field F>
struct XgcdResult {
  Polynomial<F> d, u, v;
};

/// u*f + v*g = d with d the monic gcd; cofactors come from the plain
/// Euclidean remainder sequence, which gives deg u < deg g - deg d.
template <Field F>
XgcdResult<F> extended_gcd(const Polynomial<F>& f, const Polynomial<F>& g) {
  require(f.field() == g.field(), Errc::FieldMismatch, "xgcd operands over different fields");
  require(!(f.is_zero() && g.is_zero()), Errc::InvalidArgument, "extended_gcd(0, 0)");
  const F& fd = f.field();
  Polynomial<F> r0 = f, r1 = g;
  Polynomial<F> s0 = Polynomial<F>::one(fd), s1(fd);
  Polynomial<F> t0(fd), t1 = Polynomial<F>::one(fd);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial<F> s2 = s0 - q * s1;
    Polynomial<F> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  auto inv_lead = fd.inv(r0.leading());
  return {r0.scaled(inv_lead), s0.scaled(inv_lead), t0.scaled(inv_lead)};
}

/// Inverse of f modulo m (requires gcd(f, m) = 1).
template <Field F>
Polynomial<F> inverse_mod(const Polynomial<F>& f, const Polynomial<F>& m) {
  auto x = extended_gcd(f % m, m);
  require(x.d.degree() == 0, Errc::PreconditionViolation, "not invertible modulo " + m.to_string());
  return x.u % m;
}

/// Res(f, g) = lc(f)^deg g * prod g(roots of f), via the Euclidean remainder sequence.
template <Field F>
typename F::value_type resultant(Polynomial<F> f, Polynomial<F> g) {
  require(f.field() == g.field(), Errc::FieldMismatch, "resultant operands over different fields");
  const F fd = f.field();
  if (f.is_zero() || g.is_zero()) return fd.zero();
  auto acc = fd.one();
  for (;;) {
    const int m = f.degree();
    const int n = g.degree();
    if (n == 0) return fd.mul(acc, fd.pow(g.leading(), static_cast<u64>(m)));
    if (m == 0) return fd.mul(acc, fd.pow(f.leading(), static_cast<u64>(n)));
    // Res(f, g) = (-1)^{mn} Res(g, f) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
    Polynomial<F> r = f % g;
    if (r.is_zero()) return fd.zero();
    if ((static_cast<i64>(m) * n) % 2 == 1) acc = fd.neg(acc);
    acc = fd.mul(acc, fd.pow(g.leading(), static_cast<u64>(m - r.degree())));
    f = std::move(g);
    g = std::move(r);
  }
}

/// Discriminant (-1)^{n(n-1)/2} Res(f, f') / lc(f), with Res taken at the
/// formal degree n-1 of f'.
template <Field F>
typename F::value_type discriminant(const Polynomial<F>& f) {
  require(f.degree() >= 1, Errc::InvalidArgument, "discriminant of a constant");
  const F& fd = f.field();
  const int n = f.degree();
  Polynomial<F> df = f.derivative();
  if (df.is_zero()) return fd.zero();
  auto res = resultant(f, df);
  res = fd.mul(res, fd.pow(f.leading(), static_cast<u64>(n - 1 - df.degree())));
  res = fd.div(res, f.leading());
  if ((static_cast<i64>(n) * (n - 1) / 2) % 2 == 1) res = fd.neg(res);
  return res;
}

template <Field F>
bool is_separable(const Polynomial<F>& f) {
  Polynomial<F> g = poly_gcd(f, f.derivative());
  return g.degree() == 0;
}

/// (X - r)^k
template <Field F>
Polynomial<F> linear_power(const F& field, const typename F::value_type& r, u64 k) {
  return Polynomial<F>::linear(field, r).pow(k);
}

}  // namespace dirichlet
