#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "dirichlet/error.hpp"

namespace dirichlet {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

namespace nt {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin; the base set is exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace nt

/// F_p for a prime p < 2^61. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = u64;
  static constexpr bool is_finite = true;
  static constexpr u64 kMaxModulus = u64{1} << 61;

  explicit PrimeField(u64 p) : p_(p) {
    require(p < kMaxModulus, Errc::InvalidArgument, "modulus must be below 2^61");
    require(nt::is_prime(p), Errc::InvalidArgument, std::to_string(p) + " is not prime");
  }

  u64 modulus() const { return p_; }
  u64 characteristic() const { return p_; }
  std::optional<u64> size() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(i64 v) const {
    i64 r = v % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
  }

  value_type add(value_type a, value_type b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return nt::mulmod(a, b, p_); }
  value_type pow(value_type a, u64 e) const { return nt::powmod(a, e, p_); }
  value_type inv(value_type a) const {
    require(a != 0, Errc::InvalidArgument, "inverse of zero");
    return nt::powmod(a, p_ - 2, p_);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  /// Canonical enumeration order 0, 1, 2, ..., p-1.
  value_type enumerate(u64 k) const { return k % p_; }

  std::string to_string(value_type a) const { return std::to_string(a); }

  /// Decimal integer (optionally signed), reduced mod p.
  value_type parse(std::string_view s) const {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    require(!s.empty(), Errc::ParseError, "empty coefficient");
    u64 acc = 0;
    for (char ch : s) {
      require(ch >= '0' && ch <= '9', Errc::ParseError, "bad digit in coefficient '" + std::string(s) + "'");
      acc = add(mul(acc, 10 % p_), static_cast<u64>(ch - '0') % p_);
    }
    return negative ? neg(acc) : acc;
  }

  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  u64 p_;
};

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// The rationals, elements kept in lowest terms by the backing type.
class RationalField {
 public:
  using value_type = Rational;
  static constexpr bool is_finite = false;

  u64 characteristic() const { return 0; }
  std::optional<u64> size() const { return std::nullopt; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(i64 v) const { return Rational(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type pow(value_type a, u64 e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }
  value_type inv(const value_type& a) const {
    require(a != 0, Errc::InvalidArgument, "inverse of zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  /// Canonical enumeration order 0, 1, -1, 2, -2, ...
  value_type enumerate(u64 k) const {
    if (k == 0) return 0;
    auto mag = static_cast<i64>((k + 1) / 2);
    return Rational(k % 2 == 1 ? mag : -mag);
  }

  std::string to_string(const value_type& a) const {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }

  /// `n` or `n/d` with decimal integers.
  value_type parse(std::string_view s) const {
    auto slash = s.find('/');
    auto parse_int = [](std::string_view t) {
      std::string_view digits = t;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
      require(!digits.empty(), Errc::ParseError, "empty integer");
      for (char ch : digits) require(ch >= '0' && ch <= '9', Errc::ParseError, "bad digit in '" + std::string(t) + "'");
      BigInt v{std::string(digits)};
      return (!t.empty() && t.front() == '-') ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    require(den != 0, Errc::ParseError, "zero denominator");
    return Rational(num) / Rational(den);
  }

  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, u64 k) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.enumerate(k) } -> std::convertible_to<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<u64>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace dirichlet
