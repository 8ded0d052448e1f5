#pragma once

#include <string>
#include <variant>

#include "dirichlet/certifier.hpp"
#include "json.hpp"

namespace dirichlet {

using Json = nlohmann::ordered_json;

template <Field F>
Json certificate_to_json(const DirichletCertificate<F>& cert) {
  const F& field = cert.field();
  Json j;
  j["p"] = field.characteristic();
  j["a"] = cert.a.to_string();
  j["b"] = cert.b.to_string();
  j["c"] = cert.c.to_string();
  j["h1"] = cert.h1.to_string();
  j["h2"] = cert.h2.to_string();
  j["p1"] = cert.p1.to_string();
  j["p2"] = cert.p2.to_string();
  j["n"] = cert.n;
  j["e"] = cert.e;
  j["alpha1"] = field.to_string(cert.alpha1);
  j["alpha2"] = field.to_string(cert.alpha2);
  j["gamma1"] = field.to_string(cert.gamma1);
  j["gamma2"] = field.to_string(cert.gamma2);
  return j;
}

template <Field F>
Json sn_certificate_to_json(const SnCertificate<F>& sn) {
  Json j = certificate_to_json(sn.certificate);
  Json clauses = Json::array();
  for (const auto& c : sn.clauses) clauses.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["clauses"] = std::move(clauses);
  j["conclusion"] = sn.conclusion;
  return j;
}

using AnyCertificate = std::variant<DirichletCertificate<PrimeField>, DirichletCertificate<RationalField>>;

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), Errc::ParseError, std::string("certificate is missing '") + key + "'");
  return j.at(key);
}

inline std::string text_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_string()) return v.get<std::string>();
  require(v.is_number_integer(), Errc::ParseError, std::string("'") + key + "' must be a string or integer");
  return v.dump();
}

inline int int_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  require(v.is_number_integer(), Errc::ParseError, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

template <Field F>
DirichletCertificate<F> certificate_over(const F& field, const Json& j) {
  auto poly = [&](const char* key) { return Polynomial<F>::parse(field, text_member(j, key)); };
  auto elem = [&](const char* key) { return field.parse(text_member(j, key)); };
  return DirichletCertificate<F>{poly("a"),  poly("b"),  poly("c"),      poly("h1"),     poly("h2"),     poly("p1"), poly("p2"),
                                 int_member(j, "n"), int_member(j, "e"), elem("alpha1"), elem("alpha2"), elem("gamma1"), elem("gamma2")};
}

}  // namespace detail

inline AnyCertificate certificate_from_json(const Json& j) {
  const Json& p = detail::member(j, "p");
  require(p.is_number_unsigned() || p.is_number_integer(), Errc::ParseError, "'p' must be an integer");
  const auto prime = p.get<long long>();
  require(prime >= 0, Errc::ParseError, "'p' must be nonnegative");
  if (prime == 0) return detail::certificate_over(RationalField{}, j);
  return detail::certificate_over(PrimeField(static_cast<u64>(prime)), j);
}

inline AnyCertificate certificate_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace dirichlet
