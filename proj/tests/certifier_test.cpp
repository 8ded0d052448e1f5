#include <gtest/gtest.h>

#include <random>

#include "dirichlet/json_io.hpp"
#include "support/oracles.hpp"

using namespace dirichlet;

namespace {

FpPoly P(const PrimeField& f, const char* text) { return FpPoly::parse(f, text); }

DirichletCertificate<PrimeField> make(u64 p, const char* a, const char* b, int n, std::optional<int> e = std::nullopt) {
  PrimeField f(p);
  ConstructionParams<PrimeField> params(P(f, a), P(f, b), n);
  params.cycle_length = e;
  return construct_dirichlet(params);
}

const ClauseResult& clause(const SnCertificate<PrimeField>& sn, const std::string& name) {
  for (const auto& c : sn.clauses)
    if (c.name == name) return c;
  throw std::runtime_error("missing clause " + name);
}

}  // namespace

TEST(Ramification, PipelineOutputPasses) {
  for (const auto& [a, b, n] : {std::tuple{"1", "1", 12}, std::tuple{"X^2 + 3", "X + 1", 15}, std::tuple{"X^3 + X + 7", "2*X", 17}}) {
    auto cert = make(101, a, b, n);
    for (int which : {1, 2}) {
      ClauseResult r = certify_ramification(cert, which);
      EXPECT_TRUE(r.passed) << r.detail;
      EXPECT_EQ(r.detail, "case (b): gcd(e_i, p) = 1");
    }
    auto sn = conclude_sn(cert);
    EXPECT_TRUE(sn.certified()) << sn.conclusion;
    EXPECT_EQ(sn.conclusion, "SymmetricGroupCertified");
    EXPECT_EQ(sn.clauses.size(), 6u);
  }
}

TEST(Ramification, TamperedCFailsCongruence) {
  auto cert = make(101, "1", "1", 12);
  cert.c = cert.c + FpPoly::one(cert.field());
  ClauseResult r = certify_ramification(cert, 1);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.detail.rfind("congruence", 0), 0u) << r.detail;
  EXPECT_EQ(conclude_sn(cert).conclusion, "Rejected(ramification1)");
}

TEST(Ramification, WildIndexFailsTameness) {
  // p = 7 with e = 14 forced: the shapes hold but the index is wild
  PrimeField f7(7);
  const FpPoly a = P(f7, "1"), b = P(f7, "1");
  const FpPoly p1 = FpPoly::linear(f7, 1).pow(14), p2 = FpPoly::linear(f7, 2).pow(2);
  auto s = build_congruence_c(a, b, p1, p2, f7.neg(1), f7.neg(2), 16);
  DirichletCertificate<PrimeField> cert{a, b, s.c, s.h1, s.h2, p1, p2, 16, 14, 1, 2, 1, 2};
  ClauseResult r = certify_ramification(cert, 1);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.detail.rfind("tameness", 0), 0u) << r.detail;
  EXPECT_TRUE(certify_ramification(cert, 2).passed);
}

TEST(Ramification, CharacteristicTwoUsesCaseC) {
  // 1 + (X^3 + X^2 + 1) = X^2 (X + 1) over F_2
  PrimeField f2(2);
  DirichletCertificate<PrimeField> cert{P(f2, "1"), P(f2, "1"), P(f2, "X^3 + X^2 + 1"), P(f2, "1"), P(f2, "X + 1"),
                                        P(f2, "X"), P(f2, "X^2"), 3, 1, 0, 1, 0, 0};
  ClauseResult r = certify_ramification(cert, 2);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.detail, "case (c): p = 2, e_i = 2, other multiplicities odd");
}

TEST(ConcludeSn, SharedFactorRejectsIrreducibility) {
  auto cert = make(101, "X + 1", "1", 12);
  const FpPoly shared = FpPoly::linear(cert.field(), 3);
  cert.a = cert.a * shared;
  cert.c = cert.c * shared;
  EXPECT_EQ(conclude_sn(cert).conclusion, "Rejected(irreducibility)");
}

TEST(ConcludeSn, HalfCycleRejectsPrimitivity) {
  auto cert = make(101, "1", "1", 12);
  cert.e = 6;
  auto sn = conclude_sn(cert);
  EXPECT_EQ(sn.conclusion, "Rejected(primitivity)");
  EXPECT_FALSE(clause(sn, "primitivity").passed);
}

TEST(ConcludeSn, EveryTamperFlipsTheVerdict) {
  const auto good = make(101, "X^2 + 5", "X + 2", 13);
  ASSERT_TRUE(conclude_sn(good).certified());
  const PrimeField& f = good.field();
  using Tamper = std::pair<const char*, std::function<void(DirichletCertificate<PrimeField>&)>>;
  const std::vector<Tamper> tampers = {
      {"degree", [](auto& c) { c.n += 1; }},
      {"primitivity", [](auto& c) { c.e = c.n - c.e; }},
      {"places", [](auto& c) { c.alpha2 = c.alpha1; }},
      {"places", [](auto& c) { c.gamma2 = c.gamma1; }},
      {"places", [&](auto& c) { c.alpha1 = f.zero(); }},
      {"ramification1", [&](auto& c) { c.h1 = c.h1 + FpPoly::x(f); }},
      {"ramification1", [&](auto& c) { c.p1 = c.p1 * FpPoly::linear(f, c.gamma1); }},
      {"ramification2", [&](auto& c) { c.h2 = c.h2.scaled(2); }},
      {"ramification2", [&](auto& c) { c.alpha2 = f.add(c.alpha2, 1); }},
      {"irreducibility", [&](auto& c) { c.b = c.b * FpPoly::linear(f, 0) * FpPoly::linear(f, 0); c.a = c.a * FpPoly::linear(f, 0); }},
  };
  for (const auto& [expected, tamper] : tampers) {
    auto bad = good;
    tamper(bad);
    auto sn = conclude_sn(bad);
    EXPECT_FALSE(sn.certified()) << expected;
    EXPECT_FALSE(clause(sn, expected).passed) << expected << ": " << sn.conclusion;
  }
}

TEST(FrobeniusSample, SymmetricFiveOverF101) {
  auto cert = make(101, "1", "1", 5, 3);
  ASSERT_TRUE(conclude_sn(cert).certified());
  auto sample = frobenius_sample(cert, all_offsets(101));
  std::size_t total = 0;
  for (const auto& [t, k] : sample.histogram) {
    EXPECT_EQ(t.degree(), 5);
    total += k;
  }
  EXPECT_EQ(total, sample.trials - sample.skipped);
  const double five = static_cast<double>(sample.count(CycleType::from_parts({5}))) / 101.0;
  EXPECT_GE(five, 0.05);
  EXPECT_LE(five, 0.35);
  EXPECT_GE(sample.count(CycleType::from_parts({2, 1, 1, 1})), 1u);
  EXPECT_EQ(sample.count(CycleType::from_parts({5})), find_irreducible_offsets(cert, 101).size());
  EXPECT_EQ(frobenius_sample(cert, all_offsets(101), 4).histogram, sample.histogram);
}

TEST(FrobeniusSample, RamifiedPointsAreSkipped) {
  auto cert = make(101, "1", "1", 12);
  auto s = frobenius_sample(cert, {cert.alpha1, cert.alpha2, 0});
  EXPECT_EQ(s.trials, 3u);
  EXPECT_EQ(s.skipped, 3u);  // alpha = 0 leaves degree 0
  EXPECT_TRUE(s.histogram.empty());
}

TEST(FrobeniusSample, MatchesSplittingFieldOrbits) {
  for (const char* a : {"1", "X + 3", "2*X + 5"}) {
    auto cert = make(7, a, "1", 5, 3);
    auto sample = frobenius_sample(cert, all_offsets(7));
    std::map<CycleType, std::size_t> expect;
    std::size_t skipped = 0;
    for (u64 alpha = 0; alpha < 7; ++alpha) {
      const FpPoly g = cert.specialize(alpha);
      if (g.degree() != 5 || !is_separable(g)) {
        ++skipped;
        continue;
      }
      ++expect[CycleType::from_parts(oracle::frobenius_orbit_sizes(g))];
    }
    EXPECT_EQ(sample.histogram, expect);
    EXPECT_EQ(sample.skipped, skipped);
  }
}

TEST(FrobeniusSample, CsvAndRandomDraws) {
  auto cert = make(101, "1", "1", 5, 3);
  auto s = frobenius_sample(cert, random_offsets(101, 200, 9));
  EXPECT_EQ(s.trials, 200u);
  const std::string csv = s.to_csv();
  EXPECT_EQ(csv.rfind("cycle_type,count\n", 0), 0u);
  EXPECT_EQ(random_offsets(101, 50, 9), random_offsets(101, 50, 9));
  EXPECT_EQ(frobenius_sample(cert, random_offsets(101, 200, 9)).to_csv(), csv);
}

TEST(CertificateJson, RoundTripPrime) {
  auto cert = make(257, "X^3 + 2", "X - 7", 19);
  const std::string text = certificate_to_json(cert).dump(2);
  auto back = certificate_from_text(text);
  ASSERT_TRUE(std::holds_alternative<DirichletCertificate<PrimeField>>(back));
  EXPECT_EQ(std::get<DirichletCertificate<PrimeField>>(back), cert);
  EXPECT_EQ(certificate_to_json(std::get<DirichletCertificate<PrimeField>>(back)).dump(2), text);
  const Json j = Json::parse(text);
  EXPECT_EQ(j.at("p"), 257);
  EXPECT_EQ(j.at("n"), 19);
  EXPECT_EQ(j.begin().key(), "p");
}

TEST(CertificateJson, RoundTripRationals) {
  RationalField q;
  auto cert = construct_dirichlet(ConstructionParams<RationalField>(QPoly::parse(q, "X^2 + 1/3"), QPoly::parse(q, "2*X - 1"), 12));
  const std::string text = certificate_to_json(cert).dump();
  auto back = certificate_from_text(text);
  ASSERT_TRUE(std::holds_alternative<DirichletCertificate<RationalField>>(back));
  EXPECT_EQ(std::get<DirichletCertificate<RationalField>>(back), cert);
  EXPECT_EQ(Json::parse(text).at("p"), 0);
  EXPECT_TRUE(conclude_sn(cert).certified());
}

TEST(CertificateJson, SnCertificateShapeAndErrors) {
  auto sn = conclude_sn(make(101, "1", "1", 12));
  const Json j = sn_certificate_to_json(sn);
  EXPECT_EQ(j.at("conclusion"), "SymmetricGroupCertified");
  ASSERT_EQ(j.at("clauses").size(), 6u);
  EXPECT_EQ(j.at("clauses")[0].at("name"), "irreducibility");
  // the extended form still reads back as a certificate
  EXPECT_NO_THROW(certificate_from_json(j));
  for (const char* text : {"{", "{\"p\": 101}", "[1,2]", "{\"p\": -3}"}) {
    try {
      certificate_from_text(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ParseError) << text;
    }
  }
}
