#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirichlet/embedding.hpp"
#include "dirichlet/group_spec.hpp"
#include "dirichlet/json_io.hpp"

namespace dirichlet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNotCoprime = 2;
inline constexpr int kExitDegreeTooSmall = 3;
inline constexpr int kExitFieldTooSmall = 4;
inline constexpr int kExitBudget = 5;
inline constexpr int kExitRejected = 6;

inline int exit_code(Errc code) {
  switch (code) {
    case Errc::NotCoprime: return kExitNotCoprime;
    case Errc::DegreeTooSmall: return kExitDegreeTooSmall;
    case Errc::FieldTooSmall: return kExitFieldTooSmall;
    case Errc::BudgetExceeded:
    case Errc::GuardExceeded:
    case Errc::OrderGuardExceeded:
    case Errc::DegreeTooLarge: return kExitBudget;
    default: return kExitInput;
  }
}

struct Config {
  u64 seed = kDefaultSeed;
  unsigned jobs = 1;
  std::string format;

  std::optional<u64> prime;
  bool rationals = false;
  std::string a, b, f;
  int n = 0;
  std::optional<int> e;
  std::string out_prefix;

  std::string file;
  bool exhaustive = false;
  std::size_t trials = 0;
  std::size_t limit = 10;
  std::string catalog;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

inline std::string format_or(const Config& c, const char* fallback) { return c.format.empty() ? fallback : c.format; }

template <Field F>
int emit_construction(const Config& c, const F& field, std::ostream& out) {
  ConstructionParams<F> params(Polynomial<F>::parse(field, c.a), Polynomial<F>::parse(field, c.b), c.n);
  params.cycle_length = c.e;
  const auto cert = construct_dirichlet(params);
  const auto sn = conclude_sn(cert);
  if (!c.out_prefix.empty()) {
    write_file(c.out_prefix + ".cert.json", certificate_to_json(cert).dump(2) + "\n");
    write_file(c.out_prefix + ".sn.json", sn_certificate_to_json(sn).dump(2) + "\n");
  }
  out << sn_certificate_to_json(sn).dump(2) << "\n";
  return sn.certified() ? kExitOk : kExitRejected;
}

inline int cmd_construct(const Config& c, std::ostream& out) {
  if (c.rationals) return emit_construction(c, RationalField{}, out);
  return emit_construction(c, PrimeField(*c.prime), out);
}

inline int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  return std::visit(
      [&](const auto& cert) {
        const auto sn = conclude_sn(cert);
        if (format_or(c, "text") == "json") out << sn_certificate_to_json(sn).dump(2) << "\n";
        else out << sn.conclusion << "\n";
        if (sn.certified()) return kExitOk;
        for (const auto& cl : sn.clauses)
          if (!cl.passed) {
            err << "rejected: clause " << cl.name << " failed: " << cl.detail << "\n";
            break;
          }
        return kExitRejected;
      },
      certificate_from_text(read_file(c.file)));
}

inline int cmd_factor(const Config& c, std::ostream& out) {
  require(!c.rationals, Errc::InvalidArgument, "factorization is implemented over F_p only");
  const PrimeField field(*c.prime);
  const auto fm = factor(FpPoly::parse(field, c.f), c.seed);
  if (format_or(c, "text") == "json") {
    Json j;
    j["unit"] = field.to_string(fm.unit);
    j["factors"] = Json::array();
    for (const auto& [g, k] : fm.factors) j["factors"].push_back({{"factor", g.to_string()}, {"multiplicity", k}, {"degree", g.degree()}});
    j["degrees"] = fm.degree_multiset();
    out << j.dump(2) << "\n";
  } else {
    out << "unit " << field.to_string(fm.unit) << "\n";
    for (const auto& [g, k] : fm.factors) out << "(" << g.to_string() << ")" << (k > 1 ? "^" + std::to_string(k) : "") << "\n";
  }
  return kExitOk;
}

inline DirichletCertificate<PrimeField> prime_certificate(const std::string& path) {
  auto any = certificate_from_text(read_file(path));
  require(std::holds_alternative<DirichletCertificate<PrimeField>>(any), Errc::InvalidArgument,
          "this command needs a certificate over F_p");
  return std::get<DirichletCertificate<PrimeField>>(std::move(any));
}

inline int cmd_sample(const Config& c, std::ostream& out) {
  const auto cert = prime_certificate(c.file);
  const u64 p = cert.field().modulus();
  require(c.exhaustive != (c.trials > 0), Errc::InvalidArgument, "give exactly one of --exhaustive or --trials k");
  const auto s = frobenius_sample(cert, c.exhaustive ? all_offsets(p) : random_offsets(p, c.trials, c.seed), c.jobs, c.seed);
  if (format_or(c, "csv") == "json") {
    Json j;
    j["trials"] = s.trials;
    j["skipped"] = s.skipped;
    j["histogram"] = Json::object();
    for (const auto& [t, k] : s.histogram) j["histogram"][t.to_string()] = k;
    out << j.dump(2) << "\n";
  } else {
    out << s.to_csv();
  }
  return kExitOk;
}

inline int cmd_offsets(const Config& c, std::ostream& out) {
  const auto offsets = find_irreducible_offsets(prime_certificate(c.file), c.limit, c.jobs);
  if (format_or(c, "text") == "json") {
    out << Json(offsets).dump() << "\n";
  } else {
    for (u64 x : offsets) out << x << "\n";
  }
  return kExitOk;
}

inline constexpr int kExhaustiveReportOrder = 500;

inline int cmd_wreath(const Config& c, std::ostream& out) {
  WreathSpec spec = parse_wreath_spec(c.file);
  const int a_order = spec.a.order(), g_order = spec.g.order(), g0_order = static_cast<int>(spec.action.acting.size());
  const TwistedWreath w(std::move(spec.a), std::move(spec.g), std::move(spec.action));
  long expected = g_order;
  for (int i = 0; i < w.index(); ++i) expected *= a_order;
  const bool exhaustive = w.order() <= kExhaustiveReportOrder;
  std::optional<bool> assoc, section;
  if (exhaustive) {
    assoc = w.group().verify_associativity_exhaustive();
    bool ok = true;
    for (int x = 0; x < w.semidirect().group().order() && ok; ++x) ok = w.shapiro(w.embed_semidirect(x)) == x;
    section = ok;
  }
  std::vector<std::string> reps;
  for (int t : w.transversal()) reps.push_back(w.G().label(t));
  auto check = [](const std::optional<bool>& v) { return v ? (*v ? "verified" : "FAILED") : "skipped (order above 500)"; };
  if (format_or(c, "text") == "json") {
    Json j;
    j["A_order"] = a_order;
    j["G_order"] = g_order;
    j["G0_order"] = g0_order;
    j["action"] = spec.action_name;
    j["index"] = w.index();
    j["transversal"] = reps;
    j["order"] = w.order();
    j["order_formula"] = expected == w.order();
    j["associativity"] = assoc ? Json(*assoc) : Json(nullptr);
    j["shapiro_section"] = section ? Json(*section) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "|A| = " << a_order << ", |G| = " << g_order << ", |G0| = " << g0_order << ", action " << spec.action_name << "\n";
    out << "index (G:G0) = " << w.index() << ", transversal:";
    for (const auto& r : reps) out << " " << r;
    out << "\n";
    out << "order = " << w.order() << " (|A|^index |G| = " << expected << (expected == w.order() ? ", holds" : ", MISMATCH") << ")\n";
    out << "associativity: " << check(assoc) << "\n";
    out << "pi o rho = id: " << check(section) << "\n";
  }
  return kExitOk;
}

/// `key = value` lines with keys Gamma, A, G, mu, alpha and optional G0.
/// Groups use the group grammar, maps `src->dst;...` on generators, and G0
/// a generator list `<g;...>`. Blank lines and `#` comments are ignored.
inline EmbeddingProblem parse_problem(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = spec::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    require(eq != std::string::npos, Errc::ParseError, "expected 'key = value', got '" + t + "'");
    const std::string key = spec::trim(t.substr(0, eq));
    require(key == "Gamma" || key == "A" || key == "G" || key == "mu" || key == "alpha" || key == "G0", Errc::ParseError,
            "unknown key '" + key + "'");
    require(kv.emplace(key, spec::trim(t.substr(eq + 1))).second, Errc::ParseError, "duplicate key '" + key + "'");
  }
  for (const char* k : {"Gamma", "A", "G", "mu", "alpha"})
    require(kv.contains(k), Errc::ParseError, std::string("missing key '") + k + "'");
  FiniteGroup gamma = parse_group(kv["Gamma"]), a = parse_group(kv["A"]), g = parse_group(kv["G"]);
  Hom mu = parse_hom(gamma, a, kv["mu"]), alpha = parse_hom(g, a, kv["alpha"]);
  std::optional<std::vector<int>> g0;
  if (kv.contains("G0")) g0 = parse_subgroup(g, kv["G0"]);
  return EmbeddingProblem::make(std::move(gamma), std::move(mu), std::move(a), std::move(g), std::move(alpha), std::move(g0));
}

/// Z/4 -> Z/2 against Z/2 x Z/2 -> Z/2 (first coordinate).
inline constexpr const char* kCatalogZ4Z2 =
    "Gamma = cyclic:4\n"
    "A = cyclic:2\n"
    "G = direct:{cyclic:2,cyclic:2}\n"
    "mu = 1->1\n"
    "alpha = (1,0)->1;(0,1)->0\n";

inline int cmd_dep(const Config& c, std::ostream& out) {
  std::string text;
  if (!c.catalog.empty()) {
    require(c.catalog == "z4-z2", Errc::ParseError, "unknown catalog problem '" + c.catalog + "' (known: z4-z2)");
    text = kCatalogZ4Z2;
  } else {
    require(!c.file.empty(), Errc::InvalidArgument, "give a problem file or --catalog");
    text = read_file(c.file);
  }
  const EmbeddingProblem ep = parse_problem(text);
  const auto sols = enumerate_weak_solutions(ep, c.jobs);
  Json j;
  j["weak"] = sols.size();
  std::size_t surjective = 0, transitive = 0;
  Json list = Json::array();
  for (const auto& s : sols) {
    surjective += s.surjective;
    transitive += s.transitive.value_or(false);
    Json theta = Json::object();
    for (int x = 0; x < ep.gamma.order(); ++x) theta[ep.gamma.label(x)] = ep.g.label(s.theta[static_cast<std::size_t>(x)]);
    Json entry{{"theta", theta}, {"surjective", s.surjective}};
    if (s.transitive) entry["transitive"] = *s.transitive;
    list.push_back(std::move(entry));
  }
  j["surjective"] = surjective;
  j["transitive"] = ep.g0 ? Json(transitive) : Json(nullptr);
  j["solutions"] = std::move(list);
  out << j.dump(2) << "\n";
  return kExitOk;
}

/// Runs one command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Certified symmetric-group polynomials over F_p and Q, and finite group experiments", "dirichlet"};
  app.require_subcommand(1);
  // subcommands inherit this, so global options may follow the subcommand
  app.fallthrough();
  app.add_option("--seed", c.seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--jobs", c.jobs, "Worker threads for sampling, offsets and enumeration")->check(CLI::PositiveNumber);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto field_options = [&](CLI::App* sub) {
    auto* p = sub->add_option("--prime", c.prime, "Work over F_p");
    auto* q = sub->add_flag("--rationals", c.rationals, "Work over Q");
    p->excludes(q);
    q->excludes(p);
    return std::pair{p, q};
  };

  auto* construct = app.add_subcommand("construct", "Build a certified degree-n polynomial a + b c");
  auto [cp, cq] = field_options(construct);
  construct->add_option("--a", c.a, "Polynomial a")->required();
  construct->add_option("--b", c.b, "Polynomial b")->required();
  construct->add_option("--n", c.n, "Target degree")->required();
  construct->add_option("--e", c.e, "Force the cycle length e");
  construct->add_option("--out", c.out_prefix, "Write <prefix>.cert.json and <prefix>.sn.json");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate; exit 0 iff S_n is certified");
  verify->add_option("file", c.file, "Certificate JSON")->required();

  auto* fac = app.add_subcommand("factor", "Factor a polynomial over F_p");
  auto [fp, fq] = field_options(fac);
  fac->add_option("--f", c.f, "Polynomial")->required();

  auto* sample = app.add_subcommand("sample", "Cycle-type histogram of specializations (CSV)");
  sample->add_option("file", c.file, "Certificate JSON over F_p")->required();
  auto* ex = sample->add_flag("--exhaustive", c.exhaustive, "Every alpha in F_p");
  auto* tr = sample->add_option("--trials", c.trials, "Number of random alphas")->check(CLI::PositiveNumber);
  ex->excludes(tr);

  auto* offs = app.add_subcommand("offsets", "Alphas with a + alpha b c irreducible of degree n");
  offs->add_option("file", c.file, "Certificate JSON over F_p")->required();
  offs->add_option("--limit", c.limit, "Maximum number of offsets")->capture_default_str();

  auto* wreath = app.add_subcommand("wreath", "Build a twisted wreath product and report its checks");
  wreath->add_option("spec", c.file, "twisted_wreath:{A,G,<G0 generators>,trivial|inversion}")->required();

  auto* dep = app.add_subcommand("dep", "Enumerate weak solutions of a finite embedding problem (JSON)");
  auto* df = dep->add_option("file", c.file, "Problem file");
  auto* dc = dep->add_option("--catalog", c.catalog, "Built-in problem (z4-z2)");
  df->excludes(dc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    for (auto [sub, p, q] : {std::tuple{construct, cp, cq}, std::tuple{fac, fp, fq}})
      if (sub->parsed()) require(p->count() + q->count() == 1, Errc::InvalidArgument, "give exactly one of --prime p or --rationals");
    if (construct->parsed()) return cmd_construct(c, out);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (fac->parsed()) return cmd_factor(c, out);
    if (sample->parsed()) return cmd_sample(c, out);
    if (offs->parsed()) return cmd_offsets(c, out);
    if (wreath->parsed()) return cmd_wreath(c, out);
    if (dep->parsed()) return cmd_dep(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dirichlet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dirichlet::cli
