#include "fglab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "fglab/chern.hpp"
#include "fglab/error.hpp"
#include "fglab/ptypical.hpp"
#include "fglab/serialize.hpp"
#include "fglab/universal.hpp"

namespace fglab::cli {

namespace {

constexpr int kDefaultBuiltinDegree = 8;

struct Options {
  std::string input;
  std::string builtin;
  std::string series;
  std::string output;
  std::string format = "json";
  std::optional<long> prime;
  std::optional<int> degree;
  std::optional<int> count;
  std::optional<int> n;
  std::optional<int> m;
};

struct Outcome {
  Json doc = Json::object();
  std::vector<std::string> text;
  int exit_code = kExitOk;
};

/// Precondition failures of the command line itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

long require_prime(const Options& o) {
  if (!o.prime) throw UsageError("--prime is required");
  if (!is_prime(*o.prime)) throw UsageError("--prime " + std::to_string(*o.prime) + " is not prime");
  return *o.prime;
}

int require_int(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

/// The working formal group law: --builtin or --input, cut to --degree.
/// Axioms are verified unless `raw` is set.
TruncatedSeries load_law_series(const Options& o) {
  if (!o.builtin.empty() && !o.input.empty()) throw UsageError("--input and --builtin are exclusive");
  if (!o.builtin.empty()) {
    const Ring z = make_ring(BaseRing::integers());
    if (o.builtin == "additive") return FormalGroupLaw::additive(z, o.degree.value_or(kDefaultBuiltinDegree)).series();
    if (o.builtin == "multiplicative")
      return FormalGroupLaw::multiplicative(z, o.degree.value_or(kDefaultBuiltinDegree)).series();
    if (o.builtin == "universal") return universal_fgl(require_int(o.degree, "--degree")).law.series();
    throw UsageError("unknown builtin '" + o.builtin + "' (additive, multiplicative, universal)");
  }
  if (o.input.empty()) throw UsageError("one of --input or --builtin is required");
  auto law = series_from_json(read_json(o.input), 2);
  if (o.degree) {
    if (*o.degree > law.truncation())
      throw UsageError("--degree " + std::to_string(*o.degree) + " exceeds the input truncation " +
                       std::to_string(law.truncation()));
    law = law.truncated(*o.degree);
  }
  if (law.truncation() < 2) throw UsageError("truncation degree must be ≥ 2");
  return law;
}

FormalGroupLaw load_law(const Options& o) { return FormalGroupLaw::make(load_law_series(o)); }

TruncatedSeries load_univariate(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  return series_from_json(read_json(path), 1);
}

Json index_json(const SeriesIndex& k, int arity) {
  Json out = Json::array();
  for (int v = 0; v < arity; ++v) out.push_back(k.e[static_cast<std::size_t>(v)]);
  return out;
}

std::string verdict_line(const Certificate& c) {
  return "certificate " + c.kind + ": " + (c.verdict() ? "true" : "false");
}

void attach(Outcome& r, const std::string& key, const Certificate& c) {
  r.doc[key] = c.to_json();
  r.text.push_back(verdict_line(c));
  for (const auto& v : c.violations) r.text.push_back("  violation: " + v.dump());
  if (!c.verdict()) r.exit_code = kExitVerdictFalse;
}

Outcome cmd_check(const Options& o) {
  const auto law = load_law_series(o);
  Certificate cert{"axioms", Json::array(), content_digest(series_to_json(law))};
  for (const auto& v : check_fgl_axioms(law)) {
    const int arity = v.axiom == Axiom::Associativity ? 3 : 2;
    cert.violations.push_back(Json{{"axiom", std::string(to_string(v.axiom))},
                                   {"exponents", index_json(v.index, arity)},
                                   {"defect", v.defect.to_string()}});
  }
  Outcome r;
  attach(r, "certificate", cert);
  return r;
}

Outcome series_outcome(const char* key, const TruncatedSeries& s) {
  Outcome r;
  r.doc[key] = series_to_json(s);
  r.text.push_back(std::string(key) + " = " + s.to_string());
  return r;
}

Outcome cmd_log(const Options& o) { return series_outcome("log", fgl_log(load_law(o))); }
Outcome cmd_exp(const Options& o) { return series_outcome("exp", fgl_exp(load_law(o))); }

Outcome cmd_nseries(const Options& o) {
  const int n = require_int(o.count, "--count");
  Outcome r = series_outcome("series", n_series(load_law(o), n));
  r.doc["n"] = n;
  return r;
}

Certificate p_locality_certificate(const TruncatedSeries& law, const TruncatedSeries& iso, long p, const Json& inputs) {
  Certificate cert{"p_locality", Json::array(), content_digest(inputs)};
  auto scan = [&](const TruncatedSeries& s, const char* what) {
    for (const auto& [k, c] : s.coefficients())
      for (const auto& [m, q] : c.terms())
        if (!is_p_local(q, p))
          cert.violations.push_back(Json{{"series", what}, {"exponents", index_json(k, s.arity())}, {"value", q.to_string()}});
  };
  scan(law, "ptypical_fgl");
  scan(iso, "iso");
  return cert;
}

Outcome cmd_ptypify(const Options& o) {
  const long p = require_prime(o);
  const auto law = load_law(o);
  const Json inputs{{"fgl", fgl_to_json(law)}, {"prime", p}};
  Outcome r;
  try {
    const auto result = p_typify(law, p);
    r.doc["ptypical_fgl"] = fgl_to_json(result.law);
    r.doc["iso"] = series_to_json(result.iso.f.series());
    r.text.push_back("ptypical_fgl = " + result.law.series().to_string());
    r.text.push_back("iso = " + result.iso.f.series().to_string());
    Certificate strict{"strict_iso", Json::array(), content_digest(inputs)};
    for (const auto& k : strict_iso_defects(result.iso))
      strict.violations.push_back(Json{{"exponents", index_json(k, 2)}});
    attach(r, "strict_iso_certificate", strict);
    if (result.law.ring()->base().kind == BaseKind::PLocalIntegers)
      attach(r, "p_locality_certificate",
             p_locality_certificate(result.law.series(), result.iso.f.series(), p, inputs));
  } catch (const Error& e) {
    if (e.code() != Errc::CartierIntegralityFailure) throw;
    Certificate cert{"p_locality", Json::array({Json{{"error", e.what()}}}), content_digest(inputs)};
    attach(r, "p_locality_certificate", cert);
  }
  return r;
}

Outcome cmd_idempotent(const Options& o) {
  const long p = require_prime(o);
  const auto law = load_law(o);
  const Json inputs{{"fgl", fgl_to_json(law)}, {"prime", p}};
  Certificate cert{"idempotency", Json::array(), content_digest(inputs)};
  Outcome r;
  try {
    const auto [eps, certificate] = quillen_idempotent(law, p);
    r.doc["orientation"] = series_to_json(eps.series());
    r.doc["ptypical_fgl"] = fgl_to_json(certificate.first_pass.law);
    r.text.push_back("orientation = " + eps.series().to_string());
  } catch (const Error& e) {
    if (e.code() != Errc::IdempotencyFailure) throw;
    cert.violations.push_back(Json{{"error", e.what()}});
  }
  attach(r, "certificate", cert);
  return r;
}

Outcome cmd_universal(const Options& o) {
  const int n = require_int(o.degree, "--degree");
  Outcome r;
  if (o.prime) {
    const auto result = universal_p_typical(n, require_prime(o));
    r.doc["ptypical_fgl"] = fgl_to_json(result.law);
    r.doc["iso"] = series_to_json(result.iso.f.series());
    r.text.push_back("ptypical_fgl = " + result.law.series().to_string());
    r.text.push_back("iso = " + result.iso.f.series().to_string());
  } else {
    const auto ctx = universal_fgl(n);
    r.doc["fgl"] = fgl_to_json(ctx.law);
    r.doc["log"] = series_to_json(ctx.log);
    r.text.push_back("fgl = " + ctx.law.series().to_string());
    r.text.push_back("log = " + ctx.log.to_string());
  }
  return r;
}

Outcome cmd_hazewinkel(const Options& o) {
  const long p = require_prime(o);
  const int k = require_int(o.count, "--count");
  if (k < 0) throw UsageError("--count must be non-negative");
  long minimal = 1;
  for (int i = 0; i < k; ++i) minimal *= p;
  const int n = o.degree.value_or(static_cast<int>(std::max(2L, minimal)));
  const auto data = hazewinkel_generators(p, k, n);
  Outcome r;
  r.doc["prime"] = p;
  r.doc["generators"] = Json::array();
  r.doc["log_coefficients"] = Json::array();
  r.doc["residuals"] = Json::array();
  for (std::size_t i = 0; i < data.generators.size(); ++i) {
    r.doc["generators"].push_back(polynomial_to_json(data.generators[i]));
    r.text.push_back("v" + std::to_string(i + 1) + " = " + data.generators[i].to_string());
    const auto residual = hazewinkel_residual(data, static_cast<int>(i + 1));
    r.doc["residuals"].push_back(residual.to_string());
    if (!residual.is_zero()) r.exit_code = kExitVerdictFalse;
  }
  for (const auto& l : data.p_typical_log_coeffs) r.doc["log_coefficients"].push_back(polynomial_to_json(l));
  return r;
}

Outcome cmd_chern_expand(const Options& o) {
  const auto h = load_univariate(o.input, "--input");
  const int n = require_int(o.n, "--n");
  const int d = o.degree.value_or(h.truncation());
  const auto expansion = expand_product_h(h, ChernRing(h.ring(), n, d));
  Outcome r;
  r.doc["expansion"] = polynomial_to_json(expansion);
  r.text.push_back("expansion = " + expansion.to_string());
  if (o.m) {
    const Json inputs{{"h", series_to_json(h)}, {"n", n}, {"m", *o.m}, {"degree", d}};
    Certificate cert{"multiplicativity", Json::array(), content_digest(inputs)};
    if (!multiplicativity_check(h, n, *o.m, d)) cert.violations.push_back(Json{{"n", n}, {"m", *o.m}});
    attach(r, "certificate", cert);
  }
  return r;
}

Outcome cmd_orient_roundtrip(const Options& o) {
  const auto law = load_law(o);
  const auto f = OrientationSeries::make(load_univariate(o.series, "--series"));
  const Json inputs{{"fgl", fgl_to_json(law)}, {"orientation", series_to_json(f.series())}};
  Certificate cert{"roundtrip", Json::array(), content_digest(inputs)};
  if (!orientation_roundtrip(f, law)) cert.violations.push_back(Json{{"error", "round trip mismatch"}});
  Outcome r;
  attach(r, "certificate", cert);
  return r;
}

Outcome cmd_projective_reduce(const Options& o) {
  const auto a = load_univariate(o.input, "--input");
  const ProjectiveRing ring(a.ring(), require_int(o.n, "--n"));
  const auto reduced = ring.to_series(projective_ring_reduce(ring, ring.from_series(a)));
  return series_outcome("reduced", reduced);
}

void add_flags(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "input JSON document");
  sub->add_option("--builtin", o.builtin, "additive | multiplicative | universal");
  sub->add_option("--series", o.series, "orientation series JSON document");
  sub->add_option("--prime", o.prime, "prime p");
  sub->add_option("--degree", o.degree, "truncation degree N");
  sub->add_option("--count", o.count, "count k (generators, n-series multiple)");
  sub->add_option("--n", o.n, "number of Chern roots / projective dimension");
  sub->add_option("--m", o.m, "second number of Chern roots");
  sub->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--output", o.output, "output path (default stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact formal group law computations", "fglab"};
  app.require_subcommand(1);
  Options opts;
  using Handler = Outcome (*)(const Options&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands = {
      {"check", "verify the formal group law axioms", cmd_check},
      {"log", "logarithm of a formal group law", cmd_log},
      {"exp", "exponential of a formal group law", cmd_exp},
      {"nseries", "the n-series [n](t), n = --count", cmd_nseries},
      {"ptypify", "Cartier p-typification with its canonical strict iso", cmd_ptypify},
      {"idempotent", "Quillen idempotent orientation and idempotency certificate", cmd_idempotent},
      {"universal", "universal formal group law (p-typical with --prime)", cmd_universal},
      {"hazewinkel", "Hazewinkel generators v1..vk", cmd_hazewinkel},
      {"chern-expand", "expand prod h(x_i) in Chern classes", cmd_chern_expand},
      {"orient-roundtrip", "orientation <-> (law, strict iso) round trip", cmd_orient_roundtrip},
      {"projective-reduce", "reduce modulo x^(n+1)", cmd_projective_reduce},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_flags(sub, opts);
    subs.emplace_back(sub, handler);
  }

  std::vector<std::string> argv_storage{"fglab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Outcome outcome;
  try {
    if (opts.degree && *opts.degree < 2) throw UsageError("truncation degree must be ≥ 2");
    for (const auto& [sub, handler] : subs)
      if (sub->parsed()) outcome = handler(opts);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream rendered;
  if (opts.format == "text") {
    for (const auto& line : outcome.text) rendered << line << '\n';
  } else {
    rendered << outcome.doc.dump(2) << '\n';
  }
  if (opts.output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opts.output << '\n';
      return kExitUsage;
    }
    file << rendered.str();
  }
  return outcome.exit_code;
}

}  // namespace fglab::cli
