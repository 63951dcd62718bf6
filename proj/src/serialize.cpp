#include "fglab/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "fglab/error.hpp"

namespace fglab {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int non_negative_int(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1 << 20)
    parse_error(std::string(what) + " must be a non-negative integer");
  return static_cast<int>(v.get<long long>());
}

Json monomial_to_json(const RingDescriptor& ring, const Monomial& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) out[ring.generators()[i].name] = m[i];
  return out;
}

Monomial monomial_from_json(const RingDescriptor& ring, const Json& doc) {
  if (!doc.is_object()) parse_error("monomial must be an object");
  std::vector<int> e(ring.size(), 0);
  for (const auto& [name, exp] : doc.items()) {
    const auto i = ring.index_of(name);
    if (!i) parse_error("unknown generator '" + name + "'");
    e[*i] = non_negative_int(exp, "monomial exponent");
  }
  return Monomial(std::move(e));
}

BigRational value_from_json(const Json& v) {
  if (!v.is_string()) parse_error("values must be \"num/den\" strings");
  return BigRational::parse(v.get<std::string>());
}

/// Adds one serialized term; rejects values outside the ring's base.
void add_term(std::vector<std::pair<Monomial, BigRational>>& terms, const Ring& ring, const Json& entry) {
  terms.emplace_back(monomial_from_json(*ring, field(entry, "monomial")), value_from_json(field(entry, "value")));
}

}  // namespace

Json ring_to_json(const RingDescriptor& ring) {
  Json base;
  switch (ring.base().kind) {
    case BaseKind::Integers: base = "Z"; break;
    case BaseKind::Rationals: base = "Q"; break;
    case BaseKind::PLocalIntegers: base = Json{{"Zp", ring.base().prime}}; break;
  }
  Json gens = Json::array();
  for (const auto& g : ring.generators()) gens.push_back(Json{{"name", g.name}, {"weight", g.weight}});
  return Json{{"base", base}, {"generators", gens}};
}

Ring ring_from_json(const Json& doc) {
  const Json& b = field(doc, "base");
  BaseRing base;
  if (b == "Q") {
    base = BaseRing::rationals();
  } else if (b == "Z") {
    base = BaseRing::integers();
  } else if (b.is_object() && b.contains("Zp") && b.at("Zp").is_number_integer()) {
    base = BaseRing::p_local(b.at("Zp").get<long>());
  } else {
    parse_error("ring base must be \"Q\", \"Z\" or {\"Zp\": p}");
  }
  std::vector<Generator> gens;
  if (doc.contains("generators")) {
    const Json& g = doc.at("generators");
    if (!g.is_array()) parse_error("generators must be an array");
    for (const auto& entry : g) {
      const Json& name = field(entry, "name");
      if (!name.is_string()) parse_error("generator name must be a string");
      gens.push_back({name.get<std::string>(), non_negative_int(field(entry, "weight"), "weight")});
    }
  }
  return make_ring(base, std::move(gens));
}

Json polynomial_to_json(const GradedPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(Json{{"monomial", monomial_to_json(*p.ring(), m)}, {"value", c.to_string()}});
  return Json{{"ring", ring_to_json(*p.ring())}, {"terms", terms}};
}

GradedPolynomial polynomial_from_json(const Json& doc) {
  const Ring ring = ring_from_json(field(doc, "ring"));
  const Json& t = field(doc, "terms");
  if (!t.is_array()) parse_error("terms must be an array");
  std::vector<std::pair<Monomial, BigRational>> terms;
  for (const auto& entry : t) add_term(terms, ring, entry);
  return GradedPolynomial::from_terms(ring, terms);
}

Json series_to_json(const TruncatedSeries& s) {
  if (s.arity() > 2) throw Error(Errc::ArityMismatch, "only univariate and bivariate series serialize");
  Json coeffs = Json::array();
  for (const auto& [k, c] : s.coefficients()) {
    for (const auto& [m, q] : c.terms()) {
      Json entry;
      if (s.arity() == 1) {
        entry["texp"] = k.e[0];
      } else {
        entry["xexp"] = k.e[0];
        entry["yexp"] = k.e[1];
      }
      entry["monomial"] = monomial_to_json(*s.ring(), m);
      entry["value"] = q.to_string();
      coeffs.push_back(std::move(entry));
    }
  }
  return Json{{"ring", ring_to_json(*s.ring())}, {"truncation", s.truncation()}, {"coefficients", coeffs}};
}

TruncatedSeries series_from_json(const Json& doc, int arity) {
  const Ring ring = ring_from_json(field(doc, "ring"));
  const int n = non_negative_int(field(doc, "truncation"), "truncation");
  const Json& list = field(doc, "coefficients");
  if (!list.is_array()) parse_error("coefficients must be an array");
  TruncatedSeries out(ring, arity, n);
  for (const auto& entry : list) {
    SeriesIndex k;
    if (arity == 1) {
      k.e[0] = non_negative_int(field(entry, "texp"), "texp");
    } else {
      k.e[0] = non_negative_int(field(entry, "xexp"), "xexp");
      k.e[1] = non_negative_int(field(entry, "yexp"), "yexp");
    }
    if (k.degree() > n) parse_error("coefficient above the truncation degree");
    std::vector<std::pair<Monomial, BigRational>> terms;
    add_term(terms, ring, entry);
    out.add(k, GradedPolynomial::from_terms(ring, terms));
  }
  return out;
}

Json fgl_to_json(const FormalGroupLaw& law) { return series_to_json(law.series()); }

std::string content_digest(const Json& inputs) {
  const std::string bytes = inputs.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(Errc::InvalidArgument, "SHA-256 digest failed");
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Json Certificate::to_json() const {
  return Json{{"kind", kind}, {"verdict", verdict()}, {"violations", violations}, {"inputs_digest", inputs_digest}};
}

}  // namespace fglab
