#ifndef FGLAB_SERIALIZE_HPP
#define FGLAB_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "fglab/formal_group_law.hpp"

namespace fglab {

using Json = nlohmann::json;

/// {"base": "Q" | "Z" | {"Zp": p}, "generators": [{"name", "weight"}]}
Json ring_to_json(const RingDescriptor& ring);
Ring ring_from_json(const Json& doc);

/// {"ring", "terms": [{"monomial": {gen: exp}, "value": "num/den"}]}
Json polynomial_to_json(const GradedPolynomial& p);
GradedPolynomial polynomial_from_json(const Json& doc);

/// Univariate: {"ring", "truncation", "coefficients": [{"texp", "monomial", "value"}]}.
/// Bivariate (the formal group law document): same with "xexp"/"yexp".
/// Entries are sorted by (total degree, exponents, monomial graded-lex) and
/// carry no zero values; every term of a polynomial coefficient is its own
/// entry.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& doc, int arity);

Json fgl_to_json(const FormalGroupLaw& law);

/// Lowercase hex SHA-256 of the compact dump of `inputs`.
std::string content_digest(const Json& inputs);

struct Certificate {
  std::string kind;  // axioms | strict_iso | idempotency | p_locality | roundtrip | multiplicativity
  Json violations = Json::array();
  std::string inputs_digest;

  bool verdict() const { return violations.empty(); }
  Json to_json() const;
};

}  // namespace fglab

#endif  // FGLAB_SERIALIZE_HPP
