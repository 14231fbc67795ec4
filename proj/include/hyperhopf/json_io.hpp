#ifndef HYPERHOPF_JSON_IO_HPP
#define HYPERHOPF_JSON_IO_HPP

#include <json.hpp>

#include "hyperhopf/lincomb.hpp"
#include "hyperhopf/multicomplex.hpp"
#include "hyperhopf/polynomial.hpp"

namespace hyperhopf {

using nlohmann::json;

/// {"vertices":[labels],"edges":[[labels]]}; only nontrivial edges listed.
Hypergraph parse_hypergraph(const json& j);
json serialize_hypergraph(const Hypergraph& g);

/// {"vertices":[...],"edges":[{"id":...,"multiset":{label:mult}}],
///  "order":[[lowId,highId]]}; the order lists pairs among stored instances,
/// any transitive reduction or closure is accepted.
MultiComplex parse_multicomplex(const json& j);
json serialize_multicomplex(const MultiComplex& c);

std::string rational_to_string(const mpq_class& q);

/// {"text":..., "coefficients":[rationals ascending]}, optionally with the
/// Hilbert-basis coefficients.
json serialize_polynomial(const RationalPolynomial& p, bool hilbert_basis = false);

/// List of {"coeff":..., "factors":[serialized objects]}.
json serialize_sum(const HgSum& s);
json serialize_sum(const McSum& s);

}  // namespace hyperhopf

#endif
