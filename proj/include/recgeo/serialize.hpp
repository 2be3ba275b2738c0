// JSON wire forms.  Polynomials are ascending coefficient arrays of decimal
// rational strings ("3", "-1/2"); big integers are decimal strings.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "recgeo/classifier.hpp"
#include "recgeo/polynomial.hpp"
#include "recgeo/primes.hpp"
#include "recgeo/sequence.hpp"

namespace recgeo {

using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
/// Inverse of poly_to_json; throws PreconditionViolated on malformed input.
Poly poly_from_json(const Json& j);
Json spec_to_json(const SeqSpec& spec);
SeqSpec spec_from_json(const Json& j);

Json integers_to_json(const std::vector<Integer>& values);

/// Adds "classification" and, depending on the variant, "b", "c", "n0" and
/// "reason" to `obj`.
void put_classification(Json& obj, const Classification& c);
/// Reads back what put_classification wrote.
Classification classification_from_json(const Json& obj);

/// Adds "primes", "zero_terms", "first_occurrence", "terms_scanned" and
/// "unfactored" to `obj`.
void put_prime_report(Json& obj, const PrimeReport& report);

/// Problems found checking `doc` against the documented report schema; empty
/// when valid.
std::vector<std::string> validate_report(const Json& doc);

}  // namespace recgeo
