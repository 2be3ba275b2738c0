#include "recgeo/serialize.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "recgeo/errors.hpp"

namespace recgeo {

namespace {

const std::regex kIntegerPattern("-?(0|[1-9][0-9]*)");
const std::regex kRationalPattern("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");

bool is_natural(const Json& j) { return j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0); }

bool is_integer_string(const Json& j) { return j.is_string() && std::regex_match(j.get<std::string>(), kIntegerPattern); }

Integer integer_from_json(const Json& j, const char* key) {
  if (!is_integer_string(j)) throw PreconditionViolated(std::string("\"") + key + "\" must be a decimal integer string");
  return Integer(j.get<std::string>(), 10);
}

}  // namespace

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionViolated("polynomial must be an array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string() || !std::regex_match(c.get<std::string>(), kRationalPattern)) {
      throw PreconditionViolated("polynomial coefficient must be a rational string");
    }
    Rational q(c.get<std::string>(), 10);
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Poly(std::move(coeffs));
}

Json spec_to_json(const SeqSpec& spec) {
  return Json{{"f", poly_to_json(spec.f())}, {"g", poly_to_json(spec.g())}, {"h", poly_to_json(spec.h())}};
}

SeqSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f") || !j.contains("g") || !j.contains("h")) {
    throw PreconditionViolated("spec must be an object with keys f, g, h");
  }
  return SeqSpec(poly_from_json(j["f"]), poly_from_json(j["g"]), poly_from_json(j["h"]));
}

Json integers_to_json(const std::vector<Integer>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

void put_classification(Json& obj, const Classification& c) {
  obj["classification"] = std::string(classification_tag(c));
  if (const auto* g = std::get_if<Geometric>(&c)) {
    obj["b"] = to_string(g->ratio);
    obj["c"] = to_string(g->coeff);
  } else if (const auto* u = std::get_if<UltimatelyGeometric>(&c)) {
    obj["b"] = to_string(u->ratio);
    obj["c"] = to_string(u->coeff);
    obj["n0"] = u->onset.get_ui();
  } else if (const auto* n = std::get_if<NotUltimatelyGeometric>(&c)) {
    obj["reason"] = std::string(reason_name(n->reason));
  }
}

Classification classification_from_json(const Json& obj) {
  const auto tag = obj.at("classification").get<std::string>();
  if (tag == "zero_sequence") return ZeroSequence{};
  if (tag == "geometric") return Geometric{integer_from_json(obj.at("b"), "b"), integer_from_json(obj.at("c"), "c")};
  if (tag == "ultimately_geometric") {
    return UltimatelyGeometric{integer_from_json(obj.at("b"), "b"), integer_from_json(obj.at("c"), "c"),
                               Integer(obj.at("n0").get<unsigned long>())};
  }
  if (tag == "not_ultimately_geometric") {
    if (auto r = parse_reason(obj.at("reason").get<std::string>())) return NotUltimatelyGeometric{*r};
    throw PreconditionViolated("unknown reason");
  }
  throw PreconditionViolated("unknown classification tag: " + tag);
}

void put_prime_report(Json& obj, const PrimeReport& report) {
  Json primes = Json::array();
  Json first = Json::object();
  for (const auto& p : report.primes) {
    primes.push_back(to_string(p));
    first[to_string(p)] = report.first_occurrence.at(p);
  }
  obj["primes"] = std::move(primes);
  obj["zero_terms"] = report.zero_term_indices;
  obj["first_occurrence"] = std::move(first);
  obj["terms_scanned"] = report.terms_scanned;
  Json unfactored = Json::array();
  for (const auto& u : report.unfactored) unfactored.push_back(Json{{"index", u.index}, {"value", to_string(u.value)}});
  obj["unfactored"] = std::move(unfactored);
}

namespace {

void check_poly(const Json& j, const std::string& where, std::vector<std::string>& problems) {
  if (!j.is_array()) {
    problems.push_back(where + " must be an array");
    return;
  }
  for (const auto& c : j) {
    if (!c.is_string() || !std::regex_match(c.get<std::string>(), kRationalPattern)) {
      problems.push_back(where + " has a non-rational coefficient");
      return;
    }
  }
  if (!j.empty() && j.back() == "0") problems.push_back(where + " is not canonical (trailing zero)");
}

void check_spec(const Json& j, const std::string& where, std::vector<std::string>& problems) {
  if (!j.is_object()) {
    problems.push_back(where + " must be an object");
    return;
  }
  for (const char* k : {"f", "g", "h"}) {
    if (!j.contains(k)) {
      problems.push_back(where + "." + k + " missing");
    } else {
      check_poly(j[k], where + "." + k, problems);
    }
  }
}

void check_string_integers(const Json& j, const std::string& where, bool positive,
                           std::vector<std::string>& problems) {
  if (!j.is_array()) {
    problems.push_back(where + " must be an array");
    return;
  }
  for (const auto& v : j) {
    if (!is_integer_string(v) || (positive && (v.get<std::string>()[0] == '-' || v == "0"))) {
      problems.push_back(where + " has an invalid entry");
      return;
    }
  }
}

void check_naturals(const Json& j, const std::string& where, std::vector<std::string>& problems) {
  if (!j.is_array() || !std::all_of(j.begin(), j.end(), [](const Json& v) { return is_natural(v); })) {
    problems.push_back(where + " must be an array of nonnegative integers");
  }
}

void check_search_report(const Json& doc, std::vector<std::string>& problems) {
  for (const char* k : {"config", "summary", "candidates"}) {
    if (!doc.contains(k)) problems.push_back(std::string(k) + " missing");
  }
  if (doc.contains("summary")) {
    const auto& s = doc["summary"];
    for (const char* k : {"total", "zero_sequence", "geometric", "ultimately_geometric", "not_ultimately_geometric",
                          "window_disagreements"}) {
      if (!s.contains(k) || !is_natural(s[k])) problems.push_back(std::string("summary.") + k + " invalid");
    }
  }
  if (doc.contains("candidates")) {
    if (!doc["candidates"].is_array()) {
      problems.push_back("candidates must be an array");
      return;
    }
    for (const auto& c : doc["candidates"]) {
      if (!c.contains("index") || !is_natural(c["index"])) problems.push_back("candidate index invalid");
      if (!c.contains("prime_count") || !is_natural(c["prime_count"])) {
        problems.push_back("candidate prime_count invalid");
      }
      if (!c.contains("spec")) {
        problems.push_back("candidate spec missing");
      } else {
        check_spec(c["spec"], "candidate.spec", problems);
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_report(const Json& doc) {
  std::vector<std::string> problems;
  if (!doc.is_object()) return {"report must be a JSON object"};
  if (doc.contains("summary") || doc.contains("candidates")) {
    check_search_report(doc, problems);
    return problems;
  }

  static const std::set<std::string> kKnown = {
      "spec",       "classification", "b",         "c",           "n0",
      "reason",     "primes",         "zero_terms", "terms",      "first_occurrence",
      "terms_scanned", "unfactored",  "growth",    "family",      "closed_form_agrees",
      "zero_term_caveat"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.count(key)) problems.push_back("unknown key \"" + key + "\"");
  }

  if (!doc.contains("spec")) {
    problems.push_back("spec missing");
  } else {
    check_spec(doc["spec"], "spec", problems);
  }

  if (doc.contains("classification")) {
    const auto& tag = doc["classification"];
    static const std::set<std::string> kTags = {"zero_sequence", "geometric", "ultimately_geometric",
                                                "not_ultimately_geometric"};
    if (!tag.is_string() || !kTags.count(tag.get<std::string>())) {
      problems.push_back("classification has an unknown tag");
    } else {
      const auto t = tag.get<std::string>();
      const bool has_ratio = t == "geometric" || t == "ultimately_geometric";
      for (const char* k : {"b", "c"}) {
        if (has_ratio != doc.contains(k)) problems.push_back(std::string(k) + " presence does not match tag");
        if (doc.contains(k) && !is_integer_string(doc[k])) problems.push_back(std::string(k) + " must be an integer string");
      }
      if ((t == "ultimately_geometric") != doc.contains("n0")) problems.push_back("n0 presence does not match tag");
      if (doc.contains("n0") && (!is_natural(doc["n0"]) || doc["n0"].get<unsigned long>() < 1)) {
        problems.push_back("n0 must be a positive integer");
      }
      if ((t == "not_ultimately_geometric") != doc.contains("reason")) {
        problems.push_back("reason presence does not match tag");
      }
      if (doc.contains("reason") && (!doc["reason"].is_string() || !parse_reason(doc["reason"].get<std::string>()))) {
        problems.push_back("reason is not a known value");
      }
    }
  } else {
    for (const char* k : {"b", "c", "n0", "reason"}) {
      if (doc.contains(k)) problems.push_back(std::string(k) + " requires classification");
    }
  }

  if (doc.contains("primes")) check_string_integers(doc["primes"], "primes", true, problems);
  if (doc.contains("terms")) check_string_integers(doc["terms"], "terms", false, problems);
  if (doc.contains("zero_terms")) check_naturals(doc["zero_terms"], "zero_terms", problems);
  return problems;
}

}  // namespace recgeo
