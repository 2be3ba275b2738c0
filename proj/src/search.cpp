#include "recgeo/search.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "recgeo/classifier.hpp"
#include "recgeo/errors.hpp"
#include "recgeo/parser.hpp"
#include "recgeo/primes.hpp"

namespace recgeo {

namespace {

constexpr std::uint64_t kChunk = 256;

Json config_to_json(const SearchConfig& c) {
  return Json{{"deg_max", c.deg_max},
              {"coeff_max", c.coeff_max},
              {"term_count", c.term_count},
              {"prime_checkpoint_n", c.prime_checkpoint_n},
              {"prime_threshold", c.prime_threshold},
              {"trial_bound", c.factor_options.trial_bound},
              {"rho_budget", c.factor_options.rho_budget}};
}

void validate_config(const SearchConfig& c) {
  if (c.term_count < 2) throw PreconditionViolated("term window must hold at least three terms");
  if (c.jobs == 0) throw PreconditionViolated("jobs must be positive");
  search_space_size(c);
}

std::uint64_t extension_end(const SearchConfig& c) { return c.term_count + c.term_count / 2; }

// Does the verdict predict exactly the window a_0..a_{window_end}?  `terms`
// reaches at least extension_end for non-geometric verdicts.
bool window_agrees(const Classification& verdict, const std::vector<Integer>& terms, std::uint64_t window_end) {
  const std::vector<Integer> window(terms.begin(), terms.begin() + static_cast<long>(window_end) + 1);
  if (std::holds_alternative<NotUltimatelyGeometric>(verdict)) {
    const auto fit = empirical_geometric_tail(window);
    if (!fit) return true;
    Integer expected = fit->coeff * ipow(fit->ratio, fit->onset);
    for (std::uint64_t n = fit->onset; n < terms.size(); ++n) {
      if (terms[n] != expected) return true;
      expected *= fit->ratio;
    }
    return false;
  }
  Integer ratio = 0, coeff = 0;
  std::uint64_t onset = 0;
  if (const auto* g = std::get_if<Geometric>(&verdict)) {
    ratio = g->ratio;
    coeff = g->coeff;
  } else if (const auto* u = std::get_if<UltimatelyGeometric>(&verdict)) {
    ratio = u->ratio;
    coeff = u->coeff;
    onset = u->onset.get_ui();
  }
  Integer geometric = coeff;
  for (std::uint64_t n = 0; n < window.size(); ++n) {
    if ((window[n] == geometric) != (n >= onset)) return false;
    geometric *= ratio;
  }
  return true;
}

struct Checkpoint {
  std::vector<std::optional<SearchRecord>> records;
  std::uint64_t loaded = 0;
};

Checkpoint load_checkpoint(const SearchConfig& config, std::uint64_t total) {
  Checkpoint cp;
  cp.records.resize(total);
  const auto& path = *config.checkpoint_path;
  const Json header = Json{{"header", config_to_json(config)}};

  std::string content;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  if (content.empty()) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << header.dump() << '\n';
    return cp;
  }

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    const auto nl = content.find('\n', start);
    if (nl == std::string::npos) break;
    lines.push_back(content.substr(start, nl - start));
    start = nl + 1;
  }
  // A final line without newline is a torn write: keep it if it parses.
  std::string torn = content.substr(start);
  bool keep_torn = false;
  if (!torn.empty()) {
    const Json j = Json::parse(torn, nullptr, false);
    keep_torn = !j.is_discarded();
    if (keep_torn) lines.push_back(torn);
  }

  if (lines.empty()) throw CheckpointCorrupt("checkpoint has no header");
  const Json first = Json::parse(lines[0], nullptr, false);
  if (first.is_discarded() || first != header) {
    throw CheckpointCorrupt("checkpoint header does not match the search configuration");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Json j = Json::parse(lines[i], nullptr, false);
    if (j.is_discarded()) throw CheckpointCorrupt("checkpoint line " + std::to_string(i + 1) + " is not JSON");
    SearchRecord r = record_from_json(j);
    if (r.index >= total) throw CheckpointCorrupt("checkpoint index out of range");
    if (cp.records[r.index]) throw CheckpointCorrupt("duplicate checkpoint index " + std::to_string(r.index));
    cp.records[r.index] = std::move(r);
    ++cp.loaded;
  }

  if (!torn.empty()) {
    if (keep_torn) {
      std::ofstream(path, std::ios::binary | std::ios::app) << '\n';
    } else {
      std::filesystem::resize_file(path, start);
    }
  }
  return cp;
}

void evaluate_range(const SearchConfig& config, std::uint64_t begin, std::uint64_t end,
                    std::vector<std::optional<SearchRecord>>& records) {
  std::vector<std::uint64_t> todo;
  for (std::uint64_t i = begin; i < end; ++i) {
    if (!records[i]) todo.push_back(i);
  }
  if (todo.empty()) return;

  const unsigned workers = std::min<std::uint64_t>(config.jobs, todo.size());
  if (workers <= 1) {
    for (auto i : todo) records[i] = evaluate_index(config, i);
    return;
  }
  // Workers write disjoint slots; the caller merges in index order.
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < todo.size(); k += workers) records[todo[k]] = evaluate_index(config, todo[k]);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::uint64_t search_space_size(const SearchConfig& config) {
  const std::uint64_t base = 2ull * config.coeff_max + 1;
  const std::uint64_t digits = 3ull * (config.deg_max + 1);
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < digits; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) {
      throw PreconditionViolated("search box is too large");
    }
    total *= base;
  }
  return total;
}

SeqSpec spec_at(const SearchConfig& config, std::uint64_t index) {
  const std::uint64_t base = 2ull * config.coeff_max + 1;
  const std::size_t width = config.deg_max + 1;
  std::vector<long> digits(3 * width);
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<long>(index % base) - static_cast<long>(config.coeff_max);
    index /= base;
  }
  auto poly = [&](std::size_t which) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < width; ++k) c.emplace_back(digits[which * width + k]);
    return Poly(std::move(c));
  };
  return SeqSpec(poly(0), poly(1), poly(2));
}

Json record_to_json(const SearchRecord& r) {
  Json j{{"index", r.index}, {"verdictTag", r.verdict_tag}};
  j["primeCount"] = r.prime_count ? Json(*r.prime_count) : Json(nullptr);
  j["zeroTerms"] = r.zero_terms ? Json(*r.zero_terms) : Json(nullptr);
  j["windowAgrees"] = r.window_agrees;
  return j;
}

SearchRecord record_from_json(const Json& j) {
  static const std::set<std::string> kTags = {"zero_sequence", "geometric", "ultimately_geometric",
                                              "not_ultimately_geometric"};
  auto bad = [](const std::string& why) { return CheckpointCorrupt("invalid checkpoint record: " + why); };
  if (!j.is_object() || j.size() != 5) throw bad("expected an object with five keys");
  if (!j.contains("index") || !j["index"].is_number_unsigned()) throw bad("index");
  if (!j.contains("verdictTag") || !j["verdictTag"].is_string() || !kTags.count(j["verdictTag"].get<std::string>())) {
    throw bad("verdictTag");
  }
  if (!j.contains("windowAgrees") || !j["windowAgrees"].is_boolean()) throw bad("windowAgrees");
  SearchRecord r;
  r.index = j["index"].get<std::uint64_t>();
  r.verdict_tag = j["verdictTag"].get<std::string>();
  r.window_agrees = j["windowAgrees"].get<bool>();
  const bool scanned = r.verdict_tag == "not_ultimately_geometric";
  for (const char* key : {"primeCount", "zeroTerms"}) {
    if (!j.contains(key)) throw bad(key);
    const auto& v = j[key];
    if (scanned ? !v.is_number_unsigned() : !v.is_null()) throw bad(key);
  }
  if (scanned) {
    r.prime_count = j["primeCount"].get<std::uint64_t>();
    r.zero_terms = j["zeroTerms"].get<std::uint64_t>();
  }
  return r;
}

SearchRecord evaluate_index(const SearchConfig& config, std::uint64_t index) {
  const SeqSpec spec = spec_at(config, index);
  const Classification verdict = classify(spec);

  SearchRecord r;
  r.index = index;
  r.verdict_tag = std::string(classification_tag(verdict));

  const bool scan = std::holds_alternative<NotUltimatelyGeometric>(verdict);
  const std::uint64_t horizon = scan ? extension_end(config) : config.term_count;
  const auto all = terms(spec, std::max(horizon, scan ? config.prime_checkpoint_n : 0));
  r.window_agrees =
      window_agrees(verdict, {all.begin(), all.begin() + static_cast<long>(horizon) + 1}, config.term_count);

  if (scan) {
    PrimeAccumulator acc(config.factor_options);
    for (std::uint64_t n = 0; n <= config.prime_checkpoint_n; ++n) acc.add(n, all[n]);
    r.prime_count = acc.report().primes.size();
    r.zero_terms = acc.report().zero_term_indices.size();
  }
  return r;
}

SearchOutcome run_search(const SearchConfig& config) {
  validate_config(config);
  const std::uint64_t total = search_space_size(config);

  Checkpoint cp;
  if (config.checkpoint_path) {
    cp = load_checkpoint(config, total);
  } else {
    cp.records.resize(total);
  }

  SearchOutcome outcome;
  outcome.reused = cp.loaded;
  std::ofstream log;
  if (config.checkpoint_path) log.open(*config.checkpoint_path, std::ios::binary | std::ios::app);

  for (std::uint64_t begin = 0; begin < total; begin += kChunk) {
    const std::uint64_t end = std::min(total, begin + kChunk);
    std::vector<bool> fresh(end - begin);
    for (std::uint64_t i = begin; i < end; ++i) fresh[i - begin] = !cp.records[i].has_value();
    evaluate_range(config, begin, end, cp.records);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (!fresh[i - begin]) continue;
      ++outcome.computed;
      if (log.is_open()) log << record_to_json(*cp.records[i]).dump() << '\n';
    }
    if (log.is_open()) log.flush();
  }

  std::uint64_t zero = 0, geometric = 0, ultimately = 0, not_ug = 0, disagreements = 0;
  Json candidates = Json::array();
  for (const auto& rec : cp.records) {
    const SearchRecord& r = *rec;
    if (!r.window_agrees) ++disagreements;
    if (r.verdict_tag == "zero_sequence") {
      ++zero;
    } else if (r.verdict_tag == "geometric") {
      ++geometric;
    } else if (r.verdict_tag == "ultimately_geometric") {
      ++ultimately;
    } else {
      ++not_ug;
      if (*r.prime_count <= config.prime_threshold) {
        const SeqSpec spec = spec_at(config, r.index);
        candidates.push_back(Json{{"index", r.index},
                                  {"spec", spec_to_json(spec)},
                                  {"f", print_poly(spec.f())},
                                  {"g", print_poly(spec.g())},
                                  {"h", print_poly(spec.h())},
                                  {"prime_count", *r.prime_count},
                                  {"zero_terms", *r.zero_terms}});
      }
    }
  }

  Json cfg = config_to_json(config);
  outcome.report = Json{{"config", std::move(cfg)},
                        {"summary",
                         {{"total", total},
                          {"zero_sequence", zero},
                          {"geometric", geometric},
                          {"ultimately_geometric", ultimately},
                          {"not_ultimately_geometric", not_ug},
                          {"window_disagreements", disagreements}}},
                        {"candidates", std::move(candidates)}};
  return outcome;
}

}  // namespace recgeo
