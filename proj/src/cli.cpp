#include "recgeo/cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "recgeo/classifier.hpp"
#include "recgeo/errors.hpp"
#include "recgeo/generators.hpp"
#include "recgeo/parser.hpp"
#include "recgeo/primes.hpp"
#include "recgeo/search.hpp"
#include "recgeo/serialize.hpp"

namespace recgeo::cli {

namespace {

// Bad command-line values that the option parser cannot catch itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SpecFlags {
  std::string f, g, h;
};

struct Options {
  SpecFlags spec;
  std::uint64_t terms = 10;
  bool json = false;
  std::string checkpoints;
  std::optional<std::uint64_t> rho_budget;
  std::uint32_t trial_bound = FactorOptions{}.trial_bound;

  std::string family;
  std::map<std::string, std::string> params;
  std::string action = "classify";
  bool list = false;

  SearchConfig search;
  std::string checkpoint_file;
};

SeqSpec spec_from_flags(const SpecFlags& flags) {
  return SeqSpec(parse_poly(flags.f), parse_poly(flags.g), parse_poly(flags.h));
}

FactorOptions factor_options(const Options& o, FactorOptions f = {}) {
  if (o.rho_budget) f.rho_budget = *o.rho_budget;
  f.trial_bound = o.trial_bound;
  return f;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  static const std::regex kNatural("[0-9]{1,18}");
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!std::regex_match(item, kNatural)) throw UsageError("invalid checkpoint list: " + text);
    out.push_back(std::stoull(item));
  }
  return out;
}

std::string join(const std::vector<Integer>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ' ';
    s += to_string(values[i]);
  }
  return s;
}

template <class Range>
std::string join_set(const Range& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ' ';
    s += to_string(v);
  }
  return s;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

void do_eval(const SeqSpec& spec, const Options& o, std::ostream& out, Json extra = Json::object(),
             const FamilyInstance* family = nullptr) {
  const auto ts = terms(spec, o.terms);
  std::optional<bool> agrees;
  if (family) {
    agrees = true;
    for (std::uint64_t n = 0; n < ts.size(); ++n) agrees = *agrees && family->predicted_term(n) == ts[n];
  }
  if (o.json) {
    Json doc = std::move(extra);
    doc["spec"] = spec_to_json(spec);
    doc["terms"] = integers_to_json(ts);
    if (agrees) doc["closed_form_agrees"] = *agrees;
    emit(out, doc);
    return;
  }
  out << join(ts) << '\n';
  if (agrees) out << "closed form " << (*agrees ? "agrees" : "DISAGREES") << " with the recurrence\n";
}

void do_classify(const SeqSpec& spec, const Options& o, std::ostream& out, Json extra = Json::object()) {
  const auto verdict = classify(spec);
  const auto cert = certify_finite_prime_set(spec);
  if (o.json) {
    Json doc = std::move(extra);
    doc["spec"] = spec_to_json(spec);
    put_classification(doc, verdict);
    if (cert) {
      Json primes = Json::array();
      for (const auto& p : cert->prime_bound) primes.push_back(to_string(p));
      doc["primes"] = std::move(primes);
      doc["zero_term_caveat"] = cert->caveat_zero_term;
    }
    emit(out, doc);
    return;
  }
  out << describe(verdict) << '\n';
  if (cert) {
    out << "finite prime set: {" << join_set(cert->prime_bound) << "}\n";
    if (cert->caveat_zero_term) out << "note: a prefix term is 0, so every prime divides some term literally\n";
  }
}

void do_primes(const SeqSpec& spec, const Options& o, std::ostream& out, Json extra = Json::object()) {
  const auto checkpoints = parse_checkpoints(o.checkpoints);
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw PreconditionViolated("checkpoints must be ascending");
  }
  const auto fo = factor_options(o);
  const auto report = prime_set_up_to(spec, o.terms, fo);
  std::vector<std::pair<std::uint64_t, std::size_t>> growth;
  if (!checkpoints.empty()) growth = prime_growth_curve(spec, checkpoints, fo);

  if (o.json) {
    Json doc = std::move(extra);
    doc["spec"] = spec_to_json(spec);
    put_prime_report(doc, report);
    if (!checkpoints.empty()) {
      Json g = Json::array();
      for (const auto& [n, count] : growth) g.push_back(Json::array({n, count}));
      doc["growth"] = std::move(g);
    }
    emit(out, doc);
    return;
  }
  out << "terms scanned: " << report.terms_scanned << '\n';
  out << "primes (" << report.primes.size() << "): " << join_set(report.primes) << '\n';
  if (!report.zero_term_indices.empty()) {
    out << "zero terms at:";
    for (auto i : report.zero_term_indices) out << ' ' << i;
    out << "\n";
  }
  for (const auto& u : report.unfactored) {
    out << "unfactored cofactor of a_" << u.index << ": " << mpz_sizeinbase(u.value.get_mpz_t(), 10) << " digits\n";
  }
  for (const auto& [n, count] : growth) out << "n=" << n << " primes=" << count << '\n';
}

Integer parse_integer_param(const std::string& name, const std::string& text) {
  static const std::regex kInt("-?[0-9]+");
  if (!std::regex_match(text, kInt)) throw UsageError("parameter --" + name + " must be an integer");
  return Integer(text, 10);
}

void do_example(const Options& o, std::ostream& out) {
  const auto& table = families();
  if (o.list) {
    for (const auto& [name, fc] : table) {
      out << name;
      for (const auto& p : fc.params) out << " --" << p;
      out << "    " << fc.summary << '\n';
    }
    return;
  }
  const auto it = table.find(o.family);
  if (it == table.end()) throw UsageError("unknown family \"" + o.family + "\" (try --list)");
  const auto& fc = it->second;

  std::vector<Integer> args;
  for (const auto& p : fc.params) {
    const auto v = o.params.find(p);
    if (v == o.params.end() || v->second.empty()) throw UsageError("family " + fc.name + " needs --" + p);
    args.push_back(parse_integer_param(p, v->second));
  }
  for (const auto& [k, v] : o.params) {
    if (!v.empty() && std::find(fc.params.begin(), fc.params.end(), k) == fc.params.end()) {
      throw UsageError("family " + fc.name + " does not take --" + k);
    }
  }
  const FamilyInstance inst = fc.make(args);
  Json extra{{"family", inst.name}};
  if (o.action == "eval") {
    do_eval(inst.spec, o, out, std::move(extra), &inst);
  } else if (o.action == "classify") {
    do_classify(inst.spec, o, out, std::move(extra));
  } else {
    do_primes(inst.spec, o, out, std::move(extra));
  }
}

void do_search(Options o, std::ostream& out, std::ostream& err) {
  if (!o.checkpoint_file.empty()) o.search.checkpoint_path = o.checkpoint_file;
  o.search.factor_options = factor_options(o, o.search.factor_options);
  const auto outcome = run_search(o.search);
  err << "search: " << outcome.computed << " specs evaluated, " << outcome.reused << " reused from checkpoint\n";
  if (o.json) {
    emit(out, outcome.report);
    return;
  }
  const auto& s = outcome.report["summary"];
  out << "total " << s["total"] << '\n'
      << "zero_sequence " << s["zero_sequence"] << '\n'
      << "geometric " << s["geometric"] << '\n'
      << "ultimately_geometric " << s["ultimately_geometric"] << '\n'
      << "not_ultimately_geometric " << s["not_ultimately_geometric"] << '\n'
      << "window_disagreements " << s["window_disagreements"] << '\n'
      << "candidates " << outcome.report["candidates"].size() << '\n';
  for (const auto& c : outcome.report["candidates"]) {
    out << "  #" << c["index"] << "  f = " << c["f"].get<std::string>() << "  g = " << c["g"].get<std::string>()
        << "  h = " << c["h"].get<std::string>() << "  primes " << c["prime_count"] << "  zero terms "
        << c["zero_terms"] << '\n';
  }
}

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--f", flags.f, "polynomial f")->required();
  cmd->add_option("--g", flags.g, "polynomial g")->required();
  cmd->add_option("--h", flags.h, "polynomial h")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and classification of recurrences a_n = f(n) a_{n-1} + g(n) h(n)^n", "recgeo"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "print a_0..a_n");
  add_spec_flags(eval, o.spec);
  eval->add_option("-n,--terms", o.terms, "last index")->capture_default_str();
  eval->add_flag("--json", o.json);

  auto* cls = app.add_subcommand("classify", "decide whether the sequence is (ultimately) geometric");
  add_spec_flags(cls, o.spec);
  cls->add_flag("--json", o.json);

  auto* primes = app.add_subcommand("primes", "collect primes dividing a_0..a_n");
  add_spec_flags(primes, o.spec);
  primes->add_option("-n,--terms", o.terms, "last index")->capture_default_str();
  primes->add_option("--checkpoints", o.checkpoints, "comma-separated ascending indices");
  primes->add_option("--rho-budget", o.rho_budget, "Pollard rho iterations per cofactor (0 = unlimited, default 65536)");
  primes->add_option("--trial-bound", o.trial_bound, "trial division bound");
  primes->add_flag("--json", o.json);

  auto* example = app.add_subcommand("example", "instantiate a named family");
  example->add_option("name", o.family, "family name");
  for (const char* p : {"b", "c", "bp", "cp", "d", "n0", "q", "l"}) {
    example->add_option(std::string("--") + p, o.params[p], std::string("family parameter ") + p);
  }
  example->add_option("--action", o.action)->check(CLI::IsMember({"eval", "classify", "primes"}));
  example->add_option("-n,--terms", o.terms, "last index")->capture_default_str();
  example->add_option("--checkpoints", o.checkpoints, "comma-separated ascending indices");
  example->add_option("--rho-budget", o.rho_budget, "Pollard rho iterations per cofactor (0 = unlimited, default 65536)");
  example->add_flag("--list", o.list, "list families and parameters");
  example->add_flag("--json", o.json);

  auto* search = app.add_subcommand("search", "probe a coefficient box for finite prime-divisor sets");
  search->add_option("--deg-max", o.search.deg_max)->capture_default_str();
  search->add_option("--coeff-max", o.search.coeff_max)->capture_default_str();
  search->add_option("--terms", o.search.term_count, "empirical window a_0..a_terms")->capture_default_str();
  search->add_option("--prime-n", o.search.prime_checkpoint_n, "scan primes of a_0..a_N")->capture_default_str();
  search->add_option("--prime-threshold", o.search.prime_threshold)->capture_default_str();
  search->add_option("--checkpoint", o.checkpoint_file, "resumable line-delimited JSON log");
  search->add_option("--jobs", o.search.jobs)->capture_default_str();
  search->add_option("--rho-budget", o.rho_budget, "Pollard rho iterations per cofactor (0 = unlimited, default 4096)");
  search->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      do_eval(spec_from_flags(o.spec), o, out);
    } else if (cls->parsed()) {
      do_classify(spec_from_flags(o.spec), o, out);
    } else if (primes->parsed()) {
      do_primes(spec_from_flags(o.spec), o, out);
    } else if (example->parsed()) {
      do_example(o, out);
    } else if (search->parsed()) {
      do_search(o, out, err);
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace recgeo::cli
