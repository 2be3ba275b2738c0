// Exhaustive probe of a coefficient box: classify every spec and, for the
// ones that are not ultimately geometric, count the distinct primes dividing
// their first terms.  Specs whose count stays at or below a threshold are
// reported as candidates for a finite prime-divisor set.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "recgeo/factor.hpp"
#include "recgeo/sequence.hpp"
#include "recgeo/serialize.hpp"

namespace recgeo {

struct SearchConfig {
  unsigned deg_max = 1;
  unsigned coeff_max = 1;
  std::uint64_t term_count = 20;
  std::uint64_t prime_checkpoint_n = 50;
  std::uint64_t prime_threshold = 3;
  std::optional<std::filesystem::path> checkpoint_path;
  unsigned jobs = 1;
  // Prime counts are lower bounds; a smaller rho budget than the library
  // default keeps a full box sweep fast.
  FactorOptions factor_options{10000, 1u << 12};
};

/// (2 coeff_max + 1)^(3 (deg_max + 1)).  Throws PreconditionViolated when the
/// box does not fit in 64 bits.
std::uint64_t search_space_size(const SearchConfig& config);

/// The index-th spec in lexicographic order over the coefficient tuple
/// (f_0..f_D, g_0..g_D, h_0..h_D), each coefficient running -M..M.
SeqSpec spec_at(const SearchConfig& config, std::uint64_t index);

/// One checkpoint line.
struct SearchRecord {
  std::uint64_t index = 0;
  std::string verdict_tag;
  // Only for not-ultimately-geometric specs.
  std::optional<std::uint64_t> prime_count;
  std::optional<std::uint64_t> zero_terms;
  // Whether the empirical tail fit on a_0..a_term_count agrees with the
  // verdict.  For a non-geometric verdict a fit only disagrees if it also
  // extends to index 3 term_count / 2.
  bool window_agrees = true;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

Json record_to_json(const SearchRecord& r);
/// Throws CheckpointCorrupt on any schema violation.
SearchRecord record_from_json(const Json& j);

SearchRecord evaluate_index(const SearchConfig& config, std::uint64_t index);

struct SearchOutcome {
  Json report;
  std::uint64_t reused = 0;
  std::uint64_t computed = 0;
};

/// Runs (or resumes) the search.  The report depends only on the config,
/// never on timing, worker count or resumption.
SearchOutcome run_search(const SearchConfig& config);

}  // namespace recgeo
