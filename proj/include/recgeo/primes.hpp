// Empirical exploration of the set of primes dividing some term.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "recgeo/factor.hpp"
#include "recgeo/sequence.hpp"

namespace recgeo {

struct OpaqueCofactor {
  std::uint64_t index;
  Integer value;
};

/// Primes dividing a_0..a_{terms_scanned-1}.  Zero terms are listed in
/// zero_term_indices and contribute nothing to `primes`; under the literal
/// "p | 0" reading a single zero term puts every prime in the set.
struct PrimeReport {
  std::set<Integer> primes;
  std::map<Integer, std::uint64_t> first_occurrence;
  std::uint64_t terms_scanned = 0;
  std::vector<std::uint64_t> zero_term_indices;
  // Composite cofactors that exceeded the factoring budget.
  std::vector<OpaqueCofactor> unfactored;
};

/// Incremental builder; feed terms in index order.
class PrimeAccumulator {
 public:
  explicit PrimeAccumulator(FactorOptions options = {}) : options_(options) {}

  void add(std::uint64_t index, const Integer& term);
  const PrimeReport& report() const noexcept { return report_; }
  PrimeReport take() && { return std::move(report_); }

 private:
  FactorOptions options_;
  PrimeReport report_;
};

/// Scans a_0..a_count.
PrimeReport prime_set_up_to(const SeqSpec& spec, std::uint64_t count, const FactorOptions& options = {});

/// (n, |primes found among a_0..a_n|) for each checkpoint.  Checkpoints must
/// be ascending (PreconditionViolated otherwise).
std::vector<std::pair<std::uint64_t, std::size_t>> prime_growth_curve(const SeqSpec& spec,
                                                                      const std::vector<std::uint64_t>& checkpoints,
                                                                      const FactorOptions& options = {});

}  // namespace recgeo
