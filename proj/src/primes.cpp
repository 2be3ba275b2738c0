#include "recgeo/primes.hpp"

#include <algorithm>

#include "recgeo/errors.hpp"

namespace recgeo {

void PrimeAccumulator::add(std::uint64_t index, const Integer& term) {
  report_.terms_scanned = std::max(report_.terms_scanned, index + 1);
  if (term == 0) {
    report_.zero_term_indices.push_back(index);
    return;
  }
  const auto fact = factor(term, options_);
  for (const auto& p : fact.primes) {
    if (report_.primes.insert(p).second) report_.first_occurrence.emplace(p, index);
  }
  for (const auto& c : fact.unfactored) report_.unfactored.push_back({index, c});
}

PrimeReport prime_set_up_to(const SeqSpec& spec, std::uint64_t count, const FactorOptions& options) {
  PrimeAccumulator acc(options);
  TermStream stream(spec);
  for (std::uint64_t n = 0; n <= count; ++n) {
    auto [index, term] = stream.next();
    acc.add(index, term);
  }
  return std::move(acc).take();
}

std::vector<std::pair<std::uint64_t, std::size_t>> prime_growth_curve(const SeqSpec& spec,
                                                                      const std::vector<std::uint64_t>& checkpoints,
                                                                      const FactorOptions& options) {
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw PreconditionViolated("checkpoints must be ascending");
  }
  std::vector<std::pair<std::uint64_t, std::size_t>> curve;
  if (checkpoints.empty()) return curve;

  PrimeAccumulator acc(options);
  TermStream stream(spec);
  std::uint64_t next = 0;
  for (std::uint64_t cp : checkpoints) {
    for (; next <= cp; ++next) {
      auto [index, term] = stream.next();
      acc.add(index, term);
    }
    curve.emplace_back(cp, acc.report().primes.size());
  }
  return curve;
}

}  // namespace recgeo
