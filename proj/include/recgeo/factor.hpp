// Integer factorization: trial division, Pollard rho (Brent), and
// Miller-Rabin / Baillie-PSW primality testing.

#pragma once

#include <cstdint>
#include <vector>

#include "recgeo/numeric.hpp"

namespace recgeo {

struct FactorOptions {
  // Primes below this bound are removed by trial division.
  std::uint32_t trial_bound = 10000;
  // Pollard-rho iterations allowed per composite cofactor above 2^64.
  // Zero disables the cap.  Cofactors below 2^64 are always fully split.
  std::uint64_t rho_budget = 1u << 16;
};

struct Factorization {
  // Prime factors of |n| with multiplicity, ascending.
  std::vector<Integer> primes;
  // Composite cofactors left when the rho budget ran out, ascending.
  std::vector<Integer> unfactored;

  bool complete() const noexcept { return unfactored.empty(); }
};

/// Deterministic Miller-Rabin for n < 2^64 (first twelve prime bases).
bool is_prime_u64(std::uint64_t n);

/// Strong base-2 Miller-Rabin plus strong Lucas (Selfridge parameters).
/// Exact below 2^64; a Baillie-PSW probable-prime test above.
bool is_prime(const Integer& n);

bool is_strong_probable_prime(const Integer& n, const Integer& base);
bool is_strong_lucas_probable_prime(const Integer& n);

/// Factorization of |n|.  Throws ZeroInput for n == 0; factor(1) is empty.
Factorization factor(const Integer& n, const FactorOptions& options = {});

/// Primes below `bound`, ascending.
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound);

}  // namespace recgeo
