// Arbitrary-precision number types shared by every module.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace recgeo {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// "p/q" for proper rationals, plain "p" when the denominator is one.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

inline Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

inline Integer factorial(std::uint64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// Rational from numerator/denominator in canonical form.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace recgeo
