// Text form of polynomials.
//
//   expr     := ['-'] term (('+' | '-') ['-'] term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | 'x' | '(' expr ')' | 'ff(' expr ',' natural ')'
//             | 'C(' expr ',' natural ')'
//   rational := integer ('/' positive-integer)?
//
// ff(e, k) is the falling factorial e(e-1)...(e-k+1) and C(e, k) is
// ff(e, k) / k!.  Whitespace is ignored, multiplication is explicit, and
// U+2212 is accepted as a minus sign.  Exponents and the natural argument of
// ff/C are limited to kMaxExponent.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "recgeo/polynomial.hpp"

namespace recgeo {

inline constexpr std::size_t kMaxExponent = 1024;

/// Throws SyntaxError (with byte offset and expected tokens) or DivisionByZero.
Poly parse_poly(std::string_view text);

/// Canonical text: descending powers, explicit '*', rationals as p/q.
/// parse_poly(print_poly(p)) == p.
std::string print_poly(const Poly& p);

}  // namespace recgeo
