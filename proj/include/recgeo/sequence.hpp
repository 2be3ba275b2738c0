// Terms of the recurrence
//
//   a_0 = g(0),   a_n = f(n) a_{n-1} + g(n) h(n)^n   (n >= 1)
//
// for integer-valued polynomials f, g, h.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "recgeo/numeric.hpp"
#include "recgeo/polynomial.hpp"

namespace recgeo {

/// The defining triple (f, g, h).  Construction rejects polynomials that are
/// not integer-valued, so every term is an integer.
class SeqSpec {
 public:
  SeqSpec(Poly f, Poly g, Poly h);

  const Poly& f() const noexcept { return f_; }
  const Poly& g() const noexcept { return g_; }
  const Poly& h() const noexcept { return h_; }

  friend bool operator==(const SeqSpec&, const SeqSpec&) = default;

 private:
  Poly f_, g_, h_;
};

/// Sequential single-consumer iterator over (n, a_n).
class TermStream {
 public:
  explicit TermStream(SeqSpec spec);

  /// Returns (n, a_n) and advances.
  std::pair<std::uint64_t, Integer> next();

  std::uint64_t index() const noexcept { return index_; }
  const SeqSpec& spec() const noexcept { return spec_; }

 private:
  SeqSpec spec_;
  std::uint64_t index_ = 0;
  Integer previous_;
};

/// [a_0, ..., a_count].
std::vector<Integer> terms(const SeqSpec& spec, std::uint64_t count);

/// [g(0) prod_{i=1}^{n} f(i)] for n = 0..count.  Requires g*h == 0
/// (PreconditionViolated otherwise).
std::vector<Integer> product_closed_form(const SeqSpec& spec, std::uint64_t count);

/// d_n = a_n - c b^n for n = 0..count.
std::vector<Integer> deviation(const SeqSpec& spec, const Integer& ratio, const Integer& coeff,
                               std::uint64_t count);

struct GeometricFit {
  Integer ratio;
  Integer coeff;
  std::uint64_t onset = 0;

  friend bool operator==(const GeometricFit&, const GeometricFit&) = default;
};

/// Best geometric-tail fit to a finite window of terms, or nullopt.
///
/// A maximal all-zero suffix starting at k yields {0, 0, k}.  Otherwise the
/// smallest onset with at least two nonzero terms after it, a constant
/// integer ratio b, and an integer c = a_onset / b^onset consistent with every
/// later term is returned.  Windows shorter than three terms throw
/// PreconditionViolated.  The fit is evidence only: a finite window cannot
/// certify a tail.
std::optional<GeometricFit> empirical_geometric_tail(std::span<const Integer> window);

}  // namespace recgeo
