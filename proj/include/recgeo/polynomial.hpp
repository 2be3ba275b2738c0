// Exact univariate polynomials over Q.
//
// Coefficients are stored densely in ascending degree order.  The zero
// polynomial is the empty coefficient vector; every other value has a nonzero
// leading coefficient.  Polynomials with integer coefficients (Z[X]) and
// integer-valued polynomials with rational coefficients share this one type.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "recgeo/numeric.hpp"

namespace recgeo {

class Poly {
 public:
  Poly();
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& value);
  static Poly x();
  static Poly monomial(const Rational& coeff, std::size_t power);

  /// prod_{j=0}^{k-1} (x - j); the constant 1 when k == 0.
  static Poly falling_factorial(std::size_t k);
  /// Binomial polynomial C(x, k) = falling_factorial(k) / k!.
  static Poly binomial(std::size_t k);
  /// sum_k coeffs[k] * C(x, k).
  static Poly from_binomial_basis(std::span<const Rational> coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  Rational coeff(std::size_t k) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Index of the leading coefficient; std::nullopt stands for the -infinity
  /// degree of the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// The constant value when degree <= 0.
  std::optional<Rational> constant_value() const;
  bool has_integer_coeffs() const noexcept { return denominator_ == 1; }

  Rational eval(const Integer& n) const;
  /// Exact integer value; throws NonIntegerValue when p(n) is not in Z.
  Integer eval_int(const Integer& n) const;

  /// True iff p(Z) is a subset of Z.  Decided by the forward-difference
  /// criterion: every coefficient of p in the binomial basis is an integer.
  bool is_integer_valued() const;

  /// c_0..c_deg with p = sum c_k C(x, k), where c_k is the k-th forward
  /// difference of p at 0.
  std::vector<Rational> to_binomial_basis() const;

  /// All n >= 0 with p(n) = 0, ascending.  Throws ZeroPolynomial for p == 0.
  std::vector<Integer> nonneg_integer_roots() const;

  Poly scale(const Rational& factor) const;
  Poly pow(std::size_t exponent) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Rational> coeffs_;
  // Least common denominator of coeffs_ and the integer polynomial
  // denominator_ * p, kept for exact integer Horner evaluation.
  Integer denominator_{1};
  std::vector<Integer> scaled_;
};

}  // namespace recgeo
