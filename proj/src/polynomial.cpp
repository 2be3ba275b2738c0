#include "recgeo/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "recgeo/errors.hpp"
#include "recgeo/factor.hpp"

namespace recgeo {

Poly::Poly() = default;

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

void Poly::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();

  denominator_ = 1;
  for (const auto& c : coeffs_) mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), c.get_den_mpz_t());
  scaled_.clear();
  scaled_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) scaled_.push_back(c.get_num() * (denominator_ / c.get_den()));
}

Poly Poly::constant(const Rational& value) { return Poly(std::vector<Rational>{value}); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& coeff, std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = coeff;
  return Poly(std::move(c));
}

Poly Poly::falling_factorial(std::size_t k) {
  Poly out = constant(1);
  for (std::size_t j = 0; j < k; ++j) out = out * Poly({Rational(-static_cast<long>(j)), Rational(1)});
  return out;
}

Poly Poly::binomial(std::size_t k) {
  return falling_factorial(k).scale(Rational(Integer(1), factorial(k)));
}

Poly Poly::from_binomial_basis(std::span<const Rational> coeffs) {
  Poly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out = out + binomial(k).scale(coeffs[k]);
  }
  return out;
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

std::optional<std::size_t> Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::optional<Rational> Poly::constant_value() const {
  if (coeffs_.size() > 1) return std::nullopt;
  return coeff(0);
}

Rational Poly::eval(const Integer& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Integer Poly::eval_int(const Integer& n) const {
  Integer acc = 0;
  for (auto it = scaled_.rbegin(); it != scaled_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  if (denominator_ == 1) return acc;
  if (!mpz_divisible_p(acc.get_mpz_t(), denominator_.get_mpz_t())) {
    throw NonIntegerValue("polynomial value at " + to_string(n) + " is not an integer");
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), acc.get_mpz_t(), denominator_.get_mpz_t());
  return q;
}

std::vector<Rational> Poly::to_binomial_basis() const {
  if (is_zero()) return {};
  const std::size_t deg = *degree();
  std::vector<Rational> row;
  row.reserve(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) row.push_back(eval(Integer(static_cast<unsigned long>(i))));

  // Successive difference tables; the head of each one is the next coefficient.
  std::vector<Rational> out;
  out.reserve(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    out.push_back(row[0]);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

bool Poly::is_integer_valued() const {
  if (has_integer_coeffs()) return true;
  const auto basis = to_binomial_basis();
  return std::all_of(basis.begin(), basis.end(), [](const Rational& c) { return is_integral(c); });
}

namespace {

void collect_divisors(const std::vector<std::pair<Integer, unsigned>>& powers, std::size_t idx,
                      const Integer& current, const Integer& limit, std::vector<Integer>& out) {
  if (current > limit) return;
  if (idx == powers.size()) {
    out.push_back(current);
    return;
  }
  Integer d = current;
  for (unsigned e = 0; e <= powers[idx].second && d <= limit; ++e) {
    collect_divisors(powers, idx + 1, d, limit, out);
    d *= powers[idx].first;
  }
}

// Positive divisors of `n` not exceeding `limit`.
std::vector<Integer> divisors_up_to(const Integer& n, const Integer& limit) {
  std::vector<Integer> out;
  const Integer cap = std::min(n, limit);
  if (cap <= (1u << 20)) {
    for (unsigned long d = 1; d <= cap.get_ui(); ++d) {
      if (mpz_divisible_ui_p(n.get_mpz_t(), d)) out.emplace_back(d);
    }
    return out;
  }
  FactorOptions unbounded;
  unbounded.rho_budget = 0;
  const auto fact = factor(n, unbounded);
  std::vector<std::pair<Integer, unsigned>> powers;
  for (const auto& p : fact.primes) {
    if (!powers.empty() && powers.back().first == p) {
      ++powers.back().second;
    } else {
      powers.emplace_back(p, 1u);
    }
  }
  collect_divisors(powers, 0, Integer(1), limit, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Integer> Poly::nonneg_integer_roots() const {
  if (is_zero()) throw ZeroPolynomial("every integer is a root of the zero polynomial");

  std::vector<Integer> roots;
  std::size_t low = 0;
  while (scaled_[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);

  // Remaining factor q(x) = scaled_[low] + scaled_[low+1] x + ...
  const std::size_t top = scaled_.size() - 1;
  if (top == low) return roots;

  const Integer trailing = abs(scaled_[low]);
  const Integer lead = abs(scaled_[top]);
  // Cauchy bound: every root r satisfies |r| < 1 + max |a_i / a_top|.
  Integer bound = 0;
  for (std::size_t i = low; i < top; ++i) {
    Integer q = abs(scaled_[i]);
    mpz_cdiv_q(q.get_mpz_t(), q.get_mpz_t(), lead.get_mpz_t());
    bound = std::max(bound, q);
  }
  bound += 1;

  for (const auto& d : divisors_up_to(trailing, bound)) {
    Integer acc = 0;
    for (std::size_t i = top + 1; i-- > low;) {
      acc *= d;
      acc += scaled_[i];
    }
    if (acc == 0) roots.push_back(d);
  }
  return roots;
}

Poly Poly::scale(const Rational& factor) const {
  if (factor == 0) return Poly();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= factor;
  return Poly(std::move(c));
}

Poly Poly::pow(std::size_t exponent) const {
  Poly out = constant(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) out = out * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return out;
}

Poly Poly::operator-() const { return scale(-1); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

}  // namespace recgeo
