#include "recgeo/classifier.hpp"

#include <array>

#include "recgeo/errors.hpp"
#include "recgeo/factor.hpp"

namespace recgeo {

namespace {

constexpr std::array<std::pair<NotGeometricReason, std::string_view>, 4> kReasonNames = {{
    {NotGeometricReason::HNotConstant, "HNotConstant"},
    {NotGeometricReason::RatioIdentityFails, "RatioIdentityFails"},
    {NotGeometricReason::NoResetZeroOfF, "NoResetZeroOfF"},
    {NotGeometricReason::FNonConstantProductForm, "FNonConstantProductForm"},
}};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Case g*h == 0: a_n = g(0) prod_{i=1}^{n} f(i).
Classification classify_product_form(const SeqSpec& spec) {
  const Integer start = spec.g().eval_int(0);
  if (start == 0) return ZeroSequence{};
  if (auto q = spec.f().constant_value()) return Geometric{q->get_num(), start};

  // The product starts at i = 1, so root 0 of f is irrelevant.
  for (const auto& root : spec.f().nonneg_integer_roots()) {
    if (root >= 1) return UltimatelyGeometric{0, 0, root};
  }
  return NotUltimatelyGeometric{NotGeometricReason::FNonConstantProductForm};
}

}  // namespace

std::string_view classification_tag(const Classification& c) {
  return std::visit(Overloaded{
                        [](const ZeroSequence&) { return std::string_view("zero_sequence"); },
                        [](const Geometric&) { return std::string_view("geometric"); },
                        [](const UltimatelyGeometric&) { return std::string_view("ultimately_geometric"); },
                        [](const NotUltimatelyGeometric&) { return std::string_view("not_ultimately_geometric"); },
                    },
                    c);
}

std::string_view reason_name(NotGeometricReason reason) {
  for (const auto& [r, name] : kReasonNames) {
    if (r == reason) return name;
  }
  return "unknown";
}

std::optional<NotGeometricReason> parse_reason(std::string_view name) {
  for (const auto& [r, n] : kReasonNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::string describe(const Classification& c) {
  return std::visit(Overloaded{
                        [](const ZeroSequence&) { return std::string("zero_sequence"); },
                        [](const Geometric& g) {
                          return "geometric b=" + to_string(g.ratio) + " c=" + to_string(g.coeff);
                        },
                        [](const UltimatelyGeometric& u) {
                          return "ultimately_geometric b=" + to_string(u.ratio) + " c=" + to_string(u.coeff) +
                                 " n0=" + to_string(u.onset);
                        },
                        [](const NotUltimatelyGeometric& n) {
                          return "not_ultimately_geometric reason=" + std::string(reason_name(n.reason));
                        },
                    },
                    c);
}

std::optional<Integer> candidate_coeff(const Poly& f, const Poly& g, const Integer& ratio) {
  if (ratio == 0) throw PreconditionViolated("candidate coefficient requires b != 0");
  const Poly gap = Poly::constant(Rational(ratio)) - f;
  if (gap.is_zero()) throw PreconditionViolated("candidate coefficient requires f != b");

  // c is a constant, so any coefficient where b - f is nonzero pins it down.
  std::size_t k = 0;
  while (gap.coeff(k) == 0) ++k;
  const Rational c = Rational(ratio) * g.coeff(k) / gap.coeff(k);
  if (!is_integral(c) || c == 0) return std::nullopt;
  if (g.scale(Rational(ratio)) != gap.scale(c)) return std::nullopt;
  return c.get_num();
}

Classification classify(const SeqSpec& spec) {
  if ((spec.g() * spec.h()).is_zero()) return classify_product_form(spec);

  // Any geometric tail has ratio h, which must therefore be a constant.
  const auto h = spec.h().constant_value();
  if (!h) return NotUltimatelyGeometric{NotGeometricReason::HNotConstant};
  const Integer ratio = h->get_num();

  if (spec.f() == Poly::constant(Rational(ratio))) return NotUltimatelyGeometric{NotGeometricReason::RatioIdentityFails};
  const auto coeff = candidate_coeff(spec.f(), spec.g(), ratio);
  if (!coeff) return NotUltimatelyGeometric{NotGeometricReason::RatioIdentityFails};

  // Now a_n - c b^n = (g(0) - c) prod_{i=1}^{n} f(i) with g(0) - c = -c f(0) / b.
  if (spec.f().is_zero()) return Geometric{ratio, *coeff};
  const auto roots = spec.f().nonneg_integer_roots();
  if (roots.empty()) return NotUltimatelyGeometric{NotGeometricReason::NoResetZeroOfF};
  if (roots.front() == 0) return Geometric{ratio, *coeff};
  return UltimatelyGeometric{ratio, *coeff, roots.front()};
}

std::optional<PrimeCertificate> certify_finite_prime_set(const SeqSpec& spec) {
  const Classification verdict = classify(spec);
  Integer ratio, coeff, onset = 0;
  if (const auto* g = std::get_if<Geometric>(&verdict)) {
    ratio = g->ratio;
    coeff = g->coeff;
  } else if (const auto* u = std::get_if<UltimatelyGeometric>(&verdict)) {
    ratio = u->ratio;
    coeff = u->coeff;
    onset = u->onset;
  } else {
    return std::nullopt;
  }
  if (ratio == 0 || coeff == 0) return std::nullopt;

  PrimeCertificate cert;
  FactorOptions unbounded;
  unbounded.rho_budget = 0;
  for (const auto& p : factor(ratio * coeff, unbounded).primes) cert.prime_bound.insert(p);

  if (onset > 0) {
    TermStream stream(spec);
    for (unsigned long n = 0; n < onset.get_ui(); ++n) {
      const Integer a = stream.next().second;
      if (a == 0) {
        cert.caveat_zero_term = true;
        continue;
      }
      for (const auto& p : factor(a, unbounded).primes) cert.prime_bound.insert(p);
    }
  }
  return cert;
}

}  // namespace recgeo
