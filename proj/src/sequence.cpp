#include "recgeo/sequence.hpp"

#include "recgeo/errors.hpp"
#include "recgeo/parser.hpp"

namespace recgeo {

namespace {

void require_integer_valued(const Poly& p, const char* name) {
  if (!p.is_integer_valued()) {
    throw IntegerValuedViolation(std::string("polynomial ") + name + " = " + print_poly(p) +
                                 " is not integer-valued");
  }
}

Integer index_value(std::uint64_t n) { return Integer(static_cast<unsigned long>(n)); }

}  // namespace

SeqSpec::SeqSpec(Poly f, Poly g, Poly h) : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
  require_integer_valued(f_, "f");
  require_integer_valued(g_, "g");
  require_integer_valued(h_, "h");
}

TermStream::TermStream(SeqSpec spec) : spec_(std::move(spec)) {}

std::pair<std::uint64_t, Integer> TermStream::next() {
  const std::uint64_t n = index_++;
  if (n == 0) {
    previous_ = spec_.g().eval_int(0);
    return {n, previous_};
  }
  const Integer at = index_value(n);
  Integer forced = spec_.g().eval_int(at);
  if (forced != 0) forced *= ipow(spec_.h().eval_int(at), n);
  Integer next = spec_.f().eval_int(at) * previous_;
  next += forced;
  previous_ = next;
  return {n, std::move(next)};
}

std::vector<Integer> terms(const SeqSpec& spec, std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count + 1);
  TermStream stream(spec);
  for (std::uint64_t n = 0; n <= count; ++n) out.push_back(stream.next().second);
  return out;
}

std::vector<Integer> product_closed_form(const SeqSpec& spec, std::uint64_t count) {
  if (!(spec.g() * spec.h()).is_zero()) {
    throw PreconditionViolated("product closed form requires g*h == 0");
  }
  std::vector<Integer> out;
  out.reserve(count + 1);
  Integer acc = spec.g().eval_int(0);
  out.push_back(acc);
  for (std::uint64_t i = 1; i <= count; ++i) {
    acc *= spec.f().eval_int(index_value(i));
    out.push_back(acc);
  }
  return out;
}

std::vector<Integer> deviation(const SeqSpec& spec, const Integer& ratio, const Integer& coeff,
                               std::uint64_t count) {
  std::vector<Integer> out = terms(spec, count);
  Integer geometric = coeff;
  for (auto& a : out) {
    a -= geometric;
    geometric *= ratio;
  }
  return out;
}

std::optional<GeometricFit> empirical_geometric_tail(std::span<const Integer> window) {
  if (window.size() < 3) throw PreconditionViolated("geometric tail fit needs at least three terms");

  const std::size_t len = window.size();
  std::size_t zero_start = len;
  while (zero_start > 0 && window[zero_start - 1] == 0) --zero_start;
  if (zero_start < len) return GeometricFit{0, 0, zero_start};

  // All terms from `first_nonzero` on are nonzero.
  std::size_t first_nonzero = len;
  while (first_nonzero > 0 && window[first_nonzero - 1] != 0) --first_nonzero;

  // Longest constant-integer-ratio suffix: walk back while the ratio holds.
  const Integer& last = window[len - 1];
  const Integer& before = window[len - 2];
  if (!mpz_divisible_p(last.get_mpz_t(), before.get_mpz_t())) return std::nullopt;
  Integer ratio;
  mpz_divexact(ratio.get_mpz_t(), last.get_mpz_t(), before.get_mpz_t());

  std::size_t onset = len - 2;
  while (onset > first_nonzero && window[onset - 1] * ratio == window[onset]) --onset;

  // The smallest admissible onset is the first one from which c is integral.
  for (std::size_t start = onset; start + 1 < len; ++start) {
    const Integer scale = ipow(ratio, start);
    if (scale == 0) continue;
    if (mpz_divisible_p(window[start].get_mpz_t(), scale.get_mpz_t())) {
      Integer coeff;
      mpz_divexact(coeff.get_mpz_t(), window[start].get_mpz_t(), scale.get_mpz_t());
      return GeometricFit{ratio, coeff, start};
    }
  }
  return std::nullopt;
}

}  // namespace recgeo
