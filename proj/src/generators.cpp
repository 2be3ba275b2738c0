#include "recgeo/generators.hpp"

#include "recgeo/errors.hpp"

namespace recgeo {

namespace {

Poly constant(const Integer& v) { return Poly::constant(Rational(v)); }

Poly linear(const Integer& c0, const Integer& c1) { return Poly({Rational(c0), Rational(c1)}); }

Integer pow_index(const Integer& base, std::uint64_t n) { return ipow(base, n); }

void require_onset(std::uint64_t n0) {
  if (n0 < 1) throw PreconditionViolated("n0 must be a positive integer");
}

// Shared tail/prefix shape of the onset families: prefix(n) for n < n0 and
// tail(n) afterwards.
std::function<Integer(std::uint64_t)> piecewise(std::uint64_t n0, std::function<Integer(std::uint64_t)> prefix,
                                                std::function<Integer(std::uint64_t)> tail) {
  return [=](std::uint64_t n) { return n < n0 ? prefix(n) : tail(n); };
}

}  // namespace

FamilyInstance example1(const Integer& b, const Integer& c) {
  SeqSpec spec(linear(2 * b, -b), linear(-c, c), constant(b));
  auto predicted = [b, c](std::uint64_t n) -> Integer {
    if (n == 0) return -c;
    if (n == 1) return -c * b;
    return c * pow_index(b, n);
  };
  std::optional<Classification> claimed;
  if (b != 0 && c != 0) claimed = UltimatelyGeometric{b, c, 2};
  return {"example1", std::move(spec), predicted, claimed};
}

FamilyInstance example2(const Integer& bp, const Integer& cp, std::uint64_t n0) {
  require_onset(n0);
  const Integer fact = factorial(n0);
  const Poly ff = Poly::falling_factorial(n0);
  SeqSpec spec(constant(2 * bp * fact) - ff.scale(Rational(2 * bp)),
               constant(-cp * fact) + ff.scale(Rational(2 * cp)), constant(bp * fact));
  auto prefix = [=](std::uint64_t n) -> Integer {
    return (1 - pow_index(2, n + 1)) * cp * pow_index(bp, n) * pow_index(fact, n + 1);
  };
  auto tail = [=](std::uint64_t n) -> Integer { return cp * pow_index(bp, n) * pow_index(fact, n + 1); };
  std::optional<Classification> claimed;
  if (bp != 0 && cp != 0) claimed = UltimatelyGeometric{bp * fact, cp * fact, Integer(n0)};
  return {"example2", std::move(spec), piecewise(n0, prefix, tail), claimed};
}

FamilyInstance example3(const Integer& bp, const Integer& cp, const Integer& d, std::uint64_t n0) {
  require_onset(n0);
  const Integer fact = factorial(n0);
  const Poly ff = Poly::falling_factorial(n0);
  SeqSpec spec(constant(bp * fact) - ff.scale(Rational(bp)), constant(cp * (d - 1) * fact) + ff.scale(Rational(cp)),
               constant(bp * d * fact));
  auto prefix = [=](std::uint64_t n) -> Integer {
    return (pow_index(d, n + 1) - 1) * cp * pow_index(bp, n) * pow_index(fact, n + 1);
  };
  auto tail = [=](std::uint64_t n) -> Integer {
    return cp * pow_index(bp, n) * pow_index(d, n + 1) * pow_index(fact, n + 1);
  };
  std::optional<Classification> claimed;
  if (bp != 0 && cp != 0) claimed = UltimatelyGeometric{bp * d * fact, cp * d * fact, Integer(n0)};
  return {"example3", std::move(spec), piecewise(n0, prefix, tail), claimed};
}

FamilyInstance remark_family1(const Integer& b, const Integer& c, std::uint64_t n0) {
  require_onset(n0);
  const Poly binom = Poly::binomial(n0);
  if (!binom.is_integer_valued()) throw IntegerValuedViolation("C(x, n0) must be integer-valued");
  SeqSpec spec(constant(2 * b) - binom.scale(Rational(2 * b)), constant(-c) + binom.scale(Rational(2 * c)),
               constant(b));
  auto prefix = [=](std::uint64_t n) -> Integer { return (1 - pow_index(2, n + 1)) * c * pow_index(b, n); };
  auto tail = [=](std::uint64_t n) -> Integer { return c * pow_index(b, n); };
  std::optional<Classification> claimed;
  if (b != 0 && c != 0) claimed = UltimatelyGeometric{b, c, Integer(n0)};
  return {"remark1", std::move(spec), piecewise(n0, prefix, tail), claimed};
}

FamilyInstance remark_family2(const Integer& bp, const Integer& cp, const Integer& d, std::uint64_t n0) {
  require_onset(n0);
  const Poly binom = Poly::binomial(n0);
  if (!binom.is_integer_valued()) throw IntegerValuedViolation("C(x, n0) must be integer-valued");
  SeqSpec spec(constant(bp) - binom.scale(Rational(bp)), constant(cp * (d - 1)) + binom.scale(Rational(cp)),
               constant(bp * d));
  const Integer ratio = bp * d;
  const Integer coeff = cp * d;
  auto prefix = [=](std::uint64_t n) -> Integer { return (pow_index(d, n + 1) - 1) * cp * pow_index(bp, n); };
  auto tail = [=](std::uint64_t n) -> Integer { return coeff * pow_index(ratio, n); };
  std::optional<Classification> claimed;
  if (bp != 0 && cp != 0) claimed = UltimatelyGeometric{ratio, coeff, Integer(n0)};
  return {"remark2", std::move(spec), piecewise(n0, prefix, tail), claimed};
}

FamilyInstance arithmetic_progression(const Integer& c) {
  SeqSpec spec(constant(1), constant(c), constant(1));
  std::optional<Classification> claimed;
  if (c == 0) {
    claimed = ZeroSequence{};
  } else {
    claimed = NotUltimatelyGeometric{NotGeometricReason::RatioIdentityFails};
  }
  return {"arithmetic", std::move(spec), [c](std::uint64_t n) -> Integer { return c * (n + 1); }, claimed};
}

FamilyInstance geometric_progression(const Integer& q, const Integer& c) {
  SeqSpec spec(constant(q), constant(c), Poly());
  std::optional<Classification> claimed;
  if (c == 0) {
    claimed = ZeroSequence{};
  } else {
    claimed = Geometric{q, c};
  }
  return {"geometric", std::move(spec), [q, c](std::uint64_t n) -> Integer { return c * pow_index(q, n); }, claimed};
}

FamilyInstance geometric_partial_sums(const Integer& q, const Integer& c) {
  SeqSpec spec(constant(1), constant(c), constant(q));
  auto predicted = [q, c](std::uint64_t n) -> Integer {
    Integer sum = 0;
    for (std::uint64_t j = 0; j <= n; ++j) sum += c * pow_index(q, j);
    return sum;
  };
  std::optional<Classification> claimed;
  if (c == 0) {
    claimed = ZeroSequence{};
  } else if (q == 0) {
    claimed = Geometric{1, c};
  } else if (q == 1 || (q * c) % (q - 1) != 0) {
    claimed = NotUltimatelyGeometric{NotGeometricReason::RatioIdentityFails};
  } else {
    // The tail identity holds with c q / (q - 1) but f = 1 never vanishes.
    claimed = NotUltimatelyGeometric{NotGeometricReason::NoResetZeroOfF};
  }
  return {"geometric-sums", std::move(spec), predicted, claimed};
}

FamilyInstance factorials() {
  SeqSpec spec(Poly::x(), constant(1), Poly());
  return {"factorial", std::move(spec), [](std::uint64_t n) { return factorial(n); },
          NotUltimatelyGeometric{NotGeometricReason::FNonConstantProductForm}};
}

FamilyInstance double_factorials(unsigned l) {
  if (l > 1) throw PreconditionViolated("double factorial offset l must be 0 or 1");
  SeqSpec spec(linear(l, 2), constant(1), Poly());
  auto predicted = [l](std::uint64_t n) -> Integer {
    Integer out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(2 * n + l));
    return out;
  };
  return {"double-factorial", std::move(spec), predicted,
          NotUltimatelyGeometric{NotGeometricReason::FNonConstantProductForm}};
}

FamilyInstance derangements() {
  SeqSpec spec(Poly::x(), constant(1), constant(-1));
  // Inclusion-exclusion: D_n = sum_k (-1)^k n! / k!.
  auto predicted = [](std::uint64_t n) -> Integer {
    Integer sum = 0;
    Integer tail = 1;  // n! / k! for k running down from n
    for (std::uint64_t k = n + 1; k-- > 0;) {
      sum += (k % 2 == 0) ? tail : Integer(-tail);
      tail *= static_cast<unsigned long>(k == 0 ? 1 : k);
    }
    return sum;
  };
  return {"derangement", std::move(spec), predicted,
          NotUltimatelyGeometric{NotGeometricReason::RatioIdentityFails}};
}

namespace {

std::uint64_t small_param(const Integer& v, const char* name, std::uint64_t max) {
  if (v < 0 || v > max) {
    throw PreconditionViolated(std::string(name) + " must lie in [0, " + std::to_string(max) + "]");
  }
  return v.get_ui();
}

constexpr std::uint64_t kMaxOnset = 170;

std::map<std::string, FamilyConstructor> build_catalog() {
  std::map<std::string, FamilyConstructor> out;
  auto put = [&](FamilyConstructor c) { out.emplace(c.name, std::move(c)); };
  put({"arithmetic", {"c"}, "f = 1, g = c, h = 1: a_n = c(n+1)",
       [](const std::vector<Integer>& a) { return arithmetic_progression(a[0]); }});
  put({"geometric", {"q", "c"}, "f = q, g = c, h = 0: a_n = c q^n",
       [](const std::vector<Integer>& a) { return geometric_progression(a[0], a[1]); }});
  put({"geometric-sums", {"q", "c"}, "f = 1, g = c, h = q: a_n = sum_{j<=n} c q^j",
       [](const std::vector<Integer>& a) { return geometric_partial_sums(a[0], a[1]); }});
  put({"factorial", {}, "f = x, g = 1, h = 0: a_n = n!", [](const std::vector<Integer>&) { return factorials(); }});
  put({"double-factorial", {"l"}, "f = 2x + l, g = 1, h = 0: a_n = (2n+l)!!",
       [](const std::vector<Integer>& a) { return double_factorials(static_cast<unsigned>(small_param(a[0], "l", 1))); }});
  put({"derangement", {}, "f = x, g = 1, h = -1: derangement numbers",
       [](const std::vector<Integer>&) { return derangements(); }});
  return out;
}

std::map<std::string, FamilyConstructor> build_families() {
  auto out = build_catalog();
  auto put = [&](FamilyConstructor c) { out.emplace(c.name, std::move(c)); };
  put({"example1", {"b", "c"}, "f = b(2 - x), g = c(x - 1), h = b",
       [](const std::vector<Integer>& a) { return example1(a[0], a[1]); }});
  put({"example2", {"bp", "cp", "n0"}, "f = 2b'n0! - 2b' ff(x,n0), g = -c'n0! + 2c' ff(x,n0), h = b'n0!",
       [](const std::vector<Integer>& a) { return example2(a[0], a[1], small_param(a[2], "n0", kMaxOnset)); }});
  put({"example3", {"bp", "cp", "d", "n0"},
       "f = b'n0! - b' ff(x,n0), g = c'(d-1)n0! + c' ff(x,n0), h = b'd n0!",
       [](const std::vector<Integer>& a) { return example3(a[0], a[1], a[2], small_param(a[3], "n0", kMaxOnset)); }});
  put({"remark1", {"b", "c", "n0"}, "f = 2b - 2b C(x,n0), g = -c + 2c C(x,n0), h = b",
       [](const std::vector<Integer>& a) { return remark_family1(a[0], a[1], small_param(a[2], "n0", kMaxOnset)); }});
  put({"remark2", {"bp", "cp", "d", "n0"}, "f = b' - b' C(x,n0), g = c'(d-1) + c' C(x,n0), h = b'd",
       [](const std::vector<Integer>& a) {
         return remark_family2(a[0], a[1], a[2], small_param(a[3], "n0", kMaxOnset));
       }});
  return out;
}

}  // namespace

const std::map<std::string, FamilyConstructor>& catalog() {
  static const auto table = build_catalog();
  return table;
}

const std::map<std::string, FamilyConstructor>& families() {
  static const auto table = build_families();
  return table;
}

}  // namespace recgeo
