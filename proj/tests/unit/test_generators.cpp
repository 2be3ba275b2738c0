#include "doctest.h"
#include "oracles.hpp"
#include "recgeo/errors.hpp"
#include "recgeo/generators.hpp"

using namespace recgeo;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Integer> prefix(const FamilyInstance& inst, unsigned long count) {
  std::vector<Integer> out;
  for (unsigned long n = 0; n <= count; ++n) out.push_back(inst.predicted_term(n));
  return out;
}

// The closed form and the spec must both agree with the oracle recurrence.
void check_instance(const FamilyInstance& inst, unsigned long count) {
  const auto oracle_terms = oracle::recurrence(inst.spec.f(), inst.spec.g(), inst.spec.h(), count);
  REQUIRE(prefix(inst, count) == oracle_terms);
  REQUIRE(terms(inst.spec, count) == oracle_terms);
  if (inst.claimed) REQUIRE(classify(inst.spec) == *inst.claimed);
}

}  // namespace

TEST_CASE("family examples") {
  CHECK(terms(example1(2, 3).spec, 3) == ints({-3, -6, 12, 24}));
  CHECK(terms(example1(-1, 1).spec, 5) == ints({-1, 1, 1, -1, 1, -1}));
  CHECK(terms(example1(1, 1).spec, 4) == ints({-1, -1, 1, 1, 1}));

  CHECK(terms(example2(1, 1, 1).spec, 3) == ints({-1, 1, 1, 1}));
  CHECK(terms(example2(1, 1, 2).spec, 3) == ints({-2, -12, 8, 16}));
  CHECK(terms(example3(1, 1, 2, 1).spec, 3) == ints({1, 4, 8, 16}));
  CHECK(terms(example3(1, 1, 2, 2).spec, 1) == ints({2, 12}));
  CHECK(terms(example3(1, 1, 1, 1).spec, 2) == ints({0, 1, 1}));

  CHECK(terms(remark_family1(1, 1, 2).spec, 3) == ints({-1, -3, 1, 1}));
  CHECK(terms(remark_family1(2, 3, 1).spec, 3) == ints({-3, 6, 12, 24}));
  CHECK(terms(remark_family1(1, 1, 3).spec, 4) == ints({-1, -3, -7, 1, 1}));
  CHECK(terms(remark_family2(1, 1, 2, 1).spec, 3) == ints({1, 4, 8, 16}));
  CHECK(terms(remark_family2(1, 1, 3, 2).spec, 2) == ints({2, 8, 27}));

  CHECK(classify(example2(1, 1, 1).spec) == Classification{UltimatelyGeometric{1, 1, 1}});
  CHECK(classify(example2(1, 1, 3).spec) == Classification{UltimatelyGeometric{6, 6, 3}});

  CHECK_THROWS_AS(example2(1, 1, 0), PreconditionViolated);
  CHECK_THROWS_AS(remark_family1(1, 1, 0), PreconditionViolated);
}

TEST_CASE("catalog examples") {
  CHECK(terms(factorials().spec, 4) == ints({1, 1, 2, 6, 24}));
  CHECK(terms(derangements().spec, 6) == ints({1, 0, 1, 2, 9, 44, 265}));
  CHECK(terms(double_factorials(1).spec, 3) == ints({1, 3, 15, 105}));
  CHECK(terms(double_factorials(0).spec, 3) == ints({1, 2, 8, 48}));
  CHECK_THROWS_AS(double_factorials(2), PreconditionViolated);
  CHECK(catalog().size() == 6);
  CHECK(families().size() == 11);
  CHECK(families().at("example3").params == std::vector<std::string>{"bp", "cp", "d", "n0"});
  CHECK_THROWS_AS(families().at("example2").make({1, 1, -1}), PreconditionViolated);
}

TEST_CASE("property: closed forms and claims over the parameter grid") {
  std::vector<long> nonzero{-3, -2, -1, 1, 2, 3};
  for (long b : nonzero) {
    for (long c : nonzero) {
      const auto e1 = example1(b, c);
      check_instance(e1, 17);
      REQUIRE_FALSE(std::holds_alternative<Geometric>(classify(e1.spec)));
      for (unsigned long n0 = 1; n0 <= 4; ++n0) {
        check_instance(example2(b, c, n0), n0 + 15);
        check_instance(remark_family1(b, c, n0), n0 + 15);
        for (long d = -3; d <= 3; ++d) {
          check_instance(example3(b, c, d, n0), n0 + 15);
          check_instance(remark_family2(b, c, d, n0), n0 + 15);
        }
      }
    }
  }
}

TEST_CASE("property: remark families are integer-valued with rational coefficients") {
  for (unsigned long n0 = 2; n0 <= 6; ++n0) {
    const auto r2 = remark_family2(1, 1, 2, n0);
    std::vector<const Poly*> polys{&r2.spec.f(), &r2.spec.g()};
    // 2 C(x, 2) has integer coefficients, so remark1 needs n0 >= 3.
    const auto r1 = remark_family1(1, 1, n0);
    if (n0 >= 3) polys.insert(polys.end(), {&r1.spec.f(), &r1.spec.g()});
    for (const Poly* p : polys) {
      CHECK(p->is_integer_valued());
      CHECK_FALSE(p->has_integer_coeffs());
    }
  }
}

TEST_CASE("property: catalog closed forms") {
  for (long c = -3; c <= 3; ++c) {
    check_instance(arithmetic_progression(c), 15);
    for (long q = -3; q <= 3; ++q) {
      check_instance(geometric_progression(q, c), 15);
      check_instance(geometric_partial_sums(q, c), 15);
    }
  }
  check_instance(factorials(), 15);
  check_instance(double_factorials(0), 15);
  check_instance(double_factorials(1), 15);
  check_instance(derangements(), 15);

  // Independent derangement count by enumeration.
  const auto d = derangements();
  for (unsigned n = 0; n <= 9; ++n) CHECK(d.predicted_term(n) == Integer(static_cast<unsigned long>(oracle::count_derangements(n))));
}
