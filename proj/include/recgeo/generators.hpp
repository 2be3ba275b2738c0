// Constructors for named members of the recurrence class: the classical
// special cases (factorials, derangements, progressions) and the families
// that are ultimately geometric without being geometric.
//
// Each instance carries an independent closed form for its terms and, when
// the family's side conditions hold, the classification it is known to have.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recgeo/classifier.hpp"
#include "recgeo/sequence.hpp"

namespace recgeo {

struct FamilyInstance {
  std::string name;
  SeqSpec spec;
  std::function<Integer(std::uint64_t)> predicted_term;
  std::optional<Classification> claimed;
};

/// f = b(2 - x), g = c(x - 1), h = b.  Ultimately geometric from n = 2 when bc != 0.
FamilyInstance example1(const Integer& b, const Integer& c);

/// f = 2b'n0! - 2b' ff(x, n0), g = -c'n0! + 2c' ff(x, n0), h = b'n0!.
/// Tail ratio b'n0!, coefficient c'n0!, onset n0.
FamilyInstance example2(const Integer& bp, const Integer& cp, std::uint64_t n0);

/// f = b'n0! - b' ff(x, n0), g = c'(d - 1)n0! + c' ff(x, n0), h = b'd n0!.
/// Tail ratio b'd n0!, coefficient c'd n0!, onset n0.
FamilyInstance example3(const Integer& bp, const Integer& cp, const Integer& d, std::uint64_t n0);

/// Integer-valued analogue of example2: f = 2b - 2b C(x, n0),
/// g = -c + 2c C(x, n0), h = b.
FamilyInstance remark_family1(const Integer& b, const Integer& c, std::uint64_t n0);

/// Integer-valued analogue of example3: f = b' - b' C(x, n0),
/// g = c'(d - 1) + c' C(x, n0), h = b'd.
FamilyInstance remark_family2(const Integer& bp, const Integer& cp, const Integer& d, std::uint64_t n0);

FamilyInstance arithmetic_progression(const Integer& c);
FamilyInstance geometric_progression(const Integer& q, const Integer& c);
FamilyInstance geometric_partial_sums(const Integer& q, const Integer& c);
FamilyInstance factorials();
/// (2n + l)!! for l in {0, 1}.
FamilyInstance double_factorials(unsigned l);
FamilyInstance derangements();

struct FamilyConstructor {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
  // Arguments in `params` order.  Throws PreconditionViolated on bad values.
  std::function<FamilyInstance(const std::vector<Integer>&)> make;
};

/// The classical special cases, keyed by name ("arithmetic", "geometric",
/// "geometric-sums", "factorial", "double-factorial", "derangement").
const std::map<std::string, FamilyConstructor>& catalog();

/// catalog() plus "example1", "example2", "example3", "remark1", "remark2".
const std::map<std::string, FamilyConstructor>& families();

}  // namespace recgeo
