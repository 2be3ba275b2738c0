// Symbolic decision procedure for (ultimately) geometric members of the
// recurrence class.  Nothing here computes sequence terms except
// certify_finite_prime_set, which factors the finite non-geometric prefix.

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "recgeo/numeric.hpp"
#include "recgeo/sequence.hpp"

namespace recgeo {

/// Every term is zero.
struct ZeroSequence {
  friend bool operator==(const ZeroSequence&, const ZeroSequence&) = default;
};

/// a_n = coeff * ratio^n for every n >= 0.
struct Geometric {
  Integer ratio;
  Integer coeff;
  friend bool operator==(const Geometric&, const Geometric&) = default;
};

/// a_n = coeff * ratio^n exactly when n >= onset, with onset >= 1.
struct UltimatelyGeometric {
  Integer ratio;
  Integer coeff;
  Integer onset;
  friend bool operator==(const UltimatelyGeometric&, const UltimatelyGeometric&) = default;
};

enum class NotGeometricReason {
  HNotConstant,
  RatioIdentityFails,
  NoResetZeroOfF,
  FNonConstantProductForm,
};

struct NotUltimatelyGeometric {
  NotGeometricReason reason;
  friend bool operator==(const NotUltimatelyGeometric&, const NotUltimatelyGeometric&) = default;
};

using Classification = std::variant<ZeroSequence, Geometric, UltimatelyGeometric, NotUltimatelyGeometric>;

/// "zero_sequence", "geometric", "ultimately_geometric" or
/// "not_ultimately_geometric".
std::string_view classification_tag(const Classification& c);
std::string_view reason_name(NotGeometricReason reason);
std::optional<NotGeometricReason> parse_reason(std::string_view name);
std::string describe(const Classification& c);

Classification classify(const SeqSpec& spec);

/// The integer c != 0 with b*g == c*(b - f), if any.  Requires b != 0 and
/// f != b (PreconditionViolated otherwise).
std::optional<Integer> candidate_coeff(const Poly& f, const Poly& g, const Integer& ratio);

struct PrimeCertificate {
  std::set<Integer> prime_bound;
  // Some prefix term is 0, so every prime divides a term under the literal
  // reading of the prime-divisor set.
  bool caveat_zero_term = false;
};

/// Finite prime set containing every prime divisor of every nonzero term.
/// Present only for Geometric/UltimatelyGeometric verdicts with b, c != 0.
std::optional<PrimeCertificate> certify_finite_prime_set(const SeqSpec& spec);

}  // namespace recgeo
