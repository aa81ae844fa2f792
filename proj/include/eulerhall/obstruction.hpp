#pragma once

// Euler class, Hall's condition and matchings, computed independently and
// checked against each other, plus the subordination verdict for the trivial
// line theta against a finite family of line bundles.

#include <optional>
#include <string_view>

#include "eulerhall/bundles.hpp"
#include "eulerhall/matching.hpp"

namespace eulerhall {

struct EquivalenceReport {
  RingElement euler_class;
  bool euler_nonzero = false;
  bool hall = false;
  MatchingResult matching;
  std::optional<std::size_t> euler_class_degree;
  bool agree = false;
};

/// Throws InvalidInput when trivial_lines > 0 and InvariantViolation when the
/// three conditions disagree.
EquivalenceReport equivalence_report(const BundleFamily& family);

/// Checks coeff(e(f), S) = sdr_count(f, S) for every m-subset S of the
/// support, and that no monomial of e(f) leaves the support.
bool verify_coefficient_identity(const BundleFamily& family);

enum class VerdictTag {
  /// Hall holds: the Euler class is nonzero, so theta is not a summand.
  NotSubordinate,
  /// A singleton {n} occurs twice and zeta_n + zeta_n splits off theta.
  Subordinate,
  Undecided,
};

std::string_view to_string(VerdictTag tag);

struct Verdict {
  VerdictTag tag = VerdictTag::Undecided;
  std::optional<Atom> witness;             // Subordinate only
  MatchingResult matching;                 // saturated iff NotSubordinate
  std::optional<HallViolation> violation;  // present iff Hall fails
};

Verdict subordination_verdict(const BundleFamily& family);

/// Verdict for the family summed with itself.
Verdict doubled_verdict(const BundleFamily& family);

}  // namespace eulerhall
