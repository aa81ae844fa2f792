#pragma once

// Hall's condition, systems of distinct representatives and their counts for
// the index sets of a BundleFamily. trivial_lines is ignored throughout.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eulerhall/bundles.hpp"

namespace eulerhall {

inline constexpr std::size_t kHallExhaustiveCap = 16;
inline constexpr std::size_t kPermanentCap = 20;
inline constexpr std::size_t kNaivePermanentCap = 8;

struct MatchingResult {
  /// t_j in I_j, pairwise distinct; present iff every set is matched.
  std::optional<std::vector<Atom>> assignment;

  [[nodiscard]] bool saturated() const noexcept { return assignment.has_value(); }
  friend bool operator==(const MatchingResult&, const MatchingResult&) = default;
};

/// A nonempty subfamily F (1-based indices, ascending) whose union has fewer
/// than |F| atoms.
struct HallViolation {
  std::vector<std::size_t> sets;
  friend bool operator==(const HallViolation&, const HallViolation&) = default;
};

/// Checks all 2^m - 1 subfamilies. Throws CapExceeded above `cap` sets.
bool hall_exhaustive(const BundleFamily& family, std::size_t cap = kHallExhaustiveCap);

/// Hopcroft-Karp over (set index) x (atom). Sets are scanned in order and
/// candidate atoms in ascending id, so the result is reproducible.
MatchingResult max_matching(const BundleFamily& family);

/// Size of a maximum matching (number of sets that can be given distinct
/// representatives simultaneously).
std::size_t max_matching_size(const BundleFamily& family);

bool hall_via_matching(const BundleFamily& family);

/// nullopt iff Hall holds. Otherwise the sets reachable by alternating paths
/// from an unmatched set, whose union is one smaller than their number.
std::optional<HallViolation> find_violation(const BundleFamily& family);

/// True when `assignment` picks a member of each set and no atom twice.
bool is_valid_sdr(const BundleFamily& family, std::span<const Atom> assignment);

/// True when the indexed sets F really satisfy |union| < |F|.
bool is_valid_violation(const BundleFamily& family, const HallViolation& violation);

/// Number of bijections from the sets onto `columns` with t_j in I_j: the
/// permanent of the incidence matrix, by Ryser's formula over Gray-code
/// ordered column subsets. Throws DimensionMismatch unless |columns| = m and
/// CapExceeded above kPermanentCap.
Integer sdr_count(const BundleFamily& family, std::span<const Atom> columns);

/// Same count by summing over all m! permutations. Independent oracle for
/// sdr_count; throws CapExceeded above kNaivePermanentCap.
Integer sdr_count_naive(const BundleFamily& family, std::span<const Atom> columns);

}  // namespace eulerhall
