#pragma once

// Index-set dynamics. nu relabels sphere coordinates injectively and carries
// the level structure: level(nu(j, t)) = level(t) + 1, with level 1 the only
// atom of level 0. alpha_j transports a finite index set, I_j = alpha_j({1})
// for j >= 1, and the generations Gamma_0 = [{1}], Gamma_{k+1} =
// [alpha_j(I) : I in Gamma_k, j in window] carry the injective labeling
// t(alpha_j(I)) = nu(j, t(I)) with t(I) in I.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulerhall/bundles.hpp"
#include "eulerhall/matching.hpp"

namespace eulerhall {

inline constexpr std::uint64_t kDefaultAtomCap = std::numeric_limits<std::int64_t>::max();

/// Z -> N_0: 0, 1, -1, 2, -2, ... map to 0, 1, 2, 3, 4, ...
std::uint64_t zigzag(std::int64_t j);

/// Cantor pairing (a+b)(a+b+1)/2 + b. Throws Overflow past `cap`.
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b, std::uint64_t cap = kDefaultAtomCap);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);

/// nu(j, t) = 2 + C(zigzag(j), t - 1). Injective, never 1.
Atom nu(std::int64_t j, Atom t, std::uint64_t atom_cap = kDefaultAtomCap);

/// 0 for atom 1, otherwise 1 + level of the t recovered by inverting nu.
std::size_t level(Atom a);

/// I_j = {nu(j,1), ..., nu(j,j)} for j >= 1.
IndexSet i_set(std::int64_t j, std::uint64_t atom_cap = kDefaultAtomCap);

/// nu(j, J) for j <= 0; nu(j, {u in J : u > j}) together with I_j for j >= 1.
IndexSet alpha(std::int64_t j, const IndexSet& set, std::uint64_t atom_cap = kDefaultAtomCap);

struct DynamicsConfig {
  std::int64_t window = 1;  // j ranges over [-window, window]
  std::size_t depth = 0;
  std::uint64_t atom_cap = kDefaultAtomCap;
};

struct LabeledSet {
  IndexSet set;
  std::vector<std::int64_t> provenance;  // alpha indices, innermost first
  Atom label;
};

struct GammaFamily {
  std::int64_t window = 1;
  std::vector<std::vector<LabeledSet>> generations;
};

/// Throws InvalidInput for window < 1 and Overflow past cfg.atom_cap.
GammaFamily gamma_generations(const DynamicsConfig& cfg);

struct CheckOutcome {
  bool passed = true;
  std::optional<std::string> counterexample;
};

struct LabelingReport {
  CheckOutcome membership;   // t(I) in I
  CheckOutcome injectivity;  // labels distinct across every generation
  CheckOutcome level;        // level(t(I)) = generation index
  [[nodiscard]] bool passed() const { return membership.passed && injectivity.passed && level.passed; }
};

LabelingReport verify_labeling(const GammaFamily& gamma);

/// Generations 0..m concatenated, in order.
BundleFamily prefix_family(const GammaFamily& gamma, std::size_t m);

/// The labels of generations 0..m as an explicit SDR of prefix_family.
/// Throws InvariantViolation unless the labels are a valid SDR and an
/// independent maximum matching also saturates the prefix.
MatchingResult hall_certificate_for_prefix(const GammaFamily& gamma, std::size_t m);

/// [alpha_j(J_i) : j in window, i in 1..m], j-major.
BundleFamily alpha_image(const BundleFamily& family, std::int64_t window,
                         std::uint64_t atom_cap = kDefaultAtomCap);

/// Whether the alpha image of a Hall family still satisfies Hall (it always
/// should). Throws InvalidInput if the family has trivial lines or fails Hall.
bool hall_persistence_check(const BundleFamily& family, const DynamicsConfig& cfg);

}  // namespace eulerhall
