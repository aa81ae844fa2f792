#pragma once

// Direct sums of the line bundles zeta_I over a product of 2-spheres, where
// zeta_I is the tensor product of the pulled-back bundles zeta_n, n in I.
// Each summand is identified with its projection class p_I, so a family is
// also a formal direct sum of projections. The trivial line theta (the
// constant rank-one projection g) is carried as a count.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "eulerhall/atom.hpp"
#include "eulerhall/exterior_ring.hpp"

namespace eulerhall {

/// Nonempty finite set of atoms, ascending and deduplicated.
class IndexSet {
 public:
  /// Canonicalizes; throws InvalidInput when empty.
  explicit IndexSet(std::vector<Atom> atoms);
  IndexSet(std::initializer_list<std::uint64_t> ids);

  [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
  [[nodiscard]] std::size_t size() const noexcept { return atoms_.size(); }
  [[nodiscard]] bool contains(Atom a) const;
  [[nodiscard]] bool is_singleton() const noexcept { return atoms_.size() == 1; }
  [[nodiscard]] Atom front() const { return atoms_.front(); }

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<Atom> atoms_;
};

struct BundleFamily {
  std::vector<IndexSet> sets;
  std::size_t trivial_lines = 0;

  BundleFamily() = default;
  explicit BundleFamily(std::vector<IndexSet> s, std::size_t theta = 0)
      : sets(std::move(s)), trivial_lines(theta) {}
  BundleFamily(std::initializer_list<IndexSet> s, std::size_t theta = 0) : sets(s), trivial_lines(theta) {}

  [[nodiscard]] std::size_t size() const noexcept { return sets.size(); }

  friend bool operator==(const BundleFamily&, const BundleFamily&) = default;
};

/// Euler class of zeta_I: the sum of the generators x_i, i in I.
RingElement euler_line(const IndexSet& set);

/// Product of the line classes, pruning colliding monomials as soon as they
/// appear. Zero when a trivial line is present; the unit for the empty family.
RingElement euler_class(const BundleFamily& family);

std::size_t dimension(const BundleFamily& family);

BundleFamily direct_sum(const BundleFamily& a, const BundleFamily& b);

/// Smallest n such that the singleton {n} occurs at least twice.
std::optional<Atom> has_duplicate_singleton(const BundleFamily& family);

/// Sorted union of all sets in the family.
std::vector<Atom> support(const BundleFamily& family);

}  // namespace eulerhall
