#pragma once

// Exact arithmetic in Z[x_1, x_2, ...]/(x_i^2), the cohomology ring of a finite
// product of 2-spheres. Generators commute and square to zero, so every
// element is a Z-combination of squarefree monomials.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eulerhall/atom.hpp"

namespace eulerhall {

using Integer = boost::multiprecision::cpp_int;

/// Squarefree monomial x_{a_1} x_{a_2} ... x_{a_k}, stored as its support in
/// ascending order. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  /// Sorts and rejects repeated atoms (InvalidInput).
  explicit Monomial(std::vector<Atom> atoms);
  Monomial(std::initializer_list<std::uint64_t> ids);

  [[nodiscard]] std::size_t degree() const noexcept { return atoms_.size(); }
  [[nodiscard]] std::span<const Atom> atoms() const noexcept { return atoms_; }
  [[nodiscard]] bool contains(Atom a) const;

  /// Product of two monomials: nullopt when the supports overlap (x_i^2 = 0).
  [[nodiscard]] static std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);

  /// Graded order: degree first, then lexicographic on the sorted support.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Atom> atoms_;
};

/// Sparse element of the ring. No stored coefficient is zero.
class RingElement {
 public:
  using Terms = std::map<Monomial, Integer>;

  RingElement() = default;  // zero

  static RingElement zero() { return {}; }
  static RingElement one();
  static RingElement term(Monomial m, Integer coefficient);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Integer coeff(const Monomial& m) const;

  /// Common degree of all terms; nullopt for zero or a non-homogeneous element.
  [[nodiscard]] std::optional<std::size_t> homogeneous_degree() const;

  /// "2*x1*x2 + x3*x4", ascending graded order; "0" for zero.
  [[nodiscard]] std::string to_string() const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b) = default;

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

RingElement generator(Atom a);
inline RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
inline RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
inline Integer coeff(const RingElement& e, const Monomial& m) { return e.coeff(m); }
inline bool is_zero(const RingElement& e) { return e.is_zero(); }

/// The top class x_1 x_2 ... x_n.
Monomial top_class(std::size_t n);

/// Product x_{s_1} x_{s_2} ... x_{s_N} for a length-N sequence over {1..N}:
/// the top class when the sequence is a permutation, zero otherwise.
/// Throws InvalidInput when the length or an entry is out of range.
RingElement product_of_generators(std::span<const Atom> seq, std::size_t n);

std::ostream& operator<<(std::ostream& os, const RingElement& e);

}  // namespace eulerhall
