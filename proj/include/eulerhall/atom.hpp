#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

namespace eulerhall {

/// Index of a sphere coordinate: names the generator x_n of the cohomology
/// ring and the line bundle pulled back along the n-th projection. Always >= 1.
enum class Atom : std::uint64_t {};

constexpr std::uint64_t id(Atom a) noexcept { return static_cast<std::uint64_t>(a); }

/// Checked construction; throws InvalidInput for 0.
Atom make_atom(std::uint64_t value);

inline std::ostream& operator<<(std::ostream& os, Atom a) { return os << id(a); }

}  // namespace eulerhall
