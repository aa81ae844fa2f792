#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "eulerhall/json_io.hpp"

namespace eulerhall::cli {

struct SweepSummary {
  std::size_t max_m = 0;
  std::size_t max_atom = 0;
  std::uint64_t families = 0;
  std::uint64_t agreements = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t hall_true = 0;
  std::uint64_t coefficient_checks = 0;
  std::uint64_t coefficient_failures = 0;
  std::optional<std::string> first_failure;

  [[nodiscard]] bool clean() const { return mismatches == 0 && coefficient_failures == 0; }
};

/// Every ordered family of 1..max_m nonempty subsets of {1..max_atom}:
/// Euler class nonvanishing, exhaustive Hall and matching saturation must
/// agree, and each Euler coefficient must equal its SDR count. Work is split
/// by the first set across `jobs` threads; counts are merged in order.
SweepSummary run_sweep(std::size_t max_m, std::size_t max_atom, unsigned jobs = 1,
                       bool check_coefficients = true);

/// (2^a - 1) + (2^a - 1)^2 + ... + (2^a - 1)^m
std::uint64_t sweep_family_count(std::size_t max_m, std::size_t max_atom);

Json to_json(const SweepSummary& s);

}  // namespace eulerhall::cli
