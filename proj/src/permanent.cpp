// SDR counts as permanents of 0/1 incidence matrices.

#include <algorithm>
#include <numeric>
#include <string>

#include "eulerhall/errors.hpp"
#include "eulerhall/matching.hpp"

namespace eulerhall {
namespace {

std::vector<Atom> checked_columns(const BundleFamily& family, std::span<const Atom> columns) {
  std::vector<Atom> cols(columns.begin(), columns.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (cols.size() != columns.size() || cols.size() != family.sets.size()) {
    throw DimensionMismatch("need exactly " + std::to_string(family.sets.size()) + " distinct atoms, got " +
                            std::to_string(columns.size()));
  }
  return cols;
}

/// rows[i] bit c set iff cols[c] in I_i.
std::vector<std::uint32_t> incidence(const BundleFamily& family, const std::vector<Atom>& cols) {
  std::vector<std::uint32_t> rows(family.sets.size(), 0);
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (family.sets[i].contains(cols[c])) rows[i] |= std::uint32_t{1} << c;
    }
  }
  return rows;
}

}  // namespace

Integer sdr_count(const BundleFamily& family, std::span<const Atom> columns) {
  const std::size_t m = family.sets.size();
  if (m > kPermanentCap) {
    throw CapExceeded("permanent limited to " + std::to_string(kPermanentCap) + " sets, got " + std::to_string(m));
  }
  const auto cols = checked_columns(family, columns);
  if (m == 0) return 1;
  const auto rows = incidence(family, cols);

  // Ryser: perm = sum over nonempty column subsets S of
  //   (-1)^(m-|S|) * prod_i (row sum of i restricted to S).
  // Subsets are visited in Gray-code order so each step toggles one column.
  // With m <= 20 every product is at most 20^20 < 2^87 and the running sum
  // stays below 2^107, so 128-bit accumulation is exact.
  std::vector<std::int32_t> row_sums(m, 0);
  __int128 total = 0;
  std::uint32_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<unsigned>(__builtin_ctzll(k));
    const std::uint32_t bit = std::uint32_t{1} << col;
    gray ^= bit;
    const int delta = (gray & bit) ? 1 : -1;
    __int128 prod = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i] & bit) row_sums[i] += delta;
      prod *= row_sums[i];
    }
    if (prod == 0) continue;
    const bool negative = ((m - static_cast<std::size_t>(__builtin_popcount(gray))) & 1U) != 0;
    total += negative ? -prod : prod;
  }

  // cpp_int has no __int128 constructor; split into two 64-bit halves.
  const bool neg = total < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
  Integer out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? Integer(-out) : out;
}

Integer sdr_count_naive(const BundleFamily& family, std::span<const Atom> columns) {
  const std::size_t m = family.sets.size();
  if (m > kNaivePermanentCap) {
    throw CapExceeded("naive permanent limited to " + std::to_string(kNaivePermanentCap) + " sets, got " +
                      std::to_string(m));
  }
  const auto cols = checked_columns(family, columns);
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Integer count = 0;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) ok = family.sets[j].contains(cols[perm[j]]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace eulerhall
