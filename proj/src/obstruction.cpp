#include "eulerhall/obstruction.hpp"

#include <algorithm>
#include <sstream>

#include "eulerhall/errors.hpp"

namespace eulerhall {
namespace {

void require_no_trivial_lines(const BundleFamily& family) {
  if (family.trivial_lines > 0) {
    throw InvalidInput("trivial_lines must be 0, got " + std::to_string(family.trivial_lines));
  }
}

/// Calls fn on every k-subset of `pool` (lexicographic order).
template <typename Fn>
void for_each_subset(const std::vector<Atom>& pool, std::size_t k, Fn&& fn) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Atom> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (!fn(chosen)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

EquivalenceReport equivalence_report(const BundleFamily& family) {
  require_no_trivial_lines(family);
  EquivalenceReport r;
  r.euler_class = euler_class(family);
  r.euler_nonzero = !r.euler_class.is_zero();
  r.euler_class_degree = r.euler_class.homogeneous_degree();
  // Subset enumeration where feasible, so Hall is not just the matching again.
  r.hall = family.sets.size() <= kHallExhaustiveCap ? hall_exhaustive(family) : hall_via_matching(family);
  r.matching = max_matching(family);
  r.agree = r.euler_nonzero == r.hall && r.hall == r.matching.saturated();
  if (!r.agree) {
    std::ostringstream msg;
    msg << "Euler class / Hall / matching disagree: euler=" << r.euler_class << " hall=" << r.hall
        << " matched=" << r.matching.saturated();
    throw InvariantViolation(msg.str());
  }
  if (r.matching.saturated() && !is_valid_sdr(family, *r.matching.assignment)) {
    throw InvariantViolation("matching returned an invalid system of distinct representatives");
  }
  return r;
}

bool verify_coefficient_identity(const BundleFamily& family) {
  require_no_trivial_lines(family);
  const std::size_t m = family.sets.size();
  if (m > kPermanentCap) {
    throw CapExceeded("coefficient identity limited to " + std::to_string(kPermanentCap) + " sets");
  }
  const auto e = euler_class(family);
  const auto pool = support(family);
  for (const auto& [mono, c] : e.terms()) {
    if (mono.degree() != m) return false;
    for (Atom a : mono.atoms()) {
      if (!std::binary_search(pool.begin(), pool.end(), a)) return false;
    }
  }
  bool ok = true;
  for_each_subset(pool, m, [&](const std::vector<Atom>& s) {
    ok = e.coeff(Monomial(s)) == sdr_count(family, s);
    return ok;
  });
  return ok;
}

std::string_view to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::NotSubordinate: return "not_subordinate";
    case VerdictTag::Subordinate: return "subordinate";
    case VerdictTag::Undecided: return "undecided";
  }
  return "undecided";
}

Verdict subordination_verdict(const BundleFamily& family) {
  require_no_trivial_lines(family);
  Verdict v;
  v.matching = max_matching(family);
  if (v.matching.saturated()) {
    v.tag = VerdictTag::NotSubordinate;
    return v;
  }
  v.violation = find_violation(family);
  if (!v.violation || !is_valid_violation(family, *v.violation)) {
    throw InvariantViolation("unsaturated matching without a Hall violation certificate");
  }
  if (auto n = has_duplicate_singleton(family)) {
    v.tag = VerdictTag::Subordinate;
    v.witness = n;
  } else {
    v.tag = VerdictTag::Undecided;
  }
  return v;
}

Verdict doubled_verdict(const BundleFamily& family) {
  require_no_trivial_lines(family);
  return subordination_verdict(direct_sum(family, family));
}

}  // namespace eulerhall
