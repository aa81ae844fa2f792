#include "sweep.hpp"

#include <sstream>
#include <thread>
#include <vector>

namespace eulerhall::cli {
namespace {

std::vector<IndexSet> nonempty_subsets(std::size_t max_atom) {
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max_atom); ++mask) {
    std::vector<Atom> atoms;
    for (std::size_t a = 0; a < max_atom; ++a) {
      if (mask & (std::uint64_t{1} << a)) atoms.push_back(Atom{a + 1});
    }
    out.emplace_back(std::move(atoms));
  }
  return out;
}

std::string describe(const BundleFamily& f) { return family_to_json(f).dump(); }

void check_family(const BundleFamily& f, bool check_coefficients, SweepSummary& s) {
  ++s.families;
  const bool euler_nonzero = !euler_class(f).is_zero();
  const bool hall = hall_exhaustive(f);
  const bool matched = max_matching(f).saturated();
  if (hall) ++s.hall_true;
  if (euler_nonzero == hall && hall == matched) {
    ++s.agreements;
  } else {
    ++s.mismatches;
    if (!s.first_failure) s.first_failure = "equivalence fails on " + describe(f);
  }
  if (check_coefficients) {
    ++s.coefficient_checks;
    if (!verify_coefficient_identity(f)) {
      ++s.coefficient_failures;
      if (!s.first_failure) s.first_failure = "coefficient identity fails on " + describe(f);
    }
  }
}

/// All families of exactly `m` sets whose first set is pool[first].
void sweep_prefix(const std::vector<IndexSet>& pool, std::size_t m, std::size_t first, bool check_coefficients,
                  SweepSummary& s) {
  std::vector<std::size_t> idx(m, 0);
  idx[0] = first;
  BundleFamily f;
  f.sets.assign(m, pool[first]);
  while (true) {
    for (std::size_t i = 1; i < m; ++i) f.sets[i] = pool[idx[i]];
    check_family(f, check_coefficients, s);
    std::size_t i = m;
    while (i > 1 && idx[i - 1] + 1 == pool.size()) idx[--i] = 0;
    if (i <= 1) return;
    ++idx[i - 1];
  }
}

void merge(SweepSummary& into, const SweepSummary& part) {
  into.families += part.families;
  into.agreements += part.agreements;
  into.mismatches += part.mismatches;
  into.hall_true += part.hall_true;
  into.coefficient_checks += part.coefficient_checks;
  into.coefficient_failures += part.coefficient_failures;
  if (!into.first_failure) into.first_failure = part.first_failure;
}

}  // namespace

std::uint64_t sweep_family_count(std::size_t max_m, std::size_t max_atom) {
  const std::uint64_t base = (std::uint64_t{1} << max_atom) - 1;
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t m = 1; m <= max_m; ++m) {
    power *= base;
    total += power;
  }
  return total;
}

SweepSummary run_sweep(std::size_t max_m, std::size_t max_atom, unsigned jobs, bool check_coefficients) {
  const auto pool = nonempty_subsets(max_atom);
  // One task per (m, first set); tasks are merged in this fixed order.
  struct Task {
    std::size_t m;
    std::size_t first;
  };
  std::vector<Task> tasks;
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t first = 0; first < pool.size(); ++first) tasks.push_back({m, first});
  }
  std::vector<SweepSummary> parts(tasks.size());

  const unsigned workers = std::max(1U, jobs);
  auto work = [&](unsigned w) {
    for (std::size_t t = w; t < tasks.size(); t += workers) {
      sweep_prefix(pool, tasks[t].m, tasks[t].first, check_coefficients, parts[t]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  SweepSummary total;
  total.max_m = max_m;
  total.max_atom = max_atom;
  for (const auto& p : parts) merge(total, p);
  return total;
}

Json to_json(const SweepSummary& s) {
  Json out;
  out["max_m"] = s.max_m;
  out["max_atom"] = s.max_atom;
  out["families"] = s.families;
  out["agreements"] = s.agreements;
  out["mismatches"] = s.mismatches;
  out["hall_true"] = s.hall_true;
  out["coefficient_checks"] = s.coefficient_checks;
  out["coefficient_failures"] = s.coefficient_failures;
  out["first_failure"] = s.first_failure ? Json(*s.first_failure) : Json(nullptr);
  out["passed"] = s.clean();
  return out;
}

}  // namespace eulerhall::cli
