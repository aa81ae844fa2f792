#include "eulerhall/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "eulerhall/errors.hpp"

namespace eulerhall {
namespace {

using u128 = unsigned __int128;

std::uint64_t checked(u128 value, std::uint64_t cap) {
  if (value > cap) {
    throw Overflow("atom id exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::uint64_t>(value);
}

u128 triangle(u128 w) { return w * (w + 1) / 2; }

// C(a, b) in 128 bits; a + b < 2^63 keeps w(w+1) below 2^126.
u128 pair_wide(std::uint64_t a, std::uint64_t b) {
  const u128 w = u128{a} + b;
  if (w >= (u128{1} << 63)) throw Overflow("Cantor pairing argument too large");
  return triangle(w) + b;
}

std::string describe(const LabeledSet& s) {
  std::ostringstream os;
  os << "set {";
  for (std::size_t i = 0; i < s.set.size(); ++i) os << (i ? "," : "") << s.set.atoms()[i];
  os << "} provenance [";
  for (std::size_t i = 0; i < s.provenance.size(); ++i) os << (i ? "," : "") << s.provenance[i];
  os << "] label " << s.label;
  return os.str();
}

void check_window(std::int64_t window) {
  if (window < 1) throw InvalidInput("window must be >= 1");
}

}  // namespace

std::uint64_t zigzag(std::int64_t j) {
  if (j > 0) return 2 * static_cast<std::uint64_t>(j) - 1;
  return 2 * (std::uint64_t{0} - static_cast<std::uint64_t>(j));
}

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  return checked(pair_wide(a, b), cap);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  // w = floor((sqrt(8n+1) - 1) / 2), corrected for floating error.
  auto w = static_cast<u128>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (triangle(w) > n) --w;
  while (triangle(w + 1) <= n) ++w;
  const auto b = static_cast<std::uint64_t>(n - triangle(w));
  const auto a = static_cast<std::uint64_t>(w - b);
  return {a, b};
}

Atom nu(std::int64_t j, Atom t, std::uint64_t atom_cap) {
  if (id(t) < 1) throw InvalidInput("nu is defined on positive atoms");
  const u128 paired = pair_wide(zigzag(j), id(t) - 1);
  return Atom{checked(paired + 2, atom_cap)};
}

std::size_t level(Atom a) {
  if (id(a) < 1) throw InvalidInput("level is defined on positive atoms");
  std::size_t r = 0;
  std::uint64_t cur = id(a);
  while (cur != 1) {
    cur = cantor_unpair(cur - 2).second + 1;  // strictly smaller than cur
    ++r;
  }
  return r;
}

IndexSet i_set(std::int64_t j, std::uint64_t atom_cap) {
  if (j < 1) throw InvalidInput("I_j is defined for j >= 1");
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(j));
  for (std::int64_t u = 1; u <= j; ++u) atoms.push_back(nu(j, Atom{static_cast<std::uint64_t>(u)}, atom_cap));
  return IndexSet(std::move(atoms));
}

IndexSet alpha(std::int64_t j, const IndexSet& set, std::uint64_t atom_cap) {
  std::vector<Atom> out;
  out.reserve(set.size() + (j > 0 ? static_cast<std::size_t>(j) : 0));
  for (Atom u : set.atoms()) {
    // For j >= 1 the first j naturals are dropped by raw id.
    if (j >= 1 && id(u) <= static_cast<std::uint64_t>(j)) continue;
    out.push_back(nu(j, u, atom_cap));
  }
  if (j >= 1) {
    const auto ij = i_set(j, atom_cap);
    out.insert(out.end(), ij.atoms().begin(), ij.atoms().end());
  }
  return IndexSet(std::move(out));
}

GammaFamily gamma_generations(const DynamicsConfig& cfg) {
  check_window(cfg.window);
  GammaFamily g;
  g.window = cfg.window;
  g.generations.push_back({LabeledSet{IndexSet{1}, {}, Atom{1}}});
  for (std::size_t k = 0; k < cfg.depth; ++k) {
    const auto& parents = g.generations.back();
    std::vector<LabeledSet> next;
    next.reserve(parents.size() * static_cast<std::size_t>(2 * cfg.window + 1));
    for (const auto& parent : parents) {
      for (std::int64_t j = -cfg.window; j <= cfg.window; ++j) {
        auto provenance = parent.provenance;
        provenance.push_back(j);
        next.push_back(LabeledSet{alpha(j, parent.set, cfg.atom_cap), std::move(provenance),
                                  nu(j, parent.label, cfg.atom_cap)});
      }
    }
    g.generations.push_back(std::move(next));
  }
  return g;
}

LabelingReport verify_labeling(const GammaFamily& gamma) {
  LabelingReport report;
  std::unordered_map<std::uint64_t, const LabeledSet*> seen;
  for (std::size_t k = 0; k < gamma.generations.size(); ++k) {
    for (const auto& s : gamma.generations[k]) {
      if (report.membership.passed && !s.set.contains(s.label)) {
        report.membership = {false, describe(s) + ": label not in set"};
      }
      if (report.level.passed && level(s.label) != k) {
        report.level = {false, describe(s) + ": level " + std::to_string(level(s.label)) + " in generation " +
                                   std::to_string(k)};
      }
      auto [it, inserted] = seen.emplace(id(s.label), &s);
      if (report.injectivity.passed && !inserted) {
        report.injectivity = {false, describe(s) + ": label shared with " + describe(*it->second)};
      }
    }
  }
  return report;
}

BundleFamily prefix_family(const GammaFamily& gamma, std::size_t m) {
  if (m >= gamma.generations.size()) {
    throw InvalidInput("prefix " + std::to_string(m) + " beyond generated depth " +
                       std::to_string(gamma.generations.size() - 1));
  }
  BundleFamily f;
  for (std::size_t k = 0; k <= m; ++k) {
    for (const auto& s : gamma.generations[k]) f.sets.push_back(s.set);
  }
  return f;
}

MatchingResult hall_certificate_for_prefix(const GammaFamily& gamma, std::size_t m) {
  const auto family = prefix_family(gamma, m);
  std::vector<Atom> labels;
  labels.reserve(family.size());
  for (std::size_t k = 0; k <= m; ++k) {
    for (const auto& s : gamma.generations[k]) labels.push_back(s.label);
  }
  if (!is_valid_sdr(family, labels)) {
    throw InvariantViolation("labels of generations 0.." + std::to_string(m) + " are not an SDR");
  }
  if (!hall_via_matching(family)) {
    throw InvariantViolation("maximum matching does not saturate generations 0.." + std::to_string(m));
  }
  return {std::move(labels)};
}

BundleFamily alpha_image(const BundleFamily& family, std::int64_t window, std::uint64_t atom_cap) {
  check_window(window);
  BundleFamily out;
  out.sets.reserve(family.size() * static_cast<std::size_t>(2 * window + 1));
  for (std::int64_t j = -window; j <= window; ++j) {
    for (const auto& s : family.sets) out.sets.push_back(alpha(j, s, atom_cap));
  }
  return out;
}

bool hall_persistence_check(const BundleFamily& family, const DynamicsConfig& cfg) {
  if (family.trivial_lines > 0) throw InvalidInput("trivial_lines must be 0");
  if (!hall_via_matching(family)) throw InvalidInput("family does not satisfy Hall's condition");
  return hall_via_matching(alpha_image(family, cfg.window, cfg.atom_cap));
}

}  // namespace eulerhall
