#include "eulerhall/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "eulerhall/errors.hpp"

namespace eulerhall {
namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

/// Bipartite graph with left = set indices, right = positions in the sorted
/// support of the family.
struct Bipartite {
  std::vector<Atom> atoms;
  std::vector<std::vector<std::size_t>> adj;

  explicit Bipartite(const BundleFamily& family) : atoms(support(family)) {
    adj.reserve(family.sets.size());
    for (const auto& s : family.sets) {
      std::vector<std::size_t> row;
      row.reserve(s.size());
      for (Atom a : s.atoms()) {
        row.push_back(static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin()));
      }
      adj.push_back(std::move(row));
    }
  }
};

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const Bipartite& g)
      : g_(g), match_left_(g.adj.size(), kUnmatched), match_right_(g.atoms.size(), kUnmatched),
        dist_(g.adj.size()) {}

  std::size_t run() {
    std::size_t matched = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < g_.adj.size(); ++u) {
        if (match_left_[u] == kUnmatched && dfs(u)) ++matched;
      }
    }
    return matched;
  }

  [[nodiscard]] const std::vector<std::size_t>& match_left() const { return match_left_; }
  [[nodiscard]] const std::vector<std::size_t>& match_right() const { return match_right_; }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < g_.adj.size(); ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found_free = false;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : g_.adj[u]) {
        auto w = match_right_[v];
        if (w == kUnmatched) {
          found_free = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(std::size_t u) {
    for (auto v : g_.adj[u]) {
      auto w = match_right_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const Bipartite& g_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace

bool hall_exhaustive(const BundleFamily& family, std::size_t cap) {
  const std::size_t m = family.sets.size();
  if (m > cap) {
    throw CapExceeded("exhaustive Hall check limited to " + std::to_string(cap) + " sets, got " +
                      std::to_string(m));
  }
  if (m == 0) return true;

  Bipartite g(family);
  const std::size_t words = (g.atoms.size() + 63) / 64;
  std::vector<std::uint64_t> rows(m * words, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (auto v : g.adj[j]) rows[j * words + v / 64] |= std::uint64_t{1} << (v % 64);
  }

  // unions[mask] = unions[mask minus lowest bit] | row[lowest bit]
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<std::uint64_t> unions(subsets * words, 0);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    std::size_t count = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const auto bits = unions[rest * words + w] | rows[low * words + w];
      unions[mask * words + w] = bits;
      count += static_cast<std::size_t>(__builtin_popcountll(bits));
    }
    if (count < static_cast<std::size_t>(__builtin_popcountll(mask))) return false;
  }
  return true;
}

MatchingResult max_matching(const BundleFamily& family) {
  Bipartite g(family);
  HopcroftKarp hk(g);
  if (hk.run() != family.sets.size()) return {};
  std::vector<Atom> assignment;
  assignment.reserve(family.sets.size());
  for (auto v : hk.match_left()) assignment.push_back(g.atoms[v]);
  return {std::move(assignment)};
}

std::size_t max_matching_size(const BundleFamily& family) {
  Bipartite g(family);
  HopcroftKarp hk(g);
  return hk.run();
}

bool hall_via_matching(const BundleFamily& family) { return max_matching(family).saturated(); }

std::optional<HallViolation> find_violation(const BundleFamily& family) {
  Bipartite g(family);
  HopcroftKarp hk(g);
  if (hk.run() == family.sets.size()) return std::nullopt;

  const auto& ml = hk.match_left();
  const auto& mr = hk.match_right();
  std::size_t root = 0;
  while (ml[root] != kUnmatched) ++root;

  // Alternating reachability: every atom reached is matched (else the
  // matching was not maximum) and its partner joins F, so |union F| = |F|-1.
  std::vector<bool> seen_left(g.adj.size(), false);
  std::vector<bool> seen_right(g.atoms.size(), false);
  std::deque<std::size_t> queue{root};
  seen_left[root] = true;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.adj[u]) {
      if (seen_right[v]) continue;
      seen_right[v] = true;
      auto w = mr[v];
      if (w == kUnmatched) throw InvariantViolation("augmenting path left after maximum matching");
      if (!seen_left[w]) {
        seen_left[w] = true;
        queue.push_back(w);
      }
    }
  }

  HallViolation out;
  for (std::size_t j = 0; j < seen_left.size(); ++j) {
    if (seen_left[j]) out.sets.push_back(j + 1);
  }
  return out;
}

bool is_valid_sdr(const BundleFamily& family, std::span<const Atom> assignment) {
  if (assignment.size() != family.sets.size()) return false;
  std::set<Atom> used;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (!family.sets[j].contains(assignment[j])) return false;
    if (!used.insert(assignment[j]).second) return false;
  }
  return true;
}

bool is_valid_violation(const BundleFamily& family, const HallViolation& violation) {
  if (violation.sets.empty()) return false;
  std::set<std::size_t> indices;
  std::set<Atom> uni;
  for (auto j : violation.sets) {
    if (j < 1 || j > family.sets.size()) return false;
    if (!indices.insert(j).second) return false;
    const auto& s = family.sets[j - 1];
    uni.insert(s.atoms().begin(), s.atoms().end());
  }
  return uni.size() < indices.size();
}

}  // namespace eulerhall
