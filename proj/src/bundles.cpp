#include "eulerhall/bundles.hpp"

#include <algorithm>
#include <map>

#include "eulerhall/errors.hpp"

namespace eulerhall {

IndexSet::IndexSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidInput("index sets must be nonempty");
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (id(atoms_.front()) == 0) throw InvalidInput("atom ids are positive integers, got 0");
}

namespace {
std::vector<Atom> to_atoms(std::initializer_list<std::uint64_t> ids) {
  std::vector<Atom> out;
  out.reserve(ids.size());
  for (auto v : ids) out.push_back(make_atom(v));
  return out;
}
}  // namespace

IndexSet::IndexSet(std::initializer_list<std::uint64_t> ids) : IndexSet(to_atoms(ids)) {}

bool IndexSet::contains(Atom a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }

RingElement euler_line(const IndexSet& set) {
  RingElement e;
  for (Atom a : set.atoms()) e = e + generator(a);
  return e;
}

RingElement euler_class(const BundleFamily& family) {
  if (family.trivial_lines > 0) return RingElement::zero();
  // Multiplying one linear factor at a time keeps the partial product at the
  // size of its nonzero support; collisions vanish inside operator*.
  RingElement e = RingElement::one();
  for (const auto& set : family.sets) {
    e = e * euler_line(set);
    if (e.is_zero()) break;
  }
  return e;
}

std::size_t dimension(const BundleFamily& family) { return family.sets.size() + family.trivial_lines; }

BundleFamily direct_sum(const BundleFamily& a, const BundleFamily& b) {
  BundleFamily out = a;
  out.sets.insert(out.sets.end(), b.sets.begin(), b.sets.end());
  out.trivial_lines += b.trivial_lines;
  return out;
}

std::optional<Atom> has_duplicate_singleton(const BundleFamily& family) {
  std::map<Atom, int> counts;
  for (const auto& s : family.sets) {
    if (s.is_singleton()) ++counts[s.front()];
  }
  for (const auto& [a, n] : counts) {
    if (n >= 2) return a;
  }
  return std::nullopt;
}

std::vector<Atom> support(const BundleFamily& family) {
  std::vector<Atom> out;
  for (const auto& s : family.sets) out.insert(out.end(), s.atoms().begin(), s.atoms().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace eulerhall
