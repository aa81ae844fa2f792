#include "eulerhall/exterior_ring.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "eulerhall/errors.hpp"

namespace eulerhall {

Atom make_atom(std::uint64_t value) {
  if (value == 0) throw InvalidInput("atom ids are positive integers, got 0");
  return Atom{value};
}

Monomial::Monomial(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end()) {
    throw InvalidInput("monomial support has a repeated atom");
  }
  if (!atoms_.empty() && id(atoms_.front()) == 0) throw InvalidInput("atom ids are positive integers, got 0");
}

Monomial::Monomial(std::initializer_list<std::uint64_t> ids) {
  atoms_.reserve(ids.size());
  for (auto v : ids) atoms_.push_back(make_atom(v));
  *this = Monomial(std::move(atoms_));
}

bool Monomial::contains(Atom a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }

std::optional<Monomial> Monomial::multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.atoms_.reserve(a.degree() + b.degree());
  auto i = a.atoms_.begin();
  auto j = b.atoms_.begin();
  while (i != a.atoms_.end() && j != b.atoms_.end()) {
    if (*i < *j) {
      out.atoms_.push_back(*i++);
    } else if (*j < *i) {
      out.atoms_.push_back(*j++);
    } else {
#ifdef EULERHALL_MUTATE_RING_MUL
      out.atoms_.push_back(*i++);
      ++j;
#else
      return std::nullopt;
#endif
    }
  }
  out.atoms_.insert(out.atoms_.end(), i, a.atoms_.end());
  out.atoms_.insert(out.atoms_.end(), j, b.atoms_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                                                b.atoms_.end());
}

RingElement RingElement::one() { return term(Monomial{}, 1); }

RingElement RingElement::term(Monomial m, Integer coefficient) {
  RingElement e;
  if (coefficient != 0) e.terms_.emplace(std::move(m), std::move(coefficient));
  return e;
}

void RingElement::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer RingElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer{0} : it->second;
}

std::optional<std::size_t> RingElement::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order puts the lowest and highest degrees at the ends.
  auto lo = terms_.begin()->first.degree();
  auto hi = terms_.rbegin()->first.degree();
  if (lo != hi) return std::nullopt;
  return lo;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      os << mag;
      wrote = true;
    }
    for (Atom a : m.atoms()) {
      if (wrote) os << '*';
      os << 'x' << id(a);
      wrote = true;
    }
  }
  return os.str();
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

RingElement operator-(const RingElement& a) {
  RingElement out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (auto m = Monomial::multiply(ma, mb)) out.add_term(*m, ca * cb);
    }
  }
  return out;
}

RingElement generator(Atom a) {
  return RingElement::term(Monomial(std::vector<Atom>{make_atom(id(a))}), 1);
}

Monomial top_class(std::size_t n) {
  std::vector<Atom> atoms;
  atoms.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) atoms.push_back(Atom{i});
  return Monomial(std::move(atoms));
}

RingElement product_of_generators(std::span<const Atom> seq, std::size_t n) {
  if (seq.size() != n) throw InvalidInput("sequence length must equal the number of spheres");
  std::vector<bool> seen(n + 1, false);
  bool distinct = true;
  for (Atom a : seq) {
    if (id(a) < 1 || id(a) > n) throw InvalidInput("sequence entry outside {1..N}");
    if (seen[id(a)]) distinct = false;
    seen[id(a)] = true;
  }
  if (!distinct) return RingElement::zero();
  return RingElement::term(top_class(n), 1);
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.to_string(); }

}  // namespace eulerhall
