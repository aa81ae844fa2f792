#include "selftest.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sweep.hpp"

namespace eulerhall::cli {
namespace {

RingElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::bernoulli_distribution pick(0.4);
  RingElement e;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<Atom> atoms;
    for (std::uint64_t a = 1; a <= 6; ++a) {
      if (pick(rng)) atoms.push_back(Atom{a});
    }
    e = e + RingElement::term(Monomial(std::move(atoms)), coef(rng));
  }
  return e;
}

BundleFamily random_family(std::mt19937_64& rng, std::size_t max_m, std::uint64_t max_atom) {
  std::uniform_int_distribution<std::size_t> size(0, max_m);
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << max_atom) - 1);
  BundleFamily f;
  for (std::size_t m = size(rng); m > 0; --m) {
    std::vector<Atom> atoms;
    const auto bits = mask(rng);
    for (std::uint64_t a = 0; a < max_atom; ++a) {
      if (bits & (std::uint64_t{1} << a)) atoms.push_back(Atom{a + 1});
    }
    f.sets.emplace_back(std::move(atoms));
  }
  return f;
}

struct Check {
  const char* name;
  std::function<bool()> run;
};

}  // namespace

Json run_selftest() {
  const std::vector<Check> checks = {
      {"ring_axioms",
       [] {
         std::mt19937_64 rng(20240601);
         for (int i = 0; i < 500; ++i) {
           auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
           if (a * b != b * a || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) return false;
         }
         return true;
       }},
      {"nilpotent_generators",
       [] {
         for (std::uint64_t a = 1; a <= 16; ++a) {
           if (!(generator(Atom{a}) * generator(Atom{a})).is_zero()) return false;
         }
         return true;
       }},
      {"euler_fixtures",
       [] {
         return euler_class(BundleFamily{{IndexSet{1, 2}, IndexSet{2}}}) ==
                    RingElement::term(Monomial{1, 2}, 1) &&
                euler_class(BundleFamily{{IndexSet{1, 2}, IndexSet{1, 2}}}) ==
                    RingElement::term(Monomial{1, 2}, 2) &&
                euler_class(BundleFamily{{IndexSet{1}, IndexSet{1}}}).is_zero();
       }},
      {"equivalence_sweep_3x3",
       [] { return run_sweep(3, 3).clean(); }},
      {"coefficient_identity_random",
       [] {
         std::mt19937_64 rng(7);
         for (int i = 0; i < 100; ++i) {
           if (!verify_coefficient_identity(random_family(rng, 5, 7))) return false;
         }
         return true;
       }},
      {"verdict_fixtures",
       [] {
         return subordination_verdict(BundleFamily{{IndexSet{1}, IndexSet{1}}}).tag == VerdictTag::Subordinate &&
                subordination_verdict(BundleFamily{{IndexSet{1, 2}, IndexSet{2}}}).tag ==
                    VerdictTag::NotSubordinate &&
                subordination_verdict(BundleFamily{{IndexSet{1, 2}, IndexSet{1, 2}}}).tag ==
                    VerdictTag::NotSubordinate &&
                subordination_verdict(BundleFamily{{IndexSet{1, 2}, IndexSet{1, 2}, IndexSet{1, 2}}}).tag ==
                    VerdictTag::Undecided;
       }},
      {"labeling_w2_d3",
       [] {
         const auto g = gamma_generations({2, 3});
         return verify_labeling(g).passed() && hall_certificate_for_prefix(g, 3).saturated();
       }},
      {"hall_persistence_random",
       [] {
         std::mt19937_64 rng(11);
         int tried = 0;
         while (tried < 50) {
           auto f = random_family(rng, 4, 6);
           if (!hall_via_matching(f)) continue;
           ++tried;
           if (!hall_persistence_check(f, {2, 0})) return false;
         }
         return true;
       }},
  };

  Json results = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && ok;
    Json r{{"name", c.name}, {"passed", ok}};
    if (!error.empty()) r["error"] = error;
    results.push_back(std::move(r));
  }
  return Json{{"checks", std::move(results)}, {"passed", all}};
}

}  // namespace eulerhall::cli
