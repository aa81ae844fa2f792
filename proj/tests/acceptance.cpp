// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulerhall/dynamics.hpp"
#include "eulerhall/json_io.hpp"
#include "eulerhall/obstruction.hpp"
#include "oracles.hpp"
#include "sweep.hpp"

namespace eh = eulerhall;
namespace eht = eulerhall::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

int failures = 0;

void report(const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << name << " (" << secs << " s)";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

std::string family_str(const eh::BundleFamily& f) { return eh::family_to_json(f).dump(); }

struct Proc {
  int code;
  std::string out;
};

Proc run_tool(const std::string& args) {
  const std::string cmd = std::string(EULERHALL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(EULERHALL_FIXTURES) + "/" + name; }

}  // namespace

int main() {
  constexpr std::uint64_t kSweepFamilies = 15 + 15 * 15 + 15 * 15 * 15 + 15 * 15 * 15 * 15;  // 54,240

  report("C1 three-way equivalence, all 54,240 families over {1..4}", 60.0, [] {
    Outcome o;
    const auto s = eulerhall::cli::run_sweep(4, 4, 1, false);
    if (s.families != kSweepFamilies) o.fail("families " + std::to_string(s.families));
    if (s.mismatches != 0) o.fail(std::to_string(s.mismatches) + " mismatches; " + s.first_failure.value_or(""));
    o.detail = o.passed ? std::to_string(s.families) + " families, 0 mismatches" : o.detail;
    return o;
  });

  report("C2 Euler coefficient = SDR count; Ryser = permutation sum", 30.0, [] {
    Outcome o;
    const auto s = eulerhall::cli::run_sweep(4, 4, 1, true);
    if (s.coefficient_checks != kSweepFamilies || s.coefficient_failures != 0) {
      o.fail("sweep coefficient failures " + std::to_string(s.coefficient_failures));
    }
    std::mt19937_64 rng(2001);
    for (int i = 0; i < 1000 && o.passed; ++i) {
      const auto f = eht::random_family(rng, 1, 6, 8);
      if (!eh::verify_coefficient_identity(f)) o.fail("identity fails on " + family_str(f));
      // Every Euler coefficient against the permutation oracle too.
      const auto e = eh::euler_class(f);
      for (const auto& [mono, c] : e.terms()) {
        std::vector<eh::Atom> s(mono.atoms().begin(), mono.atoms().end());
        if (c != eh::sdr_count_naive(f, s)) o.fail("naive count differs on " + family_str(f));
      }
    }
    for (std::size_t m = 0; m <= 7 && o.passed; ++m) {
      for (int i = 0; i < 200; ++i) {
        const auto f = eht::random_family(rng, m, m, 9);
        std::vector<eh::Atom> pool;
        for (std::uint64_t a = 1; a <= 9; ++a) pool.push_back(eh::Atom{a});
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(m);
        if (eh::sdr_count(f, pool) != eh::sdr_count_naive(f, pool)) {
          o.fail("Ryser differs on " + family_str(f));
          break;
        }
      }
    }
    return o;
  });

  report("C3 ring axioms (10,000 random checks) and product rule for N <= 5", 5.0, [] {
    Outcome o;
    std::mt19937_64 rng(3001);
    for (int i = 0; i < 2500 && o.passed; ++i) {
      const auto a = eht::random_element(rng), b = eht::random_element(rng), c = eht::random_element(rng);
      if ((a * b) * c != a * (b * c)) o.fail("associativity");
      if (a * b != b * a) o.fail("commutativity");
      if (a * (b + c) != a * b + a * c) o.fail("distributivity");
      const eh::Atom g{1 + rng() % 6};
      if (!(eh::generator(g) * eh::generator(g)).is_zero()) o.fail("nilpotency");
    }
    for (std::size_t n = 1; n <= 5 && o.passed; ++n) {
      std::vector<std::uint64_t> seq(n, 1);
      while (o.passed) {
        std::vector<eh::Atom> atoms;
        eh::RingElement folded = eh::RingElement::one();
        std::vector<bool> seen(n + 1, false);
        bool distinct = true;
        for (auto v : seq) {
          atoms.push_back(eh::Atom{v});
          folded = folded * eh::generator(eh::Atom{v});
          distinct = distinct && !seen[v];
          seen[v] = true;
        }
        const auto got = eh::product_of_generators(atoms, n);
        const auto expected = distinct ? eh::RingElement::term(eh::top_class(n), 1) : eh::RingElement::zero();
        if (got != expected || got != folded) o.fail("product rule fails for N=" + std::to_string(n));
        std::size_t i = 0;
        while (i < n && ++seq[i] > n) seq[i++] = 1;
        if (i == n) break;
      }
    }
    return o;
  });

  report("C4a every Hall family -> not_subordinate with valid SDR; duplicated singleton -> subordinate", 0, [] {
    Outcome o;
    for (std::size_t m = 1; m <= 4; ++m) {
      eht::for_each_family(m, 4, [&](const eh::BundleFamily& f) {
        if (!o.passed) return;
        const auto v = eh::subordination_verdict(f);
        const bool hall = eht::brute_hall(f);
        if (hall && (v.tag != eh::VerdictTag::NotSubordinate || !v.matching.assignment ||
                     !eh::is_valid_sdr(f, *v.matching.assignment))) {
          o.fail("Hall family not certified: " + family_str(f));
        }
        if (!hall && v.tag == eh::VerdictTag::NotSubordinate) o.fail("non-Hall family obstructed: " + family_str(f));
        if (eh::has_duplicate_singleton(f) && v.tag != eh::VerdictTag::Subordinate) {
          o.fail("duplicated singleton not subordinate: " + family_str(f));
        }
        if (v.tag == eh::VerdictTag::Subordinate &&
            (!v.witness || eh::has_duplicate_singleton(f) != v.witness)) {
          o.fail("bad witness: " + family_str(f));
        }
      });
    }
    return o;
  });

  report("C4b doubling any family with a singleton -> subordinate", 0, [] {
    Outcome o;
    for (std::size_t m = 1; m <= 4; ++m) {
      eht::for_each_family(m, 4, [&](const eh::BundleFamily& f) {
        bool singleton = false;
        for (const auto& s : f.sets) singleton = singleton || s.is_singleton();
        if (singleton && eh::doubled_verdict(f).tag != eh::VerdictTag::Subordinate) {
          o.fail("doubling not subordinate: " + family_str(f));
        }
      });
    }
    return o;
  });

  report("C4c [{1,2},{1,2}] yields undecided", 0, [] {
    Outcome o;
    const eh::BundleFamily f{{eh::IndexSet{1, 2}, eh::IndexSet{1, 2}}};
    const auto v = eh::subordination_verdict(f);
    if (v.tag != eh::VerdictTag::Undecided) {
      o.fail("verdict is " + std::string(eh::to_string(v.tag)) + ": Hall holds here (SDR " +
             eh::to_json(v.matching).dump() + ", Euler class " + eh::euler_class(f).to_string() +
             "), which C4a requires to be not_subordinate");
    }
    return o;
  });

  report("C5 dynamics: nu, levels, labeling, prefix Hall, persistence (W <= 3, depth <= 4)", 10.0, [] {
    Outcome o;
    std::vector<eh::Atom> values;
    for (std::int64_t j = -6; j <= 6; ++j) {
      for (std::uint64_t t = 1; t <= 200; ++t) {
        const auto v = eh::nu(j, eh::Atom{t});
        values.push_back(v);
        if (eh::level(v) != eh::level(eh::Atom{t}) + 1) o.fail("level law at j=" + std::to_string(j));
      }
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end() || values.size() != 2600) {
      o.fail("nu not injective on sampled domain");
    }
    for (std::int64_t w = 1; w <= 3; ++w) {
      for (std::size_t d = 0; d <= 4; ++d) {
        const auto g = eh::gamma_generations({w, d});
        const auto r = eh::verify_labeling(g);
        if (!r.passed()) o.fail("labeling W=" + std::to_string(w) + " depth=" + std::to_string(d));
        for (std::size_t m = 0; m <= d; ++m) {
          const auto family = eh::prefix_family(g, m);
          const auto sdr = eh::hall_certificate_for_prefix(g, m);  // throws unless both routes agree
          if (!sdr.assignment || !eh::is_valid_sdr(family, *sdr.assignment)) o.fail("prefix SDR");
          if (eh::max_matching_size(family) != family.size()) o.fail("prefix matching");
        }
      }
    }
    std::mt19937_64 rng(5001);
    int checked = 0;
    while (checked < 500) {
      const auto f = eht::random_family(rng, 1, 6, 8);
      if (!eht::brute_hall(f)) continue;
      ++checked;
      if (!eh::hall_persistence_check(f, {1 + checked % 2, 0})) o.fail("persistence fails on " + family_str(f));
    }
    return o;
  });

  report("C6 first generation = singletons {nu(j,1)}, j <= 0, then I_1..I_W", 0, [] {
    Outcome o;
    for (std::int64_t w = 1; w <= 4; ++w) {
      const auto g = eh::gamma_generations({w, 1});
      std::vector<eh::IndexSet> expected;
      for (std::int64_t j = -w; j <= 0; ++j) expected.push_back(eh::IndexSet{eh::id(eh::nu(j, eh::Atom{1}))});
      for (std::int64_t j = 1; j <= w; ++j) expected.push_back(eh::i_set(j));
      std::vector<eh::IndexSet> got;
      for (const auto& s : g.generations[1]) got.push_back(s.set);
      if (got != expected) o.fail("mismatch at W=" + std::to_string(w));
    }
    return o;
  });

  report("C7 CLI sweep counts, fixture verdicts, byte-identical reruns", 0, [] {
    Outcome o;
    const auto sweep = run_tool("sweep --max-m 4 --max-atom 4");
    if (sweep.code != 0) o.fail("sweep exit " + std::to_string(sweep.code));
    const auto sj = eh::Json::parse(sweep.out).at("result");
    if (sj.at("families") != kSweepFamilies || sj.at("mismatches") != 0) o.fail("sweep counts " + sj.dump());

    struct Expect {
      const char* file;
      const char* verdict;
      eh::Json witness;
      eh::Json matching;
    };
    const std::vector<Expect> cases = {
        {"hall.json", "not_subordinate", nullptr, eh::Json::parse("[1,2]")},
        {"duplicate_singleton.json", "subordinate", 1, nullptr},
        {"empty.json", "not_subordinate", nullptr, eh::Json::array()},
    };
    for (const auto& c : cases) {
      const auto a = run_tool("analyze " + fixture(c.file));
      const auto b = run_tool("analyze " + fixture(c.file));
      if (a.code != 0) {
        o.fail(std::string(c.file) + " exit " + std::to_string(a.code));
        continue;
      }
      if (a.out != b.out) o.fail(std::string(c.file) + " reruns differ");
      const auto r = eh::Json::parse(a.out).at("result");
      if (r.at("verdict") != c.verdict || r.at("witness") != c.witness || r.at("matching") != c.matching) {
        o.fail(std::string(c.file) + " -> " + r.dump());
      }
    }
    const auto empty = eh::Json::parse(run_tool("analyze " + fixture("empty.json")).out).at("result");
    if (empty.at("euler_class") != "1" || empty.at("hall") != true) o.fail("empty family report");
    if (run_tool("sweep --max-m 4 --max-atom 4").out != sweep.out) o.fail("sweep reruns differ");
    return o;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
