#include <gtest/gtest.h>

#include <random>

#include "eulerhall/errors.hpp"
#include "eulerhall/exterior_ring.hpp"
#include "oracles.hpp"

namespace eulerhall {
namespace {

RingElement x(std::uint64_t n) { return generator(Atom{n}); }

TEST(ExteriorRing, GeneratorIsSingleDegreeOneTerm) {
  const auto e = x(1);
  ASSERT_EQ(e.terms().size(), 1U);
  EXPECT_EQ(e.coeff(Monomial{1}), 1);
  EXPECT_EQ(e.homogeneous_degree(), 1U);
  EXPECT_THROW(generator(Atom{0}), InvalidInput);
}

TEST(ExteriorRing, GeneratorsSquareToZero) {
  EXPECT_TRUE(mul(x(1), x(1)).is_zero());
  EXPECT_EQ(mul(x(1), x(2)), RingElement::term(Monomial{1, 2}, 1));
}

TEST(ExteriorRing, Addition) {
  EXPECT_EQ(add(x(1), x(1)), RingElement::term(Monomial{1}, 2));
  EXPECT_TRUE(add(x(1), -x(1)).is_zero());
  EXPECT_TRUE(add(x(1), -x(1)).terms().empty());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto e = testing::random_element(rng);
    EXPECT_EQ(add(RingElement::zero(), e), e);
  }
}

TEST(ExteriorRing, MultiplicationUnderSquarefreeReduction) {
  EXPECT_EQ(mul(x(1) + x(2), x(2)), RingElement::term(Monomial{1, 2}, 1));
  EXPECT_EQ(mul(x(1) + x(2), x(1) + x(2)), RingElement::term(Monomial{1, 2}, 2));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto e = testing::random_element(rng);
    EXPECT_EQ(mul(e, RingElement::one()), e);
  }
}

TEST(ExteriorRing, Coefficients) {
  const auto e = RingElement::term(Monomial{1, 2}, 2);
  EXPECT_EQ(coeff(e, Monomial{1, 2}), 2);
  EXPECT_EQ(coeff(e, Monomial{1}), 0);
  EXPECT_EQ(coeff(RingElement::zero(), Monomial{}), 0);
  EXPECT_TRUE(is_zero(RingElement::zero()));
  EXPECT_FALSE(is_zero(x(1)));
}

TEST(ExteriorRing, MonomialRejectsRepeats) {
  EXPECT_THROW((Monomial{1, 1}), InvalidInput);
  EXPECT_EQ((Monomial{3, 1, 2}), (Monomial{1, 2, 3}));
}

TEST(ExteriorRing, ProductOfGeneratorsExamples) {
  const std::vector<Atom> a{Atom{2}, Atom{1}};
  EXPECT_EQ(product_of_generators(a, 2), RingElement::term(Monomial{1, 2}, 1));
  const std::vector<Atom> b{Atom{1}, Atom{1}};
  EXPECT_TRUE(product_of_generators(b, 2).is_zero());
  const std::vector<Atom> c{Atom{3}, Atom{1}, Atom{2}};
  EXPECT_EQ(product_of_generators(c, 3), RingElement::term(Monomial{1, 2, 3}, 1));
  EXPECT_THROW(product_of_generators(c, 2), InvalidInput);
  const std::vector<Atom> d{Atom{3}, Atom{1}};
  EXPECT_THROW(product_of_generators(d, 2), InvalidInput);
}

// All N^N sequences for N <= 5 against the distinct/zero rule and a fold of mul.
TEST(ExteriorRing, ProductRuleExhaustive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::uint64_t> seq(n, 1);
    while (true) {
      std::vector<Atom> atoms;
      RingElement folded = RingElement::one();
      for (auto v : seq) {
        atoms.push_back(Atom{v});
        folded = folded * x(v);
      }
      std::vector<std::uint64_t> sorted = seq;
      std::sort(sorted.begin(), sorted.end());
      const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      const auto got = product_of_generators(atoms, n);
      EXPECT_EQ(got, folded);
      EXPECT_EQ(got.is_zero(), !distinct);
      if (distinct) EXPECT_EQ(got, RingElement::term(top_class(n), 1));
      std::size_t i = 0;
      while (i < n && ++seq[i] > n) seq[i++] = 1;
      if (i == n) break;
    }
  }
}

TEST(ExteriorRing, RingAxiomsRandomized) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const auto a = testing::random_element(rng);
    const auto b = testing::random_element(rng);
    const auto c = testing::random_element(rng);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
  }
}

TEST(ExteriorRing, GradingOfHomogeneousProducts) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> deg(0, 4);
  auto homogeneous = [&](std::size_t d) {
    RingElement e;
    std::vector<std::uint64_t> pool{1, 2, 3, 4, 5, 6};
    for (int t = 0; t < 3; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<Atom> atoms;
      for (std::size_t k = 0; k < d; ++k) atoms.push_back(Atom{pool[k]});
      e = e + RingElement::term(Monomial(atoms), static_cast<int>(rng() % 7) + 1);
    }
    return e;
  };
  for (int i = 0; i < 500; ++i) {
    const auto d1 = deg(rng), d2 = deg(rng);
    const auto p = homogeneous(d1) * homogeneous(d2);
    if (!p.is_zero()) EXPECT_EQ(p.homogeneous_degree(), d1 + d2);
  }
}

TEST(ExteriorRing, ProductsBeyondTopDegreeVanish) {
  std::mt19937_64 rng(5);
  for (std::uint64_t n = 1; n <= 5; ++n) {
    std::uniform_int_distribution<std::uint64_t> atom(1, n);
    for (int trial = 0; trial < 50; ++trial) {
      RingElement p = RingElement::one();
      for (std::uint64_t k = 0; k <= n; ++k) {
        RingElement linear;
        for (int t = 0; t < 3; ++t) linear = linear + RingElement::term(Monomial{atom(rng)}, 1 + trial % 4);
        p = p * linear;
      }
      EXPECT_TRUE(p.is_zero());
    }
  }
}

TEST(ExteriorRing, TextRendering) {
  EXPECT_EQ(RingElement::zero().to_string(), "0");
  EXPECT_EQ(RingElement::one().to_string(), "1");
  const auto e = RingElement::term(Monomial{1, 2}, 2) + RingElement::term(Monomial{3, 4}, 1);
  EXPECT_EQ(e.to_string(), "2*x1*x2 + x3*x4");
  EXPECT_EQ((x(2) - RingElement::term(Monomial{1, 3}, 3)).to_string(), "x2 - 3*x1*x3");
  EXPECT_EQ((-x(1)).to_string(), "-x1");
}

}  // namespace
}  // namespace eulerhall
