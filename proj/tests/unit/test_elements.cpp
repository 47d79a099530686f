#include <vsft/elements.hpp>
#include <vsft/models.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vsft;

namespace {

ExponentVector ev(std::initializer_list<Rational> xs) {
  std::vector<Rational> v(xs);
  return ExponentVector::from_dense(v);
}

/// Integer coefficient list of an element of the integer model, indexed by x-degree.
std::vector<BigInt> coefficients(const PolyElement& f) {
  std::vector<BigInt> c;
  for (const auto& [key, coeff] : f.terms()) {
    EXPECT_TRUE(key[0].is_zero());
    auto k = static_cast<std::size_t>(key[1].num());
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] += coeff;
  }
  return c;
}

/// Z + 2xZ[x]: every positive-degree coefficient is even.
bool oracle_in_ring(const PolyElement& f) {
  auto c = coefficients(f);
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] % 2 != 0) return false;
  return true;
}

/// f in 2R: constant term even, positive-degree coefficients divisible by 4.
bool oracle_in_two(const PolyElement& f) {
  auto c = coefficients(f);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] % (k == 0 ? 2 : 4) != 0) return false;
  return true;
}

PolyElement random_ring_element(const RingPtr& ring, std::mt19937_64& rng, int degree) {
  PolyElement f = PolyElement::constant(ring, static_cast<std::int64_t>(rng() % 9) - 4);
  for (int k = 1; k <= degree; ++k) {
    auto c = static_cast<std::int64_t>(rng() % 9) - 4;
    if (c != 0) f += PolyElement::monomial(ring, ev({0, k}), 2 * c);
  }
  return f;
}

}  // namespace

TEST(Elements, FrobeniusSquareOfSumVanishes) {
  auto frob = frobenius_quotient(2, 3);
  auto x1 = PolyElement::monomial(frob.ring, ev({1, 0, 0}));
  auto x2 = PolyElement::monomial(frob.ring, ev({0, 1, 0}));
  EXPECT_TRUE(element_power(x1 + x2, 2).is_zero());
  EXPECT_FALSE(element_multiply(x1, x2).is_zero());
  auto f = x1 + x2;
  EXPECT_EQ(element_power(f, 1), f);
}

TEST(Elements, IntegerModelProductsAndMembership) {
  auto z = int_plus_2x(10);
  auto two_x = PolyElement::monomial(z.ring, ev({1, 1}));
  auto two_x2 = PolyElement::monomial(z.ring, ev({1, 2}));
  auto prod = element_multiply(two_x, two_x2);
  EXPECT_EQ(prod, PolyElement::monomial(z.ring, ev({0, 3}), 4));
  EXPECT_EQ(prod.to_string(), "4*x^3");
  EXPECT_TRUE(element_in_ideal(prod, z.ideal("2")));
  EXPECT_FALSE(element_in_ideal(two_x, z.ideal("2")));
  EXPECT_TRUE(element_in_ring(two_x));
  EXPECT_FALSE(element_in_ring(PolyElement::monomial(z.ring, ev({0, 1}))));
}

TEST(Elements, CubeIsZeroInCharThree) {
  auto frob = frobenius_quotient(3, 2);
  auto x1 = PolyElement::monomial(frob.ring, ev({1, 0}));
  auto cube = element_power(x1, 3);
  EXPECT_TRUE(cube.is_zero());
  EXPECT_TRUE(element_in_ideal(cube, frob.ideal("zero")));
  EXPECT_FALSE(element_in_ideal(element_power(x1, 2), frob.ideal("zero")));
  // Coefficients reduce mod p.
  EXPECT_TRUE(PolyElement::monomial(frob.ring, ev({1, 0}), 3).is_zero());
}

TEST(Elements, RandomElementIsDeterministic) {
  auto frob = frobenius_quotient(2, 3);
  auto f = random_element(frob.ring, frob.ideal("M"), 0);
  EXPECT_EQ(f, random_element(frob.ring, frob.ideal("M"), 0));
  EXPECT_EQ(f.to_string(), "x1*x3");
  int differing = 0;
  for (std::uint64_t s = 1; s <= 50; ++s) differing += random_element(frob.ring, frob.ideal("M"), s) != f;
  EXPECT_GT(differing, 25);
}

TEST(Elements, PropertyRandomElementsLieInTheirIdeal) {
  for (const auto& model : {frobenius_quotient(3, 3), char2_xy(3, 10), int_plus_2x(6), dyadic(5), fraction_monoid(3, 2)}) {
    const std::string name = model.name == "frobenius" || model.name == "dyadic" ? "M" : "I";
    auto i = model.ideal(name);
    for (std::uint64_t s = 0; s < 100; ++s) {
      auto f = random_element(model.ring, i, s);
      EXPECT_TRUE(element_in_ideal(f, i)) << model.name << " seed " << s;
      EXPECT_TRUE(element_in_ring(f)) << model.name << " seed " << s;
    }
  }
}

TEST(Elements, PropertyFrobeniusLinearity) {
  for (std::int64_t p : {2, 3}) {
    auto frob = frobenius_quotient(p, 3);
    auto m = frob.ideal("M");
    for (std::uint64_t s = 0; s < 60; ++s) {
      auto f = random_element(frob.ring, m, 2 * s);
      auto g = random_element(frob.ring, m, 2 * s + 1);
      for (std::uint64_t q : {static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p * p)})
        EXPECT_EQ(element_power(f + g, q), element_power(f, q) + element_power(g, q));
    }
  }
  // Exhaustive in F_2[x1, x2] / (x1^2, x2^2): all 16 elements.
  auto tiny = frobenius_quotient(2, 2);
  std::vector<ExponentVector> basis{ev({0, 0}), ev({1, 0}), ev({0, 1}), ev({1, 1})};
  auto build = [&](unsigned mask) {
    PolyElement f(tiny.ring);
    for (unsigned b = 0; b < 4; ++b)
      if (mask >> b & 1u) f += PolyElement::monomial(tiny.ring, basis[b]);
    return f;
  };
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b)
      EXPECT_EQ(element_power(build(a) + build(b), 2), element_power(build(a), 2) + element_power(build(b), 2));
}

TEST(Elements, PropertyIntegerModelClosure) {
  auto z = int_plus_2x(10);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    auto f = random_ring_element(z.ring, rng, 4);
    auto g = random_ring_element(z.ring, rng, 4);
    for (const auto& h : {f, g, f + g, f - g, f * g}) {
      EXPECT_TRUE(oracle_in_ring(h));
      EXPECT_TRUE(element_in_ring(h)) << h.to_string();
      EXPECT_EQ(element_in_ideal(h, z.ideal("2")), oracle_in_two(h)) << h.to_string();
    }
  }
}

TEST(Elements, PropertyGeneratorPairsLandInTwo) {
  auto z = int_plus_2x(10);
  const auto& gens = z.ideals.at("I");
  for (const auto& a : gens)
    for (const auto& b : gens) {
      auto prod = PolyElement::monomial(z.ring, a) * PolyElement::monomial(z.ring, b);
      EXPECT_TRUE(oracle_in_two(prod));
      EXPECT_TRUE(element_in_ideal(prod, z.ideal("2")));
    }
}
