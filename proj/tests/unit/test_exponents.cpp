#include <vsft/errors.hpp>
#include <vsft/exponents.hpp>
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

}  // namespace

TEST(Exponents, SparseStorageAndRendering) {
  auto e = ev({0, Rational(3, 2), 0});
  EXPECT_EQ(e.dim(), 3u);
  EXPECT_EQ(e.entries().size(), 1u);
  EXPECT_EQ(e[1], Rational(3, 2));
  EXPECT_EQ(e.to_string(), "(0, 3/2, 0)");
  std::vector<std::string> names{"y", "x1", "x2"};
  EXPECT_EQ(render_monomial(ev({2, -1, -1}), names), "y^2/(x1*x2)");
  EXPECT_EQ(render_monomial(ExponentVector(3), names), "1");
}

TEST(Exponents, AddAndScaleExamples) {
  EXPECT_EQ(monoid_add(ev({1, 0}), ev({0, 1})), ev({1, 1}));
  EXPECT_EQ(scalar_multiple(ev({1, -1}), 3), ev({3, -3}));
  EXPECT_EQ(scalar_multiple(ev({Rational(3, 2)}), 2), ev({3}));
  EXPECT_TRUE((ev({1, -1}) + ev({-1, 1})).is_zero());
}

TEST(Exponents, GradedLexOrder) {
  EXPECT_LT(ev({0, 1}), ev({1, 0}));  // same degree, first axis dominates
  EXPECT_LT(ev({1, 0}), ev({0, 2}));  // lower degree first
}

TEST(Exponents, MonoidConstructionChecks) {
  EXPECT_THROW(MonoidPresentation(2, {ev({1, -2})}, {1, 1}), PreconditionViolated);
  EXPECT_THROW(MonoidPresentation(2, {ev({1, 0}), ev({1, 0})}, {1, 1}), PreconditionViolated);
  EXPECT_THROW(MonoidPresentation(2, {ev({1, 0, 0})}, {1, 1}), PreconditionViolated);
}

TEST(Exponents, DyadicMembershipExamples) {
  const auto s = dyadic(8).monoid();
  auto w = s.member(ev({2}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->multiplicities, (std::map<std::size_t, std::uint64_t>{{0, 2}}));
  w = s.member(ev({Rational(5, 2)}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->multiplicities, (std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 1}}));
  EXPECT_FALSE(s.member(ev({Rational(11, 4)})));
  // Brute-force enumeration agrees on the refutation.
  auto all = oracle::monoid_elements(s.generators(), s.grading(), 4, 1);
  EXPECT_FALSE(all.count(ev({Rational(11, 4)})));
  EXPECT_TRUE(all.count(ev({Rational(5, 2)})));
}

TEST(Exponents, GeneratorsAndZeroAreMembers) {
  const auto s = fraction_monoid(3, 2).monoid();
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    auto w = s.member(s.generators()[i]);
    ASSERT_TRUE(w);
    EXPECT_EQ(s.evaluate(*w), s.generators()[i]);
  }
  auto z = s.member(ExponentVector(s.dim()));
  ASSERT_TRUE(z);
  EXPECT_TRUE(z->multiplicities.empty());
}

TEST(Exponents, BudgetOverrunThrows) {
  const auto s = dyadic(8).monoid();
  EXPECT_THROW(s.member(ev({Rational(1001, 256)}), SearchBudget{3}), BudgetExceeded);
}

TEST(Exponents, FreeAxisExtension) {
  const auto s = dyadic(3).monoid().with_free_axis();
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(ev({Rational(3, 2), 4})));
  EXPECT_FALSE(s.contains(ev({Rational(1, 2), 1})));
}

// Random rank <= 3 monoids against the brute-force enumerator.
TEST(Exponents, PropertyMembershipMatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<Rational> grading(dim);
    for (auto& g : grading) g = Rational(1 + static_cast<std::int64_t>(rng() % 3));
    const std::int64_t den = (rng() % 3 == 0) ? 2 : 1;
    std::vector<ExponentVector> gens;
    while (gens.size() < 2 + rng() % 3) {
      std::vector<Rational> v(dim);
      Rational grade = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] = Rational(static_cast<std::int64_t>(rng() % 7) - 2, den);
        grade += grading[i] * v[i];
      }
      auto e = ExponentVector::from_dense(v);
      if (grade <= 0 || grade > 6) continue;
      if (std::find(gens.begin(), gens.end(), e) != gens.end()) continue;
      gens.push_back(e);
    }
    MonoidPresentation s(dim, gens, grading);
    const Rational bound = 20;
    auto members = oracle::monoid_elements(gens, grading, bound, dim);
    for (const auto& m : members) {
      auto w = s.member(m);
      ASSERT_TRUE(w) << m.to_string();
      EXPECT_EQ(s.evaluate(*w), m);
    }
    // Random targets with grade <= 20: none answers must be exhaustive.
    for (int t = 0; t < 200; ++t) {
      std::vector<Rational> v(dim);
      Rational grade = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        v[i] = Rational(static_cast<std::int64_t>(rng() % 25) - 8, den);
        grade += grading[i] * v[i];
      }
      if (grade > bound) continue;
      auto target = ExponentVector::from_dense(v);
      EXPECT_EQ(s.contains(target), members.count(target) == 1) << target.to_string();
    }
  }
}

namespace {

std::int64_t k_max_probe(const std::vector<ExponentVector>& gens) { return gens.front()[0].ceil(); }

}  // namespace

// The rank-1 reachability table agrees with the search it replaces.
TEST(Exponents, PropertyRankOneTableMatchesSearch) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 6);
    std::vector<ExponentVector> gens;
    while (gens.size() < 1 + rng() % 5) {
      auto e = ev({Rational(1 + static_cast<std::int64_t>(rng() % (5 * den)), den)});
      if (std::find(gens.begin(), gens.end(), e) == gens.end()) gens.push_back(e);
    }
    MonoidPresentation s(1, gens, {1});
    for (std::int64_t k = -3; k <= 12 * den; ++k) {
      const auto target = ev({Rational(k, den)});
      EXPECT_EQ(s.contains(target), s.member(target).has_value()) << target.to_string();
    }
    const auto t = s.with_free_axis();
    for (std::int64_t k = -1; k <= 6 * den; ++k)
      for (std::int64_t j = -1; j <= 2; ++j) {
        const auto target = ev({Rational(k, den), Rational(j)});
        EXPECT_EQ(t.contains(target), t.member(target).has_value()) << target.to_string();
      }
    EXPECT_FALSE(t.contains(ev({Rational(k_max_probe(gens)), Rational(1, 2)})));
  }
}
