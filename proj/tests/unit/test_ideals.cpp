#include <vsft/errors.hpp>
#include <vsft/ideals.hpp>
#include <vsft/models.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace vsft;

namespace {

ExponentVector ev(std::initializer_list<Rational> xs) {
  std::vector<Rational> v(xs);
  return ExponentVector::from_dense(v);
}

std::set<ExponentVector> as_set(const MonomialIdeal& i) {
  return {i.generators().begin(), i.generators().end()};
}


}  // namespace

TEST(Ideals, MemberExamples) {
  auto frob = frobenius_quotient(2, 3);
  auto m = frob.ideal("M");
  EXPECT_TRUE(ideal_member(m, ev({1, 1, 0})));
  EXPECT_FALSE(ideal_member(m, ExponentVector(3)));

  auto fm = fraction_monoid(5, 4);
  auto witness = ev({2, -1, -1, 0, 0, 0});
  EXPECT_FALSE(ideal_member(fm.ideal("y"), witness));
  // Brute force on the smallest model carrying the witness: grade 8 minus the
  // least generator grade 3 bounds every quotient t - g.
  auto small = fraction_monoid(2, 2);
  auto brute = oracle::brute_for(small, 5);
  EXPECT_FALSE(brute.member(small.ideals.at("y"), ev({2, -1, -1})));
  EXPECT_FALSE(ideal_member(small.ideal("y"), ev({2, -1, -1})));
}

TEST(Ideals, PowerExamples) {
  auto ctx = std::make_shared<const MonomialContext>(
      MonoidPresentation(2, {ev({1, 0}), ev({0, 1})}, {1, 1}));
  MonomialIdeal i(ctx, {ev({1, 0}), ev({0, 1})});
  EXPECT_EQ(as_set(ideal_power(i, 2)), (std::set<ExponentVector>{ev({2, 0}), ev({1, 1}), ev({0, 2})}));
  EXPECT_EQ(as_set(ideal_power(i, 1)), as_set(i));

  auto z = int_plus_2x(10);
  auto sq = ideal_power(z.ideal("I"), 2);
  std::set<ExponentVector> expected;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b) expected.insert(ev({2, a + b}));
  // Every pair product 4x^(a+b) is present up to redundancy; the power's
  // generators are exactly the irredundant ones of that set.
  for (const auto& g : sq.generators()) EXPECT_TRUE(expected.count(g));
  for (const auto& e : expected) EXPECT_TRUE(ideal_member(sq, e));
  for (const auto& e : expected) EXPECT_TRUE(ideal_member(z.ideal("2"), e));
}

TEST(Ideals, ContainsExamples) {
  auto frob = frobenius_quotient(3, 2);
  auto zero = frob.ideal("zero");
  MonomialIdeal cube(frob.context(), {ev({3, 0})});
  EXPECT_TRUE(cube.is_zero_ideal());
  EXPECT_TRUE(ideal_contains(zero, cube));
  EXPECT_TRUE(ideal_member(zero, ev({3, 0})));
  EXPECT_TRUE(ideal_contains(frob.ideal("M"), frob.ideal("M")));

  auto xy = char2_xy(3, 10);
  MonomialIdeal sq(xy.context(), {ev({2, 2, 0, 0})});
  EXPECT_TRUE(ideal_contains(xy.ideal("x2"), sq));
  EXPECT_FALSE(ideal_contains(xy.ideal("x2"), xy.ideal("I")));
}

TEST(Ideals, RejectsGeneratorsOutsideMonoid) {
  auto frob = frobenius_quotient(2, 2);
  EXPECT_THROW(MonomialIdeal(frob.context(), {ev({-1, 0})}), PreconditionViolated);
}

TEST(Ideals, RadicalMemberExamples) {
  auto d = dyadic(8);
  auto r = radical_member(d.ideal("2"), ev({Rational(3, 2)}), 10);
  EXPECT_EQ(r.status, BoundedStatus::Verified);
  EXPECT_EQ(r.index, 2u);
  r = radical_member(d.ideal("2"), ev({1}), 10);
  EXPECT_EQ(r.index, 1u);

  auto frob = frobenius_quotient(3, 2);
  r = radical_member(frob.ideal("zero"), ev({1, 0}), 10);
  EXPECT_EQ(r.status, BoundedStatus::Verified);
  EXPECT_EQ(r.index, 3u);

  r = radical_member(d.ideal("2"), ExponentVector(1), 10);
  EXPECT_EQ(r.status, BoundedStatus::Refuted);
  auto fm = fraction_monoid(2, 1);
  r = radical_member(fm.ideal("y"), ev({0, 1, 0}), 5);
  EXPECT_EQ(r.status, BoundedStatus::Inconclusive);
}

TEST(Ideals, NilpotencyExamplesAgainstEnumeration) {
  auto xy = char2_xy(2, 10);
  auto n = nilpotency_index(xy.ideal("I"), xy.ideal("x2"), 10);
  EXPECT_EQ(n.status, BoundedStatus::Verified);
  EXPECT_EQ(n.index, 3u);
  auto brute = oracle::brute_for(xy, 8);
  EXPECT_EQ(brute.least_power(xy.ideals.at("I"), xy.ideals.at("x2"), 3, 6), 3u);

  auto frob = frobenius_quotient(2, 3);
  n = nilpotency_index(frob.ideal("M"), frob.ideal("zero"), 10);
  EXPECT_EQ(n.index, 4u);
  auto bf = oracle::brute_for(frob, 6);
  EXPECT_EQ(bf.least_power(frob.ideals.at("M"), {}, 3, 6), 4u);

  n = nilpotency_index(frob.ideal("M"), frob.ideal("M"), 10);
  EXPECT_EQ(n.index, 1u);
}

TEST(Ideals, NilpotencyPreconditionAndInconclusive) {
  auto frob = frobenius_quotient(2, 3);
  EXPECT_THROW(nilpotency_index(frob.ideal("zero"), frob.ideal("M"), 5), PreconditionViolated);
  auto fm = fraction_monoid(3, 2);
  auto n = nilpotency_index(fm.ideal("I"), fm.ideal("y"), 1);
  EXPECT_EQ(n.status, BoundedStatus::Inconclusive);
}

TEST(Ideals, LexLeastProductOutside) {
  auto fm = fraction_monoid(5, 4);
  const auto& gens = fm.ideals.at("I");
  auto w = lex_least_product_outside(gens, 2, fm.ideal("y"), true);
  ASSERT_TRUE(w);
  EXPECT_EQ(fm.render(w->product), "y^2/(x1*x2)");
  EXPECT_FALSE(lex_least_product_outside(gens, 2, fm.ideal("y"), false) == std::nullopt);
  auto z = int_plus_2x(6);
  EXPECT_FALSE(lex_least_product_outside(z.ideals.at("I"), 2, z.ideal("2")));
}

TEST(Ideals, PropertyPowerMonotoneAndProductConsistent) {
  for (const auto& model : {frobenius_quotient(3, 2), char2_xy(3, 10), int_plus_2x(4), dyadic(4)}) {
    const std::string name = model.name == "frobenius" ? "M" : model.name == "dyadic" ? "M" : "I";
    auto i = model.ideal(name);
    for (std::uint64_t m = 1; m <= 3; ++m) {
      auto next = ideal_power(i, m + 1);
      auto prod = ideal_product(ideal_power(i, m), i);
      EXPECT_TRUE(ideal_contains(prod, next));
      EXPECT_TRUE(ideal_contains(next, prod));
      EXPECT_TRUE(ideal_contains(ideal_power(i, m), next));
    }
  }
}

TEST(Ideals, PropertyContainsIsPartialOrder) {
  auto xy = char2_xy(3, 10);
  std::vector<MonomialIdeal> ideals{xy.ideal("I"), xy.ideal("x2"), xy.ideal("Isq"), ideal_power(xy.ideal("I"), 2),
                                    ideal_power(xy.ideal("I"), 3)};
  for (const auto& a : ideals) {
    EXPECT_TRUE(ideal_contains(a, a));
    for (const auto& b : ideals)
      for (const auto& c : ideals)
        if (ideal_contains(a, b) && ideal_contains(b, c)) EXPECT_TRUE(ideal_contains(a, c));
  }
}

TEST(Ideals, PropertyCatalogDataSitBetweenSubAndRadical) {
  struct Data {
    RingModel model;
    std::string ideal, sub;
  };
  std::vector<Data> data{{frobenius_quotient(2, 5), "M", "zero"}, {frobenius_quotient(5, 3), "M", "zero"},
                         {fraction_monoid(5, 4), "I", "y"},      {int_plus_2x(10), "I", "2"},
                         {char2_xy(5, 10), "I", "x2"},           {dyadic(8), "M", "2"},
                         {rational_valuation(6), "xV", "x"}};
  for (const auto& d : data) {
    auto i = d.model.ideal(d.ideal);
    auto b = d.model.ideal(d.sub);
    EXPECT_TRUE(ideal_contains(i, b)) << d.model.name;
    for (const auto& g : i.generators())
      EXPECT_EQ(radical_member(b, g, 16).status, BoundedStatus::Verified) << d.model.name << " " << g.to_string();
  }
}

TEST(Ideals, PropertyNilpotencyIgnoresGeneratorOrder) {
  std::mt19937_64 rng(5);
  for (const auto& model : {char2_xy(3, 10), frobenius_quotient(3, 2), dyadic(4)}) {
    const std::string name = model.name == "char2_xy" ? "I" : "M";
    const std::string sub = model.name == "char2_xy" ? "x2" : model.name == "dyadic" ? "2" : "zero";
    auto base = nilpotency_index(model.ideal(name), model.ideal(sub), 12);
    auto gens = model.ideals.at(name);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(gens.begin(), gens.end(), rng);
      auto n = nilpotency_index(MonomialIdeal(model.context(), gens), model.ideal(sub), 12);
      EXPECT_EQ(n.status, base.status);
      EXPECT_EQ(n.index, base.index);
    }
  }
}

TEST(Ideals, PropertyFrobeniusWitnessAndVanishing) {
  for (std::int64_t v = 1; v <= 8; ++v) {
    auto frob = frobenius_quotient(2, v);
    const auto& gens = frob.ideals.at("M");
    ExponentVector all(static_cast<std::size_t>(v));
    for (const auto& g : gens) all += g;
    EXPECT_FALSE(frob.context()->is_zero(all));
    bool every_zero = true;
    oracle::enumerate_multisets(gens.size(), static_cast<std::size_t>(v + 1), false,
                                [&](const std::vector<std::size_t>& ix) {
                                  ExponentVector prod(static_cast<std::size_t>(v));
                                  for (auto i : ix) prod += gens[i];
                                  every_zero = every_zero && frob.context()->is_zero(prod);
                                });
    EXPECT_TRUE(every_zero) << v;
  }
  // For odd p the witness still survives; products vanish from v(p-1)+1 factors on.
  for (std::int64_t p : {3, 5})
    for (std::int64_t v = 1; v <= 3; ++v) {
      auto frob = frobenius_quotient(p, v);
      ExponentVector all(static_cast<std::size_t>(v));
      for (const auto& g : frob.ideals.at("M")) all += g;
      EXPECT_FALSE(frob.context()->is_zero(all));
      auto n = nilpotency_index(frob.ideal("M"), frob.ideal("zero"), 20);
      EXPECT_EQ(n.index, static_cast<std::uint64_t>(v * (p - 1) + 1));
    }
}
