#include <vsft/errors.hpp>
#include <vsft/sftcheck.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vsft;

namespace {

ExponentVector ev(std::initializer_list<Rational> xs) {
  std::vector<Rational> v(xs);
  return ExponentVector::from_dense(v);
}

/// Every monomial witness of a refutation lies outside the sub-ideal.
void expect_witnesses_reverify(const VerificationReport& r, const MonomialIdeal& sub) {
  ASSERT_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) {
    ASSERT_TRUE(w.exponent) << w.rendered;
    EXPECT_FALSE(ideal_member(sub, *w.exponent)) << w.rendered;
    EXPECT_FALSE(sub.context()->is_zero(*w.exponent)) << w.rendered;
  }
}

}  // namespace

TEST(SftCheck, DataPreconditions) {
  auto frob = frobenius_quotient(2, 3);
  EXPECT_THROW(make_sft_data(frob, "M", "zero", 0), PreconditionViolated);
  EXPECT_THROW(make_sft_data(frob, "zero", "M", 2), PreconditionViolated);
  EXPECT_THROW(make_sft_data(frob, "N", "zero", 2), PreconditionViolated);
  auto other = frobenius_quotient(3, 3);
  EXPECT_THROW(make_sft_data(frob.ideal("M"), other.ideal("zero"), 2), PreconditionViolated);
}

TEST(SftCheck, SftGeneratorExamples) {
  auto xy = char2_xy(5, 10);
  EXPECT_EQ(verify_sft_generators(xy, make_sft_data(xy, "I", "x2", 2)).verdict, Verdict::Verified);
  auto d = dyadic(8);
  EXPECT_EQ(verify_sft_generators(d, make_sft_data(d, "M", "2", 2)).verdict, Verdict::Verified);
  auto frob = frobenius_quotient(2, 3);
  auto data = make_sft_data(frob, "M", "zero", 1);
  auto r = verify_sft_generators(frob, data);
  EXPECT_EQ(r.verdict, Verdict::RefutedWithWitness);
  expect_witnesses_reverify(r, data.sub);
}

TEST(SftCheck, CertificateExamples) {
  auto frob = frobenius_quotient(2, 5);
  auto r = certify_sft_all_elements(frob, make_sft_data(frob, "M", "zero", 2));
  EXPECT_EQ(r.verdict, Verdict::Verified);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->kind, CertificateKind::FrobeniusCharP);
  EXPECT_TRUE(r.qualifier.empty());

  auto d = dyadic(8);
  r = certify_sft_all_elements(d, make_sft_data(d, "M", "2", 2));
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->kind, CertificateKind::DiagonalDominanceChar0);

  auto z = int_plus_2x(10);
  CheckOptions opts;
  opts.samples = 50;
  opts.seed = 9;
  r = certify_sft_all_elements(z, make_sft_data(z, "I", "2", 3), opts);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->kind, CertificateKind::SampledOnly);
  EXPECT_EQ(r.qualifier, "on samples");
  EXPECT_EQ(r.samples, 50u);
  EXPECT_EQ(r.seed, 9u);
}

TEST(SftCheck, ExhaustiveCertificateOnSmallFiniteModel) {
  // Index 3 in characteristic 2 is no power of p; the 2-variable quotient is small.
  auto frob = frobenius_quotient(2, 2);
  auto r = certify_sft_all_elements(frob, make_sft_data(frob, "M", "zero", 3));
  EXPECT_EQ(r.verdict, Verdict::Verified);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->kind, CertificateKind::ExhaustiveFinite);
}

TEST(SftCheck, VsftExamples) {
  auto z = int_plus_2x(10);
  EXPECT_EQ(verify_vsft(z, make_sft_data(z, "I", "2", 2)).verdict, Verdict::Verified);

  auto fm = fraction_monoid(5, 4);
  auto data = make_sft_data(fm, "I", "y", 2);
  auto r = verify_vsft(fm, data);
  EXPECT_EQ(r.verdict, Verdict::RefutedWithWitness);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].rendered, "(y/x1)(y/x2)");
  expect_witnesses_reverify(r, data.sub);
  auto small = fraction_monoid(2, 2);
  auto small_r = verify_vsft(small, make_sft_data(small, "I", "y", 2));
  ASSERT_EQ(small_r.witnesses.size(), 1u);
  EXPECT_EQ(small_r.witnesses[0].rendered, "(y/x1)(y/x2)");
  EXPECT_FALSE(oracle::brute_for(small, 5).member(small.ideals.at("y"), *small_r.witnesses[0].exponent));

  auto rv = rational_valuation(6);
  EXPECT_EQ(verify_vsft(rv, make_sft_data(rv, "xV", "x", 2)).verdict, Verdict::Verified);
}

TEST(SftCheck, FindWitnessExamples) {
  auto d = dyadic(8);
  auto w = find_vsft_witness(d.ideal("M"), d.ideal("2"), 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->product, ev({Rational(15, 4)}));
  EXPECT_EQ(w->factors, (std::vector<std::size_t>{1, 2}));
  // The factor 2 leaves 11/4, which brute force confirms is not in S.
  auto all = oracle::monoid_elements(d.monoid().generators(), d.monoid().grading(), 4, 1);
  EXPECT_FALSE(all.count(ev({Rational(11, 4)})));

  auto xy = char2_xy(4, 10);
  w = find_vsft_witness(xy.ideal("I"), xy.ideal("x2"), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->factors, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(xy.render(w->product), "x^3*y1*y2*y3");

  auto z = int_plus_2x(10);
  for (std::uint64_t k = 1; k <= 4; ++k) EXPECT_FALSE(find_vsft_witness(z.ideal("I"), z.ideal("I"), k));
  for (std::uint64_t k = 2; k <= 4; ++k) EXPECT_FALSE(find_vsft_witness(z.ideal("I"), z.ideal("2"), k));
  EXPECT_THROW(find_vsft_witness(xy.ideal("I"), xy.ideal("x2"), 6), PreconditionViolated);
}

TEST(SftCheck, WitnessFamilies) {
  auto d = dyadic(8);
  auto r = vsft_witness_family(d, d.ideal("M"), d.ideal("2"), 2, 8);
  EXPECT_EQ(r.verdict, Verdict::RefutedFamily);
  EXPECT_EQ(r.witnesses.size(), 7u);
  expect_witnesses_reverify(r, d.ideal("2"));

  auto z = int_plus_2x(10);
  r = vsft_witness_family(z, z.ideal("I"), z.ideal("2"), 2, 6);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_FALSE(r.qualifier.empty());
}

TEST(SftCheck, MinimalIndexExamples) {
  auto xy = char2_xy(2, 10);
  auto r = minimal_vsft_index(xy, xy.ideal("I"), xy.ideal("x2"), 10);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.index, 3u);
  auto brute = oracle::brute_for(xy, 8);
  EXPECT_EQ(brute.least_power(xy.ideals.at("I"), xy.ideals.at("x2"), 3, 6), 3u);

  auto frob = frobenius_quotient(2, 3);
  r = minimal_vsft_index(frob, frob.ideal("M"), frob.ideal("M"), 5);
  EXPECT_EQ(r.index, 1u);

  for (std::int64_t v = 2; v <= 6; ++v) {
    auto m = char2_xy(v, 10);
    r = minimal_vsft_index(m, m.ideal("I"), m.ideal("x2"), 10);
    EXPECT_EQ(r.index, static_cast<std::uint64_t>(v + 1)) << v;
  }

  auto fm = fraction_monoid(2, 1);
  r = minimal_vsft_index(fm, fm.ideal("y"), fm.ideal("I"), 5);
  EXPECT_EQ(r.verdict, Verdict::PreconditionFailed);
}

TEST(SftCheck, PowerDataExamples) {
  auto z = int_plus_2x(10);
  auto data = make_sft_data(z, "I", "2", 2);
  auto r = check_power_data(z, data, 2, PowerMode::Vsft);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(check_power_data(z, data, 1, PowerMode::Vsft).verdict, verify_vsft(z, data).verdict);
  // (I^2)^2 lies in (4) = (2)^2.
  auto four = ideal_power(z.ideal("2"), 2);
  EXPECT_TRUE(ideal_contains(four, ideal_power(z.ideal("I"), 4)));

  auto frob = frobenius_quotient(2, 3);
  r = check_power_data(frob, make_sft_data(frob, "M", "zero", 2), 3, PowerMode::Sft);
  EXPECT_EQ(r.verdict, Verdict::Verified);

  auto fm = fraction_monoid(3, 2);
  r = check_power_data(fm, make_sft_data(fm, "I", "y", 2), 2, PowerMode::Vsft);
  EXPECT_EQ(r.verdict, Verdict::PreconditionFailed);
}

TEST(SftCheck, ModifiedRadicalPowerExamples) {
  auto z = int_plus_2x(10);
  auto jd = make_sft_data(z, "I", "2", 2);
  auto r = modified_radical_power_index(z, z.ideal("I"), jd, 5);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.index, 1u);
  r = modified_radical_power_index(z, z.ideal("I2"), jd, 5);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.index, 2u);

  auto xy = char2_xy(2, 10);
  auto xd = make_sft_data(xy, "I", "x2", 3);
  r = modified_radical_power_index(xy, xy.ideal("Isq"), xd, 12);
  ASSERT_EQ(r.verdict, Verdict::Verified) << r.note;
  auto brute = oracle::brute_for(xy, 12);
  auto k = brute.least_power(xy.ideals.at("I"), xy.ideals.at("Isq"), 3, 8);
  ASSERT_TRUE(k);
  EXPECT_EQ(r.index, *k);
  const auto m = std::stoull(r.details.at("m"));
  EXPECT_EQ(brute.least_power(xy.ideals.at("x2"), xy.ideals.at("Isq"), 3, 8), m);
  // Derived data (I, B^m, nm) re-verifies directly.
  const auto bm = ideal_power(xy.ideal("x2"), m);
  EXPECT_TRUE(ideal_contains(bm, ideal_power(xy.ideal("Isq"), 3 * m)));
  EXPECT_EQ(std::stoull(r.details.at("derived_index")), 3 * m);
}

TEST(SftCheck, ExtensionExamples) {
  auto z = int_plus_2x(10);
  auto data = make_sft_data(z, "I", "2", 2);
  CheckOptions opts;
  opts.samples = 30;
  EXPECT_EQ(check_extension_vsft(z, data, 4, 30, opts).verdict, Verdict::Verified);
  EXPECT_EQ(check_extension_vsft(z, data, 0, 30, opts).verdict, verify_vsft(z, data).verdict);
  auto rv = rational_valuation(6);
  EXPECT_EQ(check_extension_vsft(rv, make_sft_data(rv, "xV", "x", 2), 2, 30, opts).verdict, Verdict::Verified);
}

TEST(SftCheck, SftExtensionExponentExamples) {
  CheckOptions opts;
  opts.samples = 50;
  auto f3 = frobenius_quotient(3, 3);
  auto r = check_sft_extension_exponent(f3, make_sft_data(f3, "M", "zero", 3), 3, 50, opts);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.details.at("exponent"), "6");
  EXPECT_EQ(r.qualifier, "on samples");
  EXPECT_EQ(r.samples, 50u);

  auto f2 = frobenius_quotient(2, 3);
  r = check_sft_extension_exponent(f2, make_sft_data(f2, "M", "zero", 2), 4, 50, opts);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.details.at("exponent"), "2");

  r = check_sft_extension_exponent(f2, make_sft_data(f2, "M", "M", 1), 2, 20, opts);
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.details.at("exponent"), "1");
}

TEST(SftCheck, StrongConvergenceExamples) {
  auto d = dyadic(8);
  auto r = strong_convergence_check(d, make_sft_data(d, "M", "2", 2), {ev({Rational(3, 2)}), ev({Rational(9, 4)})});
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.details.at("bare_product_in_sub"), "false");
  // 2 * 2^(15/4) = 2^(19/4) and 19/4 - 1 = 15/4 is in S; 15/4 - 1 = 11/4 is not.
  auto all = oracle::monoid_elements(d.monoid().generators(), d.monoid().grading(), 5, 1);
  EXPECT_TRUE(all.count(ev({Rational(15, 4)})));
  EXPECT_FALSE(all.count(ev({Rational(11, 4)})));

  auto z = int_plus_2x(10);
  r = strong_convergence_check(z, make_sft_data(z, "I", "2", 2), {ev({1, 1}), ev({1, 2})});
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(r.details.at("bare_product_in_sub"), "true");

  auto frob = frobenius_quotient(2, 3);
  r = strong_convergence_check(frob, make_sft_data(frob, "M", "zero", 2), {ev({1, 0, 0}), ev({0, 1, 0})});
  EXPECT_EQ(r.verdict, Verdict::VacuouslyTrue);
}

TEST(SftCheck, QuotientPushforwardExamples) {
  auto frob = frobenius_quotient(2, 3);
  auto data = make_sft_data(frob, "M", "zero", 2);
  auto r = check_quotient_pushforward(frob, data, {});
  EXPECT_EQ(r.verdict, verify_sft_generators(frob, data).verdict);
  r = check_quotient_pushforward(frob, data, {ev({0, 0, 1})});
  EXPECT_EQ(r.verdict, Verdict::Verified);

  auto z = int_plus_2x(10);
  auto zd = make_sft_data(z, "I", "2", 2);
  r = check_quotient_pushforward(z, zd, {ev({1, 10})});
  EXPECT_EQ(r.verdict, Verdict::Verified);
  EXPECT_EQ(check_quotient_pushforward(z, zd, {}).verdict, verify_vsft(z, zd).verdict);
}

TEST(SftCheck, NonSftWitnessesInValuationRing) {
  auto v = rational_valuation_overring(6);
  auto r = non_sft_witnesses(v, v.ideal("MV"), {1, 2, 3}, 5);
  EXPECT_EQ(r.verdict, Verdict::RefutedFamily);
  EXPECT_EQ(r.witnesses.size(), 15u);
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    const Rational a(static_cast<std::int64_t>(1 + i / 5));
    const Rational n(static_cast<std::int64_t>(w.k));
    ASSERT_TRUE(w.exponent);
    const Rational e = (*w.exponent)[0];
    EXPECT_EQ(e * (n + 1), a);  // x^e lies in MV and divides x^a
    EXPECT_LT(e * n, a);        // (x^e)^n misses (x^a)
  }
  EXPECT_THROW(non_sft_witnesses(frobenius_quotient(2, 2), frobenius_quotient(2, 2).ideal("M"), {1}, 2),
               UnsupportedModel);
}

TEST(SftCheck, RunClaimMapsErrorsToVerdicts) {
  auto frob = frobenius_quotient(2, 3);
  CatalogClaim c;
  c.id = "bad";
  c.kind = "vsft";
  c.ideal = "zero";
  c.sub_ideal = "M";
  c.index = 2;
  EXPECT_EQ(run_claim(frob, c).verdict, Verdict::PreconditionFailed);

  auto d = fraction_monoid(5, 4).with_budget(SearchBudget{2});
  c.ideal = "I";
  c.sub_ideal = "y";
  c.kind = "vsft_witnesses";
  c.kmin = 2;
  c.kmax = 5;
  auto r = run_claim(d, c);
  EXPECT_EQ(r.verdict, Verdict::InconclusiveAtTruncation);
  EXPECT_NE(r.note.find("budget"), std::string::npos);
}

// Certificate soundness on random elements.
TEST(SftCheck, PropertyFrobeniusCertificateSound) {
  struct Case {
    RingModel model;
    std::string ideal, sub;
    std::uint64_t n;
  };
  std::vector<Case> cases{{frobenius_quotient(2, 5), "M", "zero", 2},
                          {frobenius_quotient(3, 4), "M", "zero", 3},
                          {frobenius_quotient(5, 3), "M", "zero", 5},
                          {char2_xy(5, 10), "I", "x2", 2},
                          {fraction_monoid(5, 4), "I", "y", 2}};
  for (const auto& c : cases) {
    auto data = make_sft_data(c.model, c.ideal, c.sub, c.n);
    auto r = certify_sft_all_elements(c.model, data);
    ASSERT_TRUE(r.certificate);
    ASSERT_EQ(r.certificate->kind, CertificateKind::FrobeniusCharP) << c.model.name;
    RandomElementOptions ro;
    ro.max_terms = 5;
    for (std::uint64_t s = 0; s < 200; ++s) {
      auto z = random_element(c.model.ring, data.ideal, 1000 + s, ro);
      EXPECT_TRUE(element_in_ideal(element_power(z, c.n), data.sub)) << c.model.name << " " << z.to_string();
    }
  }
}

TEST(SftCheck, PropertyDiagonalCertificateSound) {
  auto d = dyadic(8);
  const auto& gens = d.ideals.at("M");
  auto two = d.ideal("2");
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    for (std::size_t terms : {2u, 3u}) {
      PolyElement f(d.ring);
      for (std::size_t i = 0; i < terms; ++i)
        f += PolyElement::monomial(d.ring, gens[rng() % gens.size()], static_cast<std::int64_t>(rng() % 7) + 1);
      if (f.is_zero()) continue;
      EXPECT_TRUE(element_in_ideal(element_power(f, 2), two)) << f.to_string();
    }
  }
}

// A refutation at truncation v persists at v+1 and v+2, with the same witness.
TEST(SftCheck, PropertyRefutationsPersistUnderEnlargement) {
  struct Family {
    std::function<RingModel(std::int64_t)> make;
    std::string ideal, sub;
    std::uint64_t n;
    std::int64_t from;
  };
  std::vector<Family> families{
      {[](std::int64_t v) { return frobenius_quotient(2, v); }, "M", "zero", 2, 2},
      {[](std::int64_t v) { return fraction_monoid(v, 4); }, "I", "y", 2, 2},
      {[](std::int64_t m) { return fraction_monoid(3, m); }, "I", "y", 2, 1},
      {[](std::int64_t v) { return char2_xy(v, 10); }, "I", "x2", 2, 2},
      {[](std::int64_t n) { return dyadic(n); }, "M", "2", 2, 2},
  };
  for (const auto& f : families) {
    for (std::int64_t v = f.from; v <= f.from + 2; ++v) {
      auto base = f.make(v);
      auto r = verify_vsft(base, make_sft_data(base, f.ideal, f.sub, f.n));
      ASSERT_EQ(r.verdict, Verdict::RefutedWithWitness) << base.name << " " << v;
      for (std::int64_t up = v + 1; up <= v + 2; ++up) {
        auto big = f.make(up);
        auto rb = verify_vsft(big, make_sft_data(big, f.ideal, f.sub, f.n));
        EXPECT_EQ(rb.verdict, Verdict::RefutedWithWitness);
        auto e = r.witnesses[0].exponent->embedded(big.context()->dim());
        EXPECT_FALSE(ideal_member(big.ideal(f.sub), e)) << big.name << " " << up;
      }
    }
  }
}

TEST(SftCheck, PropertyPowerDataUpToFour) {
  struct Case {
    RingModel model;
    std::string ideal, sub;
    std::uint64_t n;
    PowerMode mode;
  };
  std::vector<Case> cases{{int_plus_2x(10), "I", "2", 2, PowerMode::Vsft},
                          {rational_valuation(6), "xV", "x", 2, PowerMode::Vsft},
                          {frobenius_quotient(2, 5), "M", "zero", 2, PowerMode::Sft},
                          {frobenius_quotient(3, 3), "M", "zero", 3, PowerMode::Sft},
                          {fraction_monoid(5, 4), "I", "y", 2, PowerMode::Sft},
                          {char2_xy(5, 10), "I", "x2", 2, PowerMode::Sft},
                          {dyadic(8), "M", "2", 2, PowerMode::Sft}};
  for (const auto& c : cases) {
    auto data = make_sft_data(c.model, c.ideal, c.sub, c.n);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      auto r = check_power_data(c.model, data, m, c.mode);
      EXPECT_EQ(r.verdict, Verdict::Verified) << c.model.name << " m=" << m << " " << r.note;
    }
  }
}

TEST(SftCheck, VerdictNames) {
  EXPECT_EQ(to_string(Verdict::RefutedWithWitness), "RefutedWithWitness");
  EXPECT_EQ(to_string(CertificateKind::DiagonalDominanceChar0), "DiagonalDominanceChar0");
}
