#include "coulomb_sharp/spectrum.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

using namespace coulomb_sharp;
using namespace coulomb_sharp::spectrum;
using test_support::q;

namespace {

BigInt term_by_term_count(int d, long k) {
  BigInt sum = 0;
  for (long j = 0; j <= k; ++j) sum += multiplicity(d, j);
  return sum;
}

BigRational exact(const SpectralValue& v) { return std::get<BigRational>(v); }

}  // namespace

TEST(Spectrum, ParamsValidation) {
  EXPECT_THROW(SpectrumParams(2, 5), std::invalid_argument);
  EXPECT_THROW(SpectrumParams(3, 0), std::invalid_argument);
  EXPECT_THROW(SpectrumParams(3, -1), std::invalid_argument);
  SpectrumParams p(6, q("111/10"));
  EXPECT_EQ(p.tau(), q("61/20"));
  EXPECT_EQ(p.top_level(), 3);
  EXPECT_FALSE(SpectrumParams(3, 2).top_level().has_value());
}

TEST(Spectrum, MultiplicityExamples) {
  for (int d = 3; d <= 12; ++d) EXPECT_EQ(multiplicity(d, 0), 1);
  EXPECT_EQ(multiplicity(3, 2), 9);
  // 7! * 11 / (5! * 3!)
  EXPECT_EQ(multiplicity(6, 3), BigInt(5040 * 11 / (120 * 6)));
  EXPECT_EQ(multiplicity(6, 3), 77);
  for (long j = 0; j <= 20; ++j) EXPECT_EQ(multiplicity(3, j), BigInt((j + 1) * (j + 1)));
}

TEST(Spectrum, MultiplicityFormulasAgree) {
  for (int d = 3; d <= 30; ++d)
    for (long j = 0; j <= 60; ++j) ASSERT_EQ(multiplicity(d, j), multiplicity_binomial(d, j)) << d << " " << j;
}

TEST(Spectrum, HockeyStickCumulativeCount) {
  for (int d = 3; d <= 30; ++d)
    for (long k = 0; k <= 60; ++k) ASSERT_EQ(cumulative_count(d, k), term_by_term_count(d, k)) << d << " " << k;
}

TEST(Spectrum, CountingFunctionExamples) {
  EXPECT_EQ(counting_function(SpectrumParams(3, 2)), 0);
  EXPECT_EQ(counting_function(SpectrumParams(3, 3)), 1);
  EXPECT_EQ(counting_function(SpectrumParams(6, q("111/10"))), 112);
  EXPECT_EQ(term_by_term_count(6, 3), 1 + 7 + 27 + 77);
}

TEST(Spectrum, LevelsAreNegative) {
  auto lv = levels(SpectrumParams(5, q("173/10")));
  ASSERT_FALSE(lv.empty());
  for (const auto& level : lv) EXPECT_LT(level.energy, 0);
  EXPECT_EQ(lv.front().energy, 1 - q("173/10") * q("173/10") / 16);
}

TEST(Spectrum, ZeroEnergyLevelIsNotCounted) {
  for (int d = 3; d <= 9; ++d) {
    for (long j = 0; j <= 6; ++j) {
      const BigRational at_threshold(2 * j + d - 1);
      const BigRational just_below = at_threshold - q("1/1000000");
      EXPECT_EQ(SpectrumParams(d, at_threshold).top_level(), SpectrumParams(d, just_below).top_level());
      EXPECT_EQ(counting_function(SpectrumParams(d, at_threshold)),
                counting_function(SpectrumParams(d, just_below)));
    }
  }
}

TEST(Spectrum, RieszMeanExamples) {
  EXPECT_EQ(exact(riesz_mean({SpectrumParams(3, 2), 1})), 0);
  EXPECT_EQ(exact(riesz_mean({SpectrumParams(3, 3), 1})), q("5/4"));
  const BigRational expected = q("91/9") + 15 + q("102/7") + q("190/27");
  EXPECT_EQ(exact(riesz_mean({SpectrumParams(4, 10), 1})), expected);
  EXPECT_NEAR(expected.get_d(), 46.7196, 1e-4);
}

TEST(Spectrum, RieszMeanAtZeroIsTheCount) {
  for (int trial = 0; trial < 200; ++trial) {
    const int d = static_cast<int>(test_support::uniform(3, 25));
    const BigRational eta = make_rational(test_support::uniform(1, 4000), test_support::uniform(1, 40));
    SpectrumParams p(d, eta);
    ASSERT_EQ(exact(riesz_mean({p, 0})), BigRational(counting_function(p)));
  }
}

TEST(Spectrum, ThreeDimensionalClosedForm) {
  EXPECT_EQ(riesz_mean_d3_closed_form(3), q("5/4"));
  EXPECT_EQ(riesz_mean_d3_closed_form(5), q("15/2"));
  EXPECT_EQ(riesz_mean_d3_closed_form(2), 0);
  for (long k = 21; k <= 200; ++k) {
    const BigRational eta = make_rational(k, 10);
    ASSERT_EQ(riesz_mean_d3_closed_form(eta), exact(riesz_mean({SpectrumParams(3, eta), 1}))) << k;
  }
}

TEST(Spectrum, FractionalRieszMeanMatchesDirectMpfr) {
  SpectrumParams p(5, q("61/4"));
  const BigRational gamma = q("3/2");
  auto value = std::get<HighPrecisionReal>(riesz_mean({p, gamma, 40}));

  // mpfr_pow on each level at generous precision
  mpfr_t acc, term, base;
  mpfr_inits2(600, acc, term, base, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  for (const auto& level : levels(p)) {
    mpfr_set_q(base, BigRational(-level.energy).get_mpq_t(), MPFR_RNDN);
    mpfr_set_d(term, 1.5, MPFR_RNDN);
    mpfr_pow(term, base, term, MPFR_RNDN);
    mpfr_mul_z(term, term, level.multiplicity.get_mpz_t(), MPFR_RNDN);
    mpfr_add(acc, acc, term, MPFR_RNDN);
  }
  mpfr_sub(term, acc, value.value.get(), MPFR_RNDN);
  mpfr_div(term, term, acc, MPFR_RNDN);
  EXPECT_LT(std::abs(mpfr_get_d(term, MPFR_RNDN)), 1e-39);
  mpfr_clears(acc, term, base, static_cast<mpfr_ptr>(nullptr));
}

TEST(Spectrum, RejectsNegativeExponent) {
  EXPECT_THROW(riesz_mean({SpectrumParams(3, 5), -1}), std::invalid_argument);
}
