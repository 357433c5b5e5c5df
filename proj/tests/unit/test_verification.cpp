#include "coulomb_sharp/verification.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

using namespace coulomb_sharp;
using namespace coulomb_sharp::verification;
using test_support::q;

namespace {

std::string exact(const CheckRecord& r, const char* key) { return r.witness.at(key).at("exact").get<std::string>(); }

}  // namespace

TEST(CheckRecord, JsonKeyOrderAndVerdicts) {
  CheckRecord r = check_lt_gamma1(4, 10);
  Json j = r.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check_id", "params", "verdict", "witness", "note"}));
  EXPECT_EQ(r.to_json_line().find('\n'), std::string::npos);
  EXPECT_EQ(to_string(Verdict::inconclusive), "inconclusive");
  EXPECT_TRUE((CheckRecord{"x", {}, Verdict::inconclusive, {}, ""}.failed()));
  EXPECT_FALSE((CheckRecord{"x", {}, Verdict::skipped, {}, ""}.failed()));
}

TEST(LtGamma1, Examples) {
  CheckRecord r = check_lt_gamma1(4, 10);
  EXPECT_EQ(r.verdict, Verdict::pass);
  // mu_j (100/(2j+3)^2 - 1) for j = 0..3
  EXPECT_EQ(q(exact(r, "lhs").c_str()), q("91/9") + 15 + q("102/7") + q("190/27"));
  EXPECT_EQ(exact(r, "rhs"), "50");
  CheckRecord empty = check_lt_gamma1(4, 3);
  EXPECT_EQ(empty.verdict, Verdict::pass);
  EXPECT_EQ(exact(empty, "lhs"), "0");
  // 3^4 / (4 * 4! * 2) - 9 / (4 * 3 * 4): the bound stays positive with no spectrum
  EXPECT_EQ(q(exact(empty, "rhs").c_str()), q("81/192") - q("9/48"));
  EXPECT_EQ(check_lt_gamma1(10, 15).verdict, Verdict::pass);
  EXPECT_EQ(check_lt_gamma1(3, 5).verdict, Verdict::skipped);
}

TEST(LtGamma1, SweepHasNoViolations) {
  for (int d = 4; d <= 10; ++d)
    for (long k = 1; k <= 400; ++k) ASSERT_EQ(check_lt_gamma1(d, d - 1 + make_rational(k, 10)).verdict, Verdict::pass);
}

TEST(D3Envelopes, Examples) {
  CheckRecord five = check_d3_envelopes(5);
  EXPECT_EQ(five.verdict, Verdict::pass);
  EXPECT_EQ(exact(five, "trace"), "15/2");
  EXPECT_EQ(q("125/12") - q("25/8") + q("5/24"), q("15/2"));
  EXPECT_TRUE(five.witness["upper_equality"].get<bool>());
  CheckRecord four = check_d3_envelopes(4);
  EXPECT_EQ(exact(four, "trace"), "3");
  EXPECT_EQ(exact(four, "lower"), "3");
  EXPECT_TRUE(four.witness["lower_equality"].get<bool>());
  CheckRecord two = check_d3_envelopes(2);
  EXPECT_EQ(two.verdict, Verdict::pass);
  EXPECT_EQ(exact(two, "lower"), "0");
  EXPECT_EQ(exact(two, "trace"), "0");
  // 8/12 - 4/8 + 1/24
  EXPECT_EQ(exact(two, "upper"), "5/24");
}

TEST(D3Envelopes, GridContainmentAndEqualities) {
  for (long k = 201; k <= 2000; ++k) {
    const BigRational eta = make_rational(k, 100);
    CheckRecord r = check_d3_envelopes(eta);
    ASSERT_EQ(r.verdict, Verdict::pass) << k;
    const bool upper_equal = r.witness["upper_equality"].get<bool>();
    const bool lower_equal = r.witness["lower_equality"].get<bool>();
    if (k % 100 == 0) {
      const long n = k / 100;
      EXPECT_EQ(upper_equal, n % 2 == 1) << n;
      EXPECT_EQ(lower_equal, n % 2 == 0) << n;
    }
  }
}

TEST(PhiEnvelope, Examples) {
  CheckRecord half = check_phi_envelope(1, q("1/2"));
  EXPECT_EQ(half.verdict, Verdict::pass);
  EXPECT_EQ(exact(half, "phi"), "1/8");
  EXPECT_TRUE(half.witness["upper_equality"].get<bool>());
  CheckRecord one = check_phi_envelope(1, 1);
  EXPECT_EQ(exact(one, "phi"), "-1/3");
  EXPECT_TRUE(one.witness["lower_equality"].get<bool>());
  CheckRecord interior = check_phi_envelope(3, q("1/4"));
  EXPECT_EQ(interior.verdict, Verdict::pass);
  EXPECT_FALSE(interior.witness["upper_equality"].get<bool>());
  EXPECT_FALSE(interior.witness["lower_equality"].get<bool>());
  EXPECT_THROW(check_phi_envelope(0, q("1/2")), std::invalid_argument);
  EXPECT_THROW(check_phi_envelope(1, 0), std::invalid_argument);
}

TEST(PhiEnvelope, RandomPoints) {
  for (int trial = 0; trial < 300; ++trial) {
    const long m = test_support::uniform(1, 40);
    const BigRational eps = make_rational(test_support::uniform(1, 997), 997);
    ASSERT_EQ(check_phi_envelope(m, eps).verdict, Verdict::pass) << m << " " << to_string(eps);
  }
}

TEST(AbelBound, Examples) {
  CheckRecord r = check_abel_bound(4, 0);
  EXPECT_EQ(r.verdict, Verdict::pass);
  // 3! * 2 * (1/9)
  EXPECT_EQ(exact(r, "lhs"), "4/3");
  EXPECT_TRUE(r.witness["equality"].get<bool>());
  EXPECT_EQ(check_abel_bound(5, 3).verdict, Verdict::pass);
  EXPECT_EQ(check_abel_bound(10, 20).verdict, Verdict::pass);
  EXPECT_THROW(check_abel_bound(3, 1), std::invalid_argument);
}

TEST(BigGBound, Examples) {
  CheckRecord r = check_big_g_bound(4, 50);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(q(exact(r, "g_squared_at_0").c_str()), q("361/432") * q("361/432"));
  EXPECT_EQ(check_big_g_bound(5, 50).verdict, Verdict::pass);
  EXPECT_EQ(check_big_g_bound(12, 200).verdict, Verdict::pass);
}

TEST(Identities, AppendixSumsPochhammerCountsLogDerivatives) {
  EXPECT_EQ(check_appendix_sums(3).witness["linear_sum"], "2");
  EXPECT_EQ(check_appendix_sums(3).witness["quadratic_formula"], "4");
  for (int d = 3; d <= 25; ++d) {
    EXPECT_EQ(check_appendix_sums(d).verdict, Verdict::pass) << d;
    EXPECT_EQ(check_pochhammer_identities(d, 30).verdict, Verdict::pass) << d;
    EXPECT_EQ(check_level_counts(d, 40).verdict, Verdict::pass) << d;
    EXPECT_EQ(check_log_derivatives(d).verdict, Verdict::pass) << d;
  }
  for (int d = 4; d <= 20; ++d) EXPECT_EQ(check_g_monotonicity_numerator(d).verdict, Verdict::pass) << d;
}

TEST(Coefficients, TopTwoCoefficients) {
  CheckRecord f4 = check_f_coefficients(4);
  EXPECT_EQ(f4.witness["leading"], "-2");
  // -2 (16/3 - 2 - 1/3)
  EXPECT_EQ(f4.witness["next"], "-6");
  for (int d = 3; d <= 30; ++d) EXPECT_EQ(check_f_coefficients(d).verdict, Verdict::pass) << d;
  for (int d = 6; d <= 20; d += 2) EXPECT_EQ(check_g_polynomial_form(d).verdict, Verdict::pass) << d;
  for (int d = 5; d <= 21; d += 2) {
    EXPECT_EQ(check_p_a_coefficients(d, q("1/2")).verdict, Verdict::pass) << d;
    EXPECT_EQ(check_p_a_coefficients(d, make_rational(d - 2, 2 * (d - 3))).verdict, Verdict::pass) << d;
  }
  EXPECT_THROW(check_g_polynomial_form(7), std::invalid_argument);
  EXPECT_THROW(check_p_a_coefficients(6, q("1/2")), std::invalid_argument);
}

TEST(ClrChecks, Examples) {
  CheckRecord excess = check_clr_excess(6, q("111/10"));
  EXPECT_EQ(excess.verdict, Verdict::pass);
  EXPECT_EQ(excess.witness["count"], "112");
  // the record keeps both sides when the excess is below one: N = 1, clr = 27/24
  CheckRecord below = check_clr_excess(3, 3);
  EXPECT_EQ(below.verdict, Verdict::fail);
  EXPECT_EQ(below.witness["count"], "1");
  EXPECT_EQ(exact(below, "clr_rhs"), "9/8");
  EXPECT_EQ(exact(below, "ratio"), "8/9");
  EXPECT_EQ(check_maximizer_bounds(3).verdict, Verdict::skipped);
  for (int d = 4; d <= 12; ++d) EXPECT_EQ(check_maximizer_bounds(d).verdict, Verdict::pass) << d;
  EXPECT_EQ(check_q_star(3).verdict, Verdict::pass);
  EXPECT_EQ(exact(check_q_star(4), "value"), "64/27");
  EXPECT_EQ(check_a_star(5).verdict, Verdict::pass);
  EXPECT_EQ(check_a_zero_window(6).verdict, Verdict::skipped);
  EXPECT_EQ(check_a_zero_window(7).verdict, Verdict::pass);
}

TEST(Asymptotics, SingleDimensionIsVacuousOnTrend) {
  CheckRecord r = check_asymptotics(10, 10);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_FALSE(r.note.empty());
  // r_A(10) = 11.71 exceeds the bound calibrated on [50, 400]; it is recorded only
  EXPECT_NEAR(std::stod(r.witness["max_r_a"]["value"].get<std::string>()), 11.71, 0.01);
  EXPECT_EQ(r.witness["bounded_from"], 50);
  // d^3 (Q_10* - 1 - 3/20 - 45/800), Q_10* exact
  EXPECT_NEAR(std::stod(r.witness["max_r_q"]["value"].get<std::string>()), 25.13, 0.01);
  EXPECT_THROW(check_asymptotics(9, 20), std::invalid_argument);
  EXPECT_THROW(check_asymptotics(50, 401), std::invalid_argument);
}

TEST(Asymptotics, BoundedWithoutGrowth) {
  CheckRecord r = check_asymptotics(50, 200, 40, 2);
  EXPECT_EQ(r.verdict, Verdict::pass) << r.to_json_line();
  EXPECT_EQ(r.witness["r_q"].size(), 151u);
  EXPECT_NEAR(std::stod(r.witness["max_r_q"]["value"].get<std::string>()), 19.3787813841, 1e-9);
  EXPECT_NEAR(std::stod(r.witness["max_r_a"]["value"].get<std::string>()), 5.26242377632, 1e-9);
}

TEST(LtGeneralGamma, Examples) {
  CheckRecord exact_path = check_lt_general_gamma(3, 5, 1);
  EXPECT_EQ(exact_path.verdict, Verdict::pass);
  EXPECT_EQ(exact(exact_path, "lhs"), "15/2");
  EXPECT_EQ(exact(exact_path, "rhs"), "125/12");
  CheckRecord half = check_lt_general_gamma(5, 10, q("3/2"));
  EXPECT_EQ(half.verdict, Verdict::pass);
  EXPECT_TRUE(half.witness.contains("rhs_exact"));
  try {
    check_lt_general_gamma(6, q("111/10"), 0);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()), "theorem range is gamma >= 1");
  }
  EXPECT_THROW(check_lt_general_gamma(6, 10, 3), std::domain_error);
}

TEST(LtGeneralGamma, RealExponentsOnGrid) {
  for (int d = 3; d <= 8; ++d)
    for (const char* gamma : {"1", "6/5", "3/2"})
      if (q(gamma) * 2 < d)
        for (long k = 1; k <= 30; ++k)
          ASSERT_EQ(check_lt_general_gamma(d, d - 1 + make_rational(k, 3), q(gamma)).verdict, Verdict::pass)
              << d << " " << gamma << " " << k;
}

TEST(Suites, UnknownSuiteAndGrid) {
  EXPECT_THROW(run_suite("nope", {}), std::invalid_argument);
  EXPECT_TRUE(is_suite("clr"));
  EXPECT_EQ((EtaGrid{2, 3, q("1/4")}.points()), (std::vector<BigRational>{q("9/4"), q("5/2"), q("11/4"), 3}));
  EXPECT_THROW((EtaGrid{2, 3, 0}.points()), std::invalid_argument);
  EXPECT_THROW((EtaGrid{3, 3, 1}.points()), std::invalid_argument);
}

TEST(Suites, ReplayableAndThreadIndependent) {
  SuiteOptions options;
  options.d_values = {3, 4, 5, 6, 7, 8};
  options.gamma = q("3/2");
  std::vector<std::string> reference;
  for (int threads : {1, 3}) {
    options.threads = threads;
    std::vector<std::string> lines;
    for (const auto& suite : {"lt-gamma1", "coefficients", "identities", "clr"})
      for (const auto& r : run_suite(suite, options)) lines.push_back(r.to_json_line());
    if (reference.empty()) {
      reference = lines;
    } else {
      EXPECT_EQ(lines, reference);
    }
  }
  for (const auto& line : reference) EXPECT_EQ(Json::parse(line)["verdict"] == "fail", false) << line;
}

TEST(Suites, AsymptoticsOutsideRangeIsSkipped) {
  SuiteOptions options;
  options.d_values = {3, 4, 5};
  auto records = run_suite("asymptotics", options);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].verdict, Verdict::skipped);
}
