#include "coulomb_sharp/optima.hpp"
#include "coulomb_sharp/ratfun_zoo.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

using namespace coulomb_sharp;
using namespace coulomb_sharp::optima;
using test_support::q;

namespace {

BigRational half(long n) { return make_rational(n, 2); }

template <typename Value>
long brute_force_argmax(long upto, Value value) {
  long best = 0;
  BigRational best_value = value(0);
  for (long ell = 1; ell <= upto; ++ell) {
    BigRational v = value(ell);
    if (v > best_value) {
      best_value = v;
      best = ell;
    }
  }
  return best;
}

}  // namespace

TEST(TStar, Examples) {
  RootBracket b4 = locate_t_star(4, q("1/1000"));
  EXPECT_GE(b4.lower, -1);
  EXPECT_LE(b4.upper, 0);
  RootBracket b6 = locate_t_star(6, q("1/1000"));
  EXPECT_GT(b6.lower, q("-2/3"));
  EXPECT_LT(b6.upper, q("7/3"));
  RootBracket b20 = locate_t_star(20, q("1/1000"));
  EXPECT_GT(b20.lower, 39);
  EXPECT_LT(b20.upper, 56);
  EXPECT_LE(b20.width(), q("1/1000"));
  EXPECT_EQ(maximizer_bounds(20), std::make_pair(BigRational(39), BigRational(56)));
}

TEST(TStar, DimensionThreeHasNoMaximizer) {
  try {
    locate_t_star(3, q("1/1000"));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("Q_3 strictly decreasing"), std::string::npos);
  }
}

TEST(TStar, UniqueZeroAboveMinusOne) {
  for (int d = 4; d <= 60; ++d) {
    Polynomial p = zoo::f_as_ratfun(d).numerator();
    ASSERT_EQ(sturm_count(p, -1, BigRational(BigInt(10000000000L))), 1) << d;
  }
}

TEST(QStar, Examples) {
  StarResult s3 = q_star(3);
  EXPECT_EQ(*s3.value, 3);
  EXPECT_EQ(s3.argmax_ell, 0);
  EXPECT_FALSE(s3.maximizer_bracket.has_value());
  StarResult s4 = q_star(4);
  EXPECT_EQ(*s4.value, q("64/27"));
  EXPECT_EQ(s4.candidate_window.lower, 0);
  EXPECT_EQ(s4.candidate_window.upper, 0);
  StarResult s5 = q_star(5);
  EXPECT_EQ(*s5.value, q("15/8"));
  EXPECT_EQ(s5.argmax_ell, 0);
  EXPECT_EQ(s5.candidate_window.upper, 1);
  EXPECT_GT(*s5.value, q("420/243"));
}

TEST(QStar, WindowNeverMissesIntegerMaximizer) {
  for (int d = 4; d <= 60; ++d) {
    StarResult s = q_star(d);
    const long brute = brute_force_argmax(static_cast<long>(d) * d, [d](long ell) { return zoo::q_eval(d, ell); });
    EXPECT_EQ(s.argmax_ell, brute) << d;
    EXPECT_GE(s.argmax_ell, s.candidate_window.lower);
    EXPECT_LE(s.argmax_ell, s.candidate_window.upper);
    EXPECT_FALSE(s.tie);
  }
}

TEST(QStar, ExceedsOne) {
  for (int d = 3; d <= 60; ++d) EXPECT_GT(*q_star(d).value, 1) << d;
}

TEST(AStar, Examples) {
  StarResult a3 = a_star(3);
  EXPECT_EQ(a3.value_squared, q("64/3"));
  EXPECT_EQ(a3.argmax_ell, 0);
  StarResult a4 = a_star(4);
  EXPECT_EQ(*a4.value, 3);
  StarResult a5 = a_star(5);
  EXPECT_EQ(a5.argmax_ell, 0);
  EXPECT_EQ(a5.value_squared, q("147456/30375"));
  EXPECT_FALSE(a5.value.has_value());
}

TEST(AStar, WindowNeverMissesIntegerMaximizerAndDominatesQ) {
  for (int d = 3; d <= 60; ++d) {
    StarResult a = a_star(d);
    const long brute =
        brute_force_argmax(static_cast<long>(d) * d, [d](long ell) { return zoo::a_eval_squared(d, ell); });
    EXPECT_EQ(a.argmax_ell, brute) << d;
    const BigRational qs = *q_star(d).value;
    EXPECT_GT(a.value_squared, qs * qs) << d;
  }
}

TEST(AStar, EvenDimensionPolynomialForm) {
  for (int d = 6; d <= 40; d += 2) {
    Polynomial p = zoo::g_as_ratfun(d).numerator();
    ASSERT_EQ(p.degree(), d - 3) << d;
    EXPECT_EQ(p.leading(), -half(d));
    EXPECT_EQ(p.coefficient(d - 4), -half(d) * (make_rational(static_cast<long>(d) * d, 3) - d + q("2/3")));
    EXPECT_EQ(zoo::g_as_ratfun(d).denominator().degree(), d - 1);
  }
}

TEST(Counterexamples, Examples) {
  auto hits = counterexample_scan(6, {q("111/10")});
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_NEAR(hits[0].ratio.get_d(), 1.3796, 1e-4);
  EXPECT_TRUE(counterexample_scan(3, {3}).empty());
  auto near_threshold = counterexample_scan(3, {q("201/100")});
  ASSERT_EQ(near_threshold.size(), 1u);
  // ell = 0: R = N_0 / clr = 1 / (eta^3 / 24)
  EXPECT_EQ(near_threshold[0].ratio, 24 / pow(q("201/100"), 3));
  EXPECT_THROW(counterexample_scan(3, {2}), std::invalid_argument);
}

TEST(Counterexamples, SortedAndThreadIndependent) {
  std::vector<BigRational> grid;
  for (long k = 400; k >= 1; --k) grid.push_back(5 + make_rational(k, 10));
  auto one = counterexample_scan(6, grid, 1);
  auto four = counterexample_scan(6, grid, 4);
  ASSERT_EQ(one.size(), four.size());
  ASSERT_FALSE(one.empty());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].eta, four[i].eta);
    EXPECT_EQ(one[i].ratio, four[i].ratio);
    if (i > 0) EXPECT_LT(one[i - 1].eta, one[i].eta);
    EXPECT_GT(one[i].ratio, 1);
  }
}

TEST(ZeroWindow, SmallOddDimensions) {
  for (int d : {5, 7, 9}) {
    ZeroWindowReport r = a_zero_window_check(d);
    EXPECT_TRUE(r.holds) << d << ": " << r.failure;
    EXPECT_EQ(r.upper_samples, 17);
  }
  EXPECT_EQ(a_zero_window_check(5).lower_samples, 0);
  EXPECT_EQ(a_zero_window_check(7).lower_samples, 17);
  EXPECT_THROW(a_zero_window_check(6), std::invalid_argument);
  EXPECT_THROW(a_zero_window_check(3), std::invalid_argument);
}

TEST(ZeroWindow, OddDimensionsUpTo39) {
  for (int d = 5; d <= 39; d += 2) EXPECT_TRUE(a_zero_window_check(d).holds) << d;
}

TEST(HaSigns, StatementsHoldAtSamplePoints) {
  for (int d = 5; d <= 39; d += 2) {
    for (const BigRational& a : {half(1), zoo::sandwich_weight(d)}) {
      const BigRational threshold = h_a_sign_threshold(d, a);
      const BigRational lower_edge = half(d - 3);
      // for d = 5 the lower statement is vacuous on (lower_edge, inf)
      if (threshold <= lower_edge) EXPECT_EQ(d, 5);
      for (int k = 1; k <= 16 && threshold > lower_edge; ++k) {
        const BigRational s = lower_edge + (threshold - lower_edge) * make_rational(k, 16);
        EXPECT_GE(zoo::h_a_eval(d, a, s), 0) << d << " " << to_string(s);
      }
      for (int k = 0; k <= 16; ++k) {
        const BigRational s = threshold + (d - 3) + make_rational(static_cast<long>(k) * k, 3);
        EXPECT_LE(zoo::h_a_eval(d, a, s), 0) << d << " " << to_string(s);
      }
    }
  }
}

TEST(AMaximizer, BracketWhenUnique) {
  for (int d = 5; d <= 20; ++d) {
    auto bracket = locate_a_maximizer(d, q("1/1000"));
    if (!bracket) continue;
    StarResult a = a_star(d);
    // the real maximizer sits within one unit of the integer argmax
    EXPECT_LT(BigRational(a.argmax_ell - 1), bracket->upper) << d;
    EXPECT_GT(BigRational(a.argmax_ell + 1), bracket->lower) << d;
  }
}
