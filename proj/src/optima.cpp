#include "coulomb_sharp/optima.hpp"

#include "coulomb_sharp/parallel.hpp"
#include "coulomb_sharp/ratfun_zoo.hpp"

#include <algorithm>
#include <stdexcept>

namespace coulomb_sharp::optima {

namespace {

BigRational sixth_of_square(int d) { return make_rational(static_cast<long>(d) * d, 6); }

long to_long(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("window endpoint out of range");
  return value.get_si();
}

IntegerWindow clamped_window(const BigRational& lower, const BigRational& upper) {
  return {std::max(0L, to_long(floor_int(lower))), std::max(0L, to_long(ceil_int(upper)))};
}

template <typename SquaredValue>
StarResult maximize_over(int d, IntegerWindow window, SquaredValue squared) {
  StarResult best;
  best.d = d;
  best.candidate_window = window;
  best.argmax_ell = window.lower;
  best.value_squared = squared(window.lower);
  for (long ell = window.lower + 1; ell <= window.upper; ++ell) {
    const BigRational candidate = squared(ell);
    if (candidate > best.value_squared) {
      best.value_squared = candidate;
      best.argmax_ell = ell;
      best.tie = false;
    } else if (candidate == best.value_squared) {
      best.tie = true;
    }
  }
  return best;
}

}  // namespace

std::pair<BigRational, BigRational> maximizer_bounds(int d) {
  const BigRational base = sixth_of_square(d);
  return {base - make_rational(3L * d, 2) + make_rational(7, 3), base - make_rational(d, 2) - make_rational(2, 3)};
}

RootBracket locate_t_star(int d, const BigRational& width) {
  if (d == 3) throw std::domain_error("Q_3 strictly decreasing on (-1, inf): no interior maximum");
  if (d < 3) throw std::invalid_argument("dimension must be at least 3");
  if (width <= 0) throw std::invalid_argument("bracket width must be positive");
  return isolate_unique_root_above(zoo::f_as_ratfun(d).numerator(), BigRational(-1), width);
}

std::optional<RootBracket> locate_a_maximizer(int d, const BigRational& width) {
  if (width <= 0) throw std::invalid_argument("bracket width must be positive");
  const Polynomial numerator = zoo::g_as_ratfun(d).numerator();
  if (sturm_count_above(numerator, BigRational(-1)) != 1) return std::nullopt;
  return isolate_unique_root_above(numerator, BigRational(-1), width);
}

IntegerWindow q_star_window(int d) {
  if (d < 3) throw std::invalid_argument("dimension must be at least 3");
  const auto [lower, upper] = maximizer_bounds(d);
  return clamped_window(lower, upper);
}

IntegerWindow a_star_window(int d) {
  if (d < 3) throw std::invalid_argument("dimension must be at least 3");
  if (d <= 4) return {0, 0};
  const BigRational base = sixth_of_square(d);
  return clamped_window(base - make_rational(3L * d, 2) + make_rational(5, 3), base - make_rational(d, 2) - 1);
}

StarResult q_star(int d, const std::optional<BigRational>& width) {
  StarResult result = maximize_over(d, q_star_window(d), [d](long ell) {
    const BigRational q = zoo::q_eval(d, BigRational(ell));
    return BigRational(q * q);
  });
  result.value = zoo::q_eval(d, BigRational(result.argmax_ell));
  if (d >= 4 && width) result.maximizer_bracket = locate_t_star(d, *width);
  return result;
}

StarResult a_star(int d, const std::optional<BigRational>& width) {
  StarResult result =
      maximize_over(d, a_star_window(d), [d](long ell) { return zoo::a_eval_squared(d, BigRational(ell)); });
  if (d % 2 == 0) result.value = zoo::a_eval_exact(d, BigRational(result.argmax_ell));
  if (width) result.maximizer_bracket = locate_a_maximizer(d, *width);
  return result;
}

std::vector<Counterexample> counterexample_scan(int d, const std::vector<BigRational>& eta_grid, int threads) {
  for (const auto& eta : eta_grid)
    if (eta <= d - 1) throw std::invalid_argument("grid value " + to_string(eta) + " does not exceed d - 1");
  auto ratios = ordered_parallel_map(eta_grid.size(), threads, [&](std::size_t i) { return zoo::r_eval(d, eta_grid[i]); });
  std::vector<Counterexample> hits;
  for (std::size_t i = 0; i < eta_grid.size(); ++i)
    if (ratios[i] > 1) hits.push_back({eta_grid[i], ratios[i]});
  std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.eta < b.eta; });
  return hits;
}

BigRational h_a_sign_threshold(int d, const BigRational& a) {
  const long d3 = static_cast<long>(d) * d * d, d2 = static_cast<long>(d) * d;
  const BigRational inner = make_rational(d3 - 6 * d2 + 11L * d - 3, 12) - BigRational(d - 2) * a / 2;
  return inner / (make_rational(d - 1, 2) + a);
}

ZeroWindowReport a_zero_window_check(int d) {
  if (d < 5 || d % 2 == 0) throw std::invalid_argument("zero window check requires odd d >= 5");
  const BigRational base = sixth_of_square(d);
  const BigRational shift = make_rational(d - 1, 2);
  const BigRational a_d = zoo::sandwich_weight(d);
  const BigRational one_half = make_rational(1, 2);
  const BigRational upper_threshold = h_a_sign_threshold(d, one_half) + (d - 3);
  const BigRational lower_threshold = h_a_sign_threshold(d, a_d);

  ZeroWindowReport report;
  report.d = d;
  report.upper_start = base - make_rational(d, 2) - 1;
  report.lower_end = base - make_rational(3L * d, 2) + make_rational(5, 3);

  auto fail = [&](const std::string& what, const BigRational& t) {
    if (report.failure.empty()) report.failure = what + " at t = " + to_string(t);
  };

  constexpr int kSamples = 16;
  for (int k = 0; k <= kSamples; ++k) {
    const BigRational t = report.upper_start + make_rational(static_cast<long>(k) * d, 4);
    const BigRational s = t + shift;
    ++report.upper_samples;
    if (zoo::g_eval(d, t) >= 0) fail("g_d >= 0", t);
    const auto cert = zoo::g_shifted_sandwich_check(d, s);
    if (!cert.holds) fail("sandwich violated", t);
    if (s >= upper_threshold && cert.upper > 0) fail("h_{1/2} > 0", t);
    if (s < upper_threshold) fail("sample below the h_{1/2} sign threshold", t);
  }

  if (report.lower_end > -1) {
    const BigRational span = report.lower_end + 1;
    for (int k = 1; k <= kSamples + 1; ++k) {
      const BigRational t = BigRational(-1) + span * make_rational(k, kSamples + 1);
      const BigRational s = t + shift;
      ++report.lower_samples;
      if (zoo::g_eval(d, t) <= 0) fail("g_d <= 0", t);
      const auto cert = zoo::g_shifted_sandwich_check(d, s);
      if (!cert.holds) fail("sandwich violated", t);
      if (s <= lower_threshold && cert.lower < 0) fail("h_{a_d} < 0", t);
      if (s > lower_threshold) fail("sample above the h_{a_d} sign threshold", t);
    }
  }
  report.holds = report.failure.empty();
  return report;
}

}  // namespace coulomb_sharp::optima
