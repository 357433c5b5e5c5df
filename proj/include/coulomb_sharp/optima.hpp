#pragma once

// Maximizers of Q_d and A_d, the sharp constants Q_d* and A_d*, and scans for
// couplings where the eigenvalue count exceeds the semiclassical value.

#include "coulomb_sharp/exact/rational.hpp"
#include "coulomb_sharp/exact/sturm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coulomb_sharp::optima {

struct IntegerWindow {
  long lower = 0;
  long upper = 0;
};

struct StarResult {
  int d = 0;
  long argmax_ell = 0;
  BigRational value_squared;
  std::optional<BigRational> value;  // present whenever the maximum is rational
  IntegerWindow candidate_window;
  std::optional<RootBracket> maximizer_bracket;
  bool tie = false;  // an equal value occurred at a larger ell
};

/// Lower and upper Maxbounds endpoints d^2/6 - 3d/2 + 7/3 and d^2/6 - d/2 - 2/3.
std::pair<BigRational, BigRational> maximizer_bounds(int d);

/// Sturm-certified bracket around the unique zero of the numerator of f_d in
/// (-1, inf), no wider than `width`. Throws std::domain_error for d = 3, where
/// Q_3 is strictly decreasing and no maximizer exists.
RootBracket locate_t_star(int d, const BigRational& width);

/// Bracket around the unique zero of the numerator of g_d in (-1, inf) if the
/// Sturm count there is exactly one, otherwise nullopt.
std::optional<RootBracket> locate_a_maximizer(int d, const BigRational& width);

/// Integer candidates floor(d^2/6 - 3d/2 + 7/3) .. ceil(d^2/6 - d/2 - 2/3), clamped at 0.
IntegerWindow q_star_window(int d);
/// {0} for d = 3, 4; floor(d^2/6 - 3d/2 + 5/3) .. ceil(d^2/6 - d/2 - 1) otherwise, clamped at 0.
IntegerWindow a_star_window(int d);

/// Exact maximum of Q_d over its window; ties go to the smaller ell. The
/// real maximizer is bracketed to `width` unless width is nullopt (the Sturm
/// certification dominates the cost for large d).
StarResult q_star(int d, const std::optional<BigRational>& width = make_rational(1, 1000));
/// Maximum of A_d over its window compared through exact squares.
StarResult a_star(int d, const std::optional<BigRational>& width = make_rational(1, 1000));

struct Counterexample {
  BigRational eta;
  BigRational ratio;  // R_d(eta) > 1
};

/// Grid points where R_d(eta) > 1, sorted by eta. Every grid value must exceed
/// d - 1 (std::invalid_argument otherwise).
std::vector<Counterexample> counterexample_scan(int d, const std::vector<BigRational>& eta_grid, int threads = 1);

struct ZeroWindowReport {
  int d = 0;
  BigRational upper_start;  // d^2/6 - d/2 - 1
  BigRational lower_end;    // d^2/6 - 3d/2 + 5/3
  int upper_samples = 0;
  int lower_samples = 0;  // zero when the lower interval (-1, lower_end] is empty
  bool holds = false;
  std::string failure;  // first violated statement, empty on success
};

/// Exact sign checks for odd d >= 5: g_d < 0 from d^2/6 - d/2 - 1 onwards and
/// g_d > 0 on (-1, d^2/6 - 3d/2 + 5/3], at the endpoints and 16 samples per
/// side, each backed by the h_a comparison functions.
ZeroWindowReport a_zero_window_check(int d);

/// Crossover point of the h_a sign statements in the shifted variable s:
/// ((d-1)/2 + a)^(-1) ((d^3 - 6d^2 + 11d - 3)/12 - (d-2) a / 2).
BigRational h_a_sign_threshold(int d, const BigRational& a);

}  // namespace coulomb_sharp::optima
