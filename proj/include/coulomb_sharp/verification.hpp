#pragma once

// Machine checks of the inequalities, identities and expansions around the
// shifted Coulomb Hamiltonian. Each check yields a CheckRecord carrying exact
// witnesses for both sides of the statement it tests.

#include "coulomb_sharp/exact/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coulomb_sharp::verification {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, skipped, inconclusive };

std::string to_string(Verdict verdict);

struct CheckRecord {
  std::string check_id;
  Json params = Json::object();
  Verdict verdict = Verdict::skipped;
  Json witness = Json::object();
  std::string note;

  /// {"check_id", "params", "verdict", "witness", "note"} in that order.
  Json to_json() const;
  /// Single-line JSON without trailing newline.
  std::string to_json_line() const;
  /// fail and inconclusive both count as failures.
  bool failed() const { return verdict == Verdict::fail || verdict == Verdict::inconclusive; }
};

/// Tr(H)_- <= max(0, lt_rhs(gamma=1) - eta^2 / (4(d-1)(d-2)^2)), exact. d = 3 is
/// reported as skipped since the corrected bound fails there.
CheckRecord check_lt_gamma1(int d, const BigRational& eta);

/// d = 3, gamma = 1 envelopes
///   max(0, eta^3/12 - eta^2/8 - eta/12) <= Tr <= max(0, eta^3/12 - eta^2/8 + k/24)
/// with k = 2 ceil(eta/2) - 1, plus equality on the upper side at odd integer
/// eta > 2 and on the lower side at even integer eta.
CheckRecord check_d3_envelopes(const BigRational& eta);

/// phi(2m + 2 eps) = -(2/3) eps^3 + ((1-2m)/2) eps^2 + m eps - m/6 lies in
/// [-eta/12, (2m+1)/24] and agrees with Tr - (eta^3/12 - eta^2/8) for d = 3.
CheckRecord check_phi_envelope(long m, const BigRational& eps);

/// (d-1)! (d-2) sum_{j<=ell} mu_j / (2j+d-1)^2 <= alpha p_{d-2}(ell) - (d-3)!/4
/// with alpha = 1/2 + (d-3)/(2(d-1+2 ell)) + 1/(4(d-2+ell)).
CheckRecord check_abel_bound(int d, long ell);

/// G(ell)^2 <= 1 and G(ell)^2 < G(ell+1)^2 for 0 <= ell <= ell_max.
CheckRecord check_big_g_bound(int d, long ell_max);

/// The lower-bound numerator for (log G)' has non-negative coefficients and
/// matches its quadratic closed form.
CheckRecord check_g_monotonicity_numerator(int d);

/// sum_{j=1}^{d-1} (2j-d+1) = d-1 and
/// sum_{j=1}^{d-1} (2j-d+1)^2 = (4/3) d (d^2-1) - (d-1)(d^2+2d-1).
CheckRecord check_appendix_sums(int d);

/// m p_{m-1}(t) = p_m(t) - p_m(t-1) as polynomials, and
/// m sum_{j=0}^{ell} p_{m-1}(j) = p_m(ell) for 0 <= ell <= ell_max.
CheckRecord check_pochhammer_identities(int m, long ell_max);

/// Factorial and binomial multiplicities agree and the cumulative count
/// matches term-by-term summation for levels 0..k_max.
CheckRecord check_level_counts(int d, long k_max);

/// Q'/Q = f_d and (A^2)'/A^2 = 2 g_d as reduced rational functions.
CheckRecord check_log_derivatives(int d);

/// Numerator of f_d: degree d-2, leading -d/2, next -d/2 (d^2/3 - floor(d/2) - 1/3);
/// denominator of degree d.
CheckRecord check_f_coefficients(int d);

/// Even d >= 6: numerator of g_d has degree d-3, leading -d/2 and next
/// -d/2 (d^2/3 - d + 2/3).
CheckRecord check_g_polynomial_form(int d);

/// Odd d >= 5: numerator p_a of h_a has degree d-2, leading -((d-1)/2 + a) and
/// next (d^3 - 6d^2 + 8d)/12 - (d-1) a / 2.
CheckRecord check_p_a_coefficients(int d, const BigRational& a);

/// The Sturm-certified zero of f_d above -1 lies strictly inside
/// (d^2/6 - 3d/2 + 7/3, d^2/6 - d/2 - 2/3). d = 3 is skipped.
CheckRecord check_maximizer_bounds(int d);

/// Q_d* > 1 exactly.
CheckRecord check_q_star(int d);

/// (A_d*)^2 > (Q_d*)^2 exactly.
CheckRecord check_a_star(int d);

/// Sign statements for g_d outside the candidate window of A_d* (odd d >= 5;
/// even d is skipped).
CheckRecord check_a_zero_window(int d);

/// R_d(eta) = N / clr_rhs > 1.
CheckRecord check_clr_excess(int d, const BigRational& eta);

/// Calibrated bounds on |d^3 (Q_d* - 1 - 3/(2d) - 45/(8d^2))| and
/// |d^3 (A_d* - Q_d*)|: twice the largest residual observed over d in [50, 400].
BigRational residual_bound_q();
BigRational residual_bound_a();

/// Both residual sequences bounded by the calibrated constants for d >= 50
/// (smaller d only recorded) and without growth over [d_lo, d_hi]: the max over
/// the upper half of the range is at most 3/2 times the max over the lower
/// half. Requires 10 <= d_lo <= d_hi <= 400.
CheckRecord check_asymptotics(int d_lo, int d_hi, int precision = 40, int threads = 1);

/// Tr(H)_-^gamma < lt_rhs(gamma) for 1 <= gamma < d/2. Exact when gamma is an
/// integer; otherwise the comparison needs a margin of more than 10 units in
/// the last digit, with up to three precision doublings before the record is
/// reported inconclusive. Throws std::invalid_argument("theorem range is
/// gamma >= 1") or std::domain_error("phase-space integral diverges ...").
CheckRecord check_lt_general_gamma(int d, const BigRational& eta, const BigRational& gamma, int precision = 30);

struct EtaGrid {
  BigRational start;
  BigRational stop;
  BigRational step;

  /// start + k step for k >= 1 while <= stop, i.e. the half-open (start, stop].
  std::vector<BigRational> points() const;
};

struct SuiteOptions {
  std::vector<int> d_values;  // empty: suite default
  // lt-gamma1: replaces d-1 + k/10; d3-envelopes: replaces (2, 20]; clr: excess
  // R_d(eta) > 1 on the grid instead of the constant checks
  std::optional<EtaGrid> eta_grid;
  std::optional<BigRational> gamma;  // lt-gamma1 also runs the general-gamma check
  int precision = 30;
  int threads = 1;
};

/// lt-gamma1, d3-envelopes, coefficients, identities, asymptotics, clr, all.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs a suite; records come back in deterministic order regardless of the
/// thread count. Throws std::invalid_argument for an unknown suite.
std::vector<CheckRecord> run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace coulomb_sharp::verification
