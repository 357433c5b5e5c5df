#include "coulomb_sharp/verification.hpp"

#include "coulomb_sharp/optima.hpp"
#include "coulomb_sharp/parallel.hpp"
#include "coulomb_sharp/phase_space.hpp"
#include "coulomb_sharp/ratfun_zoo.hpp"
#include "coulomb_sharp/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace coulomb_sharp::verification {

namespace {

constexpr int kDecimalDigits = 15;
constexpr int kCalibrationStart = 50;

using spectrum::SpectrumParams;

Json side(const BigRational& value) {
  return Json{{"exact", coulomb_sharp::to_string(value)}, {"decimal", to_decimal(value, kDecimalDigits)}};
}

Json side(const HighPrecisionReal& value) { return Json{{"decimal", value.value.to_decimal(kDecimalDigits)}}; }

CheckRecord record(std::string id, Json params) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  return r;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

BigRational half(long n) { return make_rational(n, 2); }

BigRational max0(const BigRational& x) { return x > 0 ? x : BigRational(0); }

Json coefficient_witness(const Polynomial& p, int expected_degree, const BigRational& leading,
                         const BigRational& next) {
  Json w;
  w["degree"] = p.degree();
  w["expected_degree"] = expected_degree;
  w["leading"] = coulomb_sharp::to_string(p.leading());
  w["expected_leading"] = coulomb_sharp::to_string(leading);
  w["next"] = p.degree() >= 1 ? coulomb_sharp::to_string(p.coefficient(p.degree() - 1)) : "0";
  w["expected_next"] = coulomb_sharp::to_string(next);
  return w;
}

bool top_coefficients_match(const Polynomial& p, int expected_degree, const BigRational& leading,
                            const BigRational& next) {
  return p.degree() == expected_degree && p.leading() == leading && p.coefficient(expected_degree - 1) == next;
}

void require_odd_at_least_five(int d) {
  if (d < 5 || d % 2 == 0) throw std::invalid_argument("requires odd d >= 5");
}

BigRational bigcube(long d) { return BigRational(d * d * d); }

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Json CheckRecord::to_json() const {
  Json out;
  out["check_id"] = check_id;
  out["params"] = params;
  out["verdict"] = verification::to_string(verdict);
  out["witness"] = witness;
  out["note"] = note;
  return out;
}

std::string CheckRecord::to_json_line() const { return to_json().dump(); }

CheckRecord check_lt_gamma1(int d, const BigRational& eta) {
  CheckRecord r = record("lt_gamma1", {{"d", d}, {"eta", coulomb_sharp::to_string(eta)}});
  const SpectrumParams params(d, eta);
  if (d == 3) {
    r.verdict = Verdict::skipped;
    r.note = "the corrected gamma = 1 bound does not hold for d = 3";
    return r;
  }
  const BigRational trace = spectrum::riesz_mean_exact(params, 1);
  const auto phase = std::get<phase_space::PiScaledRational>(phase_space::lt_rhs(d, eta, 1, 30));
  const BigRational correction = eta * eta / BigRational(4L * (d - 1) * (d - 2) * (d - 2));
  const BigRational bound = max0(phase.ratio - correction);
  r.witness = Json{{"lhs", side(trace)}, {"rhs", side(bound)}, {"phase_space", side(phase.ratio)},
                   {"correction", side(correction)}};
  r.verdict = verdict_of(trace <= bound);
  return r;
}

CheckRecord check_d3_envelopes(const BigRational& eta) {
  CheckRecord r = record("d3_envelopes", {{"eta", coulomb_sharp::to_string(eta)}});
  const BigRational trace = spectrum::riesz_mean_exact(SpectrumParams(3, eta), 1);
  const BigRational base = pow(eta, 3) / 12 - eta * eta / 8;
  const BigRational kappa = BigRational(2 * ceil_int(eta / 2) - 1);
  const BigRational lower = max0(base - eta / 12);
  const BigRational upper = max0(base + kappa / 24);
  const bool integer = eta.get_den() == 1;
  const bool odd = integer && eta.get_num() % 2 != 0;
  const bool upper_required = odd && eta > 2;
  const bool lower_required = integer && !odd;
  const bool upper_equal = trace == upper;
  const bool lower_equal = trace == lower;
  r.witness = Json{{"lower", side(lower)},
                   {"trace", side(trace)},
                   {"upper", side(upper)},
                   {"lower_equality", lower_equal},
                   {"upper_equality", upper_equal}};
  const bool contained = lower <= trace && trace <= upper;
  r.verdict = verdict_of(contained && (!upper_required || upper_equal) && (!lower_required || lower_equal));
  if (contained && upper_required && !upper_equal) r.note = "expected equality with the upper envelope";
  if (contained && lower_required && !lower_equal) r.note = "expected equality with the lower envelope";
  return r;
}

CheckRecord check_phi_envelope(long m, const BigRational& eps) {
  if (m < 1 || eps <= 0 || eps > 1) throw std::invalid_argument("requires m >= 1 and 0 < eps <= 1");
  CheckRecord r = record("phi_envelope", {{"m", m}, {"eps", coulomb_sharp::to_string(eps)}});
  const BigRational eta = 2 * (m + eps);
  const BigRational phi = -make_rational(2, 3) * pow(eps, 3) + half(1 - 2 * m) * eps * eps + m * eps - make_rational(m, 6);
  const BigRational lower = -eta / 12;
  const BigRational upper = make_rational(2 * m + 1, 24);
  const BigRational from_trace =
      spectrum::riesz_mean_exact(SpectrumParams(3, eta), 1) - (pow(eta, 3) / 12 - eta * eta / 8);
  r.witness = Json{{"lower", side(lower)},       {"phi", side(phi)},
                   {"upper", side(upper)},       {"trace_minus_leading", side(from_trace)},
                   {"lower_equality", phi == lower}, {"upper_equality", phi == upper}};
  r.verdict = verdict_of(lower <= phi && phi <= upper && phi == from_trace);
  return r;
}

CheckRecord check_abel_bound(int d, long ell) {
  if (d < 4 || ell < 0) throw std::invalid_argument("requires d >= 4 and ell >= 0");
  CheckRecord r = record("abel_bound", {{"d", d}, {"ell", ell}});
  BigRational sum = 0;
  for (long j = 0; j <= ell; ++j) {
    const long denom = 2 * j + d - 1;
    sum += BigRational(spectrum::multiplicity(d, j)) / BigRational(denom * denom);
  }
  const BigRational lhs = BigRational(factorial(d - 1)) * (d - 2) * sum;
  const BigRational alpha =
      half(1) + make_rational(d - 3, 2 * (d - 1 + 2 * ell)) + make_rational(1, 4 * (d - 2 + ell));
  const BigRational rhs = alpha * zoo::pochhammer(d - 2, ell) - BigRational(factorial(d - 3)) / 4;
  r.witness = Json{{"lhs", side(lhs)}, {"rhs", side(rhs)}, {"alpha", side(alpha)}, {"equality", lhs == rhs}};
  r.verdict = verdict_of(lhs <= rhs);
  return r;
}

CheckRecord check_big_g_bound(int d, long ell_max) {
  if (d < 4 || ell_max < 0) throw std::invalid_argument("requires d >= 4 and ell_max >= 0");
  CheckRecord r = record("big_g_bound", {{"d", d}, {"ell_max", ell_max}});
  BigRational previous = zoo::big_g_squared(d, 0);
  r.witness["g_squared_at_0"] = side(previous);
  r.verdict = Verdict::pass;
  if (previous > 1) {
    r.verdict = Verdict::fail;
    r.witness["violation"] = Json{{"ell", 0}, {"g_squared", side(previous)}, {"bound", side(1)}};
    return r;
  }
  for (long ell = 1; ell <= ell_max; ++ell) {
    const BigRational current = zoo::big_g_squared(d, ell);
    if (current > 1 || current <= previous) {
      r.verdict = Verdict::fail;
      r.witness["violation"] = Json{{"ell", ell}, {"g_squared", side(current)}, {"previous", side(previous)}};
      r.note = current > 1 ? "G(ell)^2 exceeds 1" : "G(ell)^2 not strictly increasing";
      return r;
    }
    previous = current;
  }
  r.witness["g_squared_at_ell_max"] = side(previous);
  return r;
}

CheckRecord check_g_monotonicity_numerator(int d) {
  if (d < 4) throw std::invalid_argument("requires d >= 4");
  CheckRecord r = record("g_monotonicity_numerator", {{"d", d}});
  const Polynomial h = zoo::g_monotonicity_numerator(d);
  const long dl = d;
  const Polynomial closed({make_rational(dl * (dl - 1) * (dl - 2) * (dl - 3), 32),
                           make_rational((5 * dl - 16) * (dl - 1) * (dl - 2), 16),
                           make_rational((dl - 2) * (dl - 4), 4)});
  const bool nonnegative = std::all_of(h.coefficients().begin(), h.coefficients().end(),
                                       [](const BigRational& c) { return c >= 0; });
  r.witness = Json{{"numerator", h.to_string()}, {"closed_form", closed.to_string()}, {"nonnegative", nonnegative}};
  r.verdict = verdict_of(h == closed && nonnegative);
  return r;
}

CheckRecord check_appendix_sums(int d) {
  if (d < 3) throw std::invalid_argument("requires d >= 3");
  CheckRecord r = record("appendix_sums", {{"d", d}});
  BigInt linear = 0;
  BigInt quadratic = 0;
  for (long j = 1; j <= d - 1; ++j) {
    const BigInt term = 2 * j - d + 1;
    linear += term;
    quadratic += term * term;
  }
  const BigRational dd = d;
  const BigRational linear_formula = dd - 1;
  const BigRational quadratic_formula = make_rational(4, 3) * dd * (dd * dd - 1) - (dd - 1) * (dd * dd + 2 * dd - 1);
  r.witness = Json{{"linear_sum", coulomb_sharp::to_string(linear)},
                   {"linear_formula", coulomb_sharp::to_string(linear_formula)},
                   {"quadratic_sum", coulomb_sharp::to_string(quadratic)},
                   {"quadratic_formula", coulomb_sharp::to_string(quadratic_formula)}};
  r.verdict = verdict_of(BigRational(linear) == linear_formula && BigRational(quadratic) == quadratic_formula);
  return r;
}

CheckRecord check_pochhammer_identities(int m, long ell_max) {
  if (m < 1 || ell_max < 0) throw std::invalid_argument("requires m >= 1 and ell_max >= 0");
  CheckRecord r = record("pochhammer_identities", {{"m", m}, {"ell_max", ell_max}});
  const Polynomial pm = zoo::pochhammer_polynomial(m);
  const Polynomial lhs = BigRational(m) * zoo::pochhammer_polynomial(m - 1);
  const Polynomial rhs = pm - pm.shifted(-1);
  r.witness["recursion"] = Json{{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
  r.verdict = verdict_of(lhs == rhs);
  BigRational running = 0;
  for (long ell = 0; ell <= ell_max; ++ell) {
    running += zoo::pochhammer(m - 1, ell);
    const BigRational closed = zoo::pochhammer(m, ell);
    if (m * running != closed) {
      r.verdict = Verdict::fail;
      r.witness["telescoping_violation"] =
          Json{{"ell", ell}, {"sum", side(BigRational(m * running))}, {"closed", side(closed)}};
      return r;
    }
  }
  r.witness["telescoping_at_ell_max"] = side(BigRational(m * running));
  return r;
}

CheckRecord check_level_counts(int d, long k_max) {
  if (d < 3 || k_max < 0) throw std::invalid_argument("requires d >= 3 and k_max >= 0");
  CheckRecord r = record("level_counts", {{"d", d}, {"k_max", k_max}});
  BigInt running = 0;
  r.verdict = Verdict::pass;
  for (long k = 0; k <= k_max; ++k) {
    const BigInt mu = spectrum::multiplicity(d, k);
    const BigInt mu_binomial = spectrum::multiplicity_binomial(d, k);
    running += mu;
    const BigInt closed = spectrum::cumulative_count(d, k);
    if (mu != mu_binomial || running != closed) {
      r.verdict = Verdict::fail;
      r.witness = Json{{"k", k},
                       {"multiplicity", coulomb_sharp::to_string(mu)},
                       {"multiplicity_binomial", coulomb_sharp::to_string(mu_binomial)},
                       {"running_sum", coulomb_sharp::to_string(running)},
                       {"cumulative_count", coulomb_sharp::to_string(closed)}};
      return r;
    }
  }
  r.witness = Json{{"cumulative_count_at_k_max", coulomb_sharp::to_string(running)}};
  return r;
}

CheckRecord check_log_derivatives(int d) {
  CheckRecord r = record("log_derivatives", {{"d", d}});
  const RationalFunction q_log = zoo::q_as_ratfun(d).log_derivative();
  const RationalFunction f = zoo::f_as_ratfun(d);
  const RationalFunction a_log = zoo::a_squared_as_ratfun(d).log_derivative();
  const RationalFunction two_g = BigRational(2) * zoo::g_as_ratfun(d);
  const bool q_ok = q_log == f;
  const bool a_ok = a_log == two_g;
  r.witness = Json{{"q_matches_f", q_ok}, {"a_squared_matches_2g", a_ok}};
  if (!q_ok) {
    r.witness["q_log_derivative"] = q_log.numerator().to_string() + " / " + q_log.denominator().to_string();
    r.witness["f"] = f.numerator().to_string() + " / " + f.denominator().to_string();
  }
  if (!a_ok) {
    r.witness["a_squared_log_derivative"] = a_log.numerator().to_string() + " / " + a_log.denominator().to_string();
    r.witness["two_g"] = two_g.numerator().to_string() + " / " + two_g.denominator().to_string();
  }
  r.verdict = verdict_of(q_ok && a_ok);
  return r;
}

CheckRecord check_f_coefficients(int d) {
  CheckRecord r = record("f_coefficients", {{"d", d}});
  const RationalFunction f = zoo::f_as_ratfun(d);
  const BigRational lead = -half(d);
  const BigRational next = lead * (make_rational(static_cast<long>(d) * d, 3) - (d / 2) - make_rational(1, 3));
  r.witness = coefficient_witness(f.numerator(), d - 2, lead, next);
  r.witness["denominator_degree"] = f.denominator().degree();
  r.verdict = verdict_of(top_coefficients_match(f.numerator(), d - 2, lead, next) && f.denominator().degree() == d);
  return r;
}

CheckRecord check_g_polynomial_form(int d) {
  if (d < 6 || d % 2 != 0) throw std::invalid_argument("requires even d >= 6");
  CheckRecord r = record("g_polynomial_form", {{"d", d}});
  const RationalFunction g = zoo::g_as_ratfun(d);
  const BigRational lead = -half(d);
  const BigRational next = lead * (make_rational(static_cast<long>(d) * d, 3) - d + make_rational(2, 3));
  r.witness = coefficient_witness(g.numerator(), d - 3, lead, next);
  r.witness["denominator_degree"] = g.denominator().degree();
  r.verdict =
      verdict_of(top_coefficients_match(g.numerator(), d - 3, lead, next) && g.denominator().degree() == d - 1);
  return r;
}

CheckRecord check_p_a_coefficients(int d, const BigRational& a) {
  require_odd_at_least_five(d);
  CheckRecord r = record("p_a_coefficients", {{"d", d}, {"a", coulomb_sharp::to_string(a)}});
  const RationalFunction h = zoo::h_a_as_ratfun(d, a);
  const long dl = d;
  const BigRational lead = -(half(d - 1) + a);
  const BigRational next = make_rational(dl * dl * dl - 6 * dl * dl + 8 * dl, 12) - half(d - 1) * a;
  r.witness = coefficient_witness(h.numerator(), d - 2, lead, next);
  r.verdict = verdict_of(top_coefficients_match(h.numerator(), d - 2, lead, next));
  return r;
}

CheckRecord check_maximizer_bounds(int d) {
  CheckRecord r = record("maximizer_bounds", {{"d", d}});
  if (d == 3) {
    r.verdict = Verdict::skipped;
    r.note = "Q_3 is strictly decreasing on (-1, inf)";
    return r;
  }
  const auto [lower, upper] = optima::maximizer_bounds(d);
  const Polynomial p = zoo::f_as_ratfun(d).numerator();
  const int zeros = sturm_count_above(p, -1);
  const RootBracket bracket = optima::locate_t_star(d, make_rational(1, 1000));
  const int sign_lower = p.sign_at(lower);
  const int sign_upper = p.sign_at(upper);
  r.witness = Json{{"lower_bound", side(lower)},
                   {"upper_bound", side(upper)},
                   {"bracket", Json::array({coulomb_sharp::to_string(bracket.lower),
                                            coulomb_sharp::to_string(bracket.upper)})},
                   {"zeros_above_minus_one", zeros},
                   {"sign_at_lower_bound", sign_lower},
                   {"sign_at_upper_bound", sign_upper}};
  // one zero above -1 and a strict sign change across [lower, upper] with lower >= -1
  r.verdict = verdict_of(zeros == 1 && lower >= -1 && sign_lower * sign_upper < 0);
  return r;
}

CheckRecord check_q_star(int d) {
  CheckRecord r = record("q_star", {{"d", d}});
  const optima::StarResult s = optima::q_star(d, std::nullopt);
  r.witness = Json{{"value", side(*s.value)},
                   {"bound", side(1)},
                   {"argmax_ell", s.argmax_ell},
                   {"window", Json::array({s.candidate_window.lower, s.candidate_window.upper})},
                   {"tie", s.tie}};
  r.verdict = verdict_of(*s.value > 1);
  return r;
}

CheckRecord check_a_star(int d) {
  CheckRecord r = record("a_star", {{"d", d}});
  const optima::StarResult a = optima::a_star(d, std::nullopt);
  const optima::StarResult q = optima::q_star(d, std::nullopt);
  const BigRational q_squared = *q.value * *q.value;
  r.witness = Json{{"a_star_squared", side(a.value_squared)},
                   {"q_star_squared", side(q_squared)},
                   {"argmax_ell", a.argmax_ell},
                   {"window", Json::array({a.candidate_window.lower, a.candidate_window.upper})},
                   {"tie", a.tie}};
  r.verdict = verdict_of(a.value_squared > q_squared);
  return r;
}

CheckRecord check_a_zero_window(int d) {
  CheckRecord r = record("a_zero_window", {{"d", d}});
  if (d < 5 || d % 2 == 0) {
    r.verdict = Verdict::skipped;
    r.note = "the comparison functions h_a are defined for odd d >= 5";
    return r;
  }
  const optima::ZeroWindowReport report = optima::a_zero_window_check(d);
  r.witness = Json{{"upper_start", side(report.upper_start)},
                   {"lower_end", side(report.lower_end)},
                   {"upper_samples", report.upper_samples},
                   {"lower_samples", report.lower_samples}};
  if (!report.holds) r.witness["failure"] = report.failure;
  r.verdict = verdict_of(report.holds);
  return r;
}

CheckRecord check_clr_excess(int d, const BigRational& eta) {
  CheckRecord r = record("clr_excess", {{"d", d}, {"eta", coulomb_sharp::to_string(eta)}});
  const BigInt count = spectrum::counting_function(SpectrumParams(d, eta));
  const BigRational clr = phase_space::clr_rhs(d, eta);
  const BigRational ratio = zoo::r_eval(d, eta);
  r.witness = Json{{"count", coulomb_sharp::to_string(count)}, {"clr_rhs", side(clr)}, {"ratio", side(ratio)}};
  r.verdict = verdict_of(ratio > 1);
  return r;
}

BigRational residual_bound_q() { return make_rational(3876, 100); }
BigRational residual_bound_a() { return make_rational(1053, 100); }

CheckRecord check_asymptotics(int d_lo, int d_hi, int precision, int threads) {
  if (d_lo < 10 || d_hi > 400 || d_lo > d_hi) throw std::invalid_argument("range must lie within [10, 400]");
  CheckRecord r = record("asymptotics", {{"d_lo", d_lo}, {"d_hi", d_hi}, {"precision", precision}});

  struct Residuals {
    BigRational r_q;
    HighPrecisionReal r_a;
  };
  const std::size_t count = static_cast<std::size_t>(d_hi - d_lo + 1);
  const auto residuals = ordered_parallel_map(count, threads, [&](std::size_t i) {
    const int d = d_lo + static_cast<int>(i);
    const BigRational q = *optima::q_star(d, std::nullopt).value;
    const BigRational a_squared = optima::a_star(d, std::nullopt).value_squared;
    const BigRational dd = d;
    const BigRational r_q = bigcube(d) * (q - 1 - 3 / (2 * dd) - 45 / (8 * dd * dd));
    HighPrecisionReal r_a = evaluate_validated(precision, [&](mpfr_prec_t bits) {
      return (sqrt(Real(a_squared, bits)) - Real(q, bits)) * Real(bigcube(d), bits);
    });
    return Residuals{r_q, std::move(r_a)};
  });

  const int mid = (d_lo + d_hi) / 2;
  const mpfr_prec_t bits = bits_for_digits(precision + 10);
  BigRational q_max = 0, q_lower = 0, q_upper = 0;
  Real a_max(0L, bits), a_lower(0L, bits), a_upper(0L, bits);
  // the bounds are calibrated on [50, 400]; smaller d are recorded but not bounded
  BigRational q_calibrated = 0;
  Real a_calibrated(0L, bits);
  int q_arg = d_lo, a_arg = d_lo;
  Json r_q_list = Json::array();
  Json r_a_list = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const int d = d_lo + static_cast<int>(i);
    const BigRational rq = abs(residuals[i].r_q);
    const Real ra = abs(residuals[i].r_a.value);
    if (rq > q_max) {
      q_max = rq;
      q_arg = d;
    }
    if (ra > a_max) {
      a_max = ra;
      a_arg = d;
    }
    if (d >= kCalibrationStart) {
      if (rq > q_calibrated) q_calibrated = rq;
      if (ra > a_calibrated) a_calibrated = ra;
    }
    BigRational& q_half = d <= mid ? q_lower : q_upper;
    Real& a_half = d <= mid ? a_lower : a_upper;
    if (rq > q_half) q_half = rq;
    if (ra > a_half) a_half = ra;
    r_q_list.push_back(Json::array({d, to_decimal(residuals[i].r_q, kDecimalDigits)}));
    r_a_list.push_back(Json::array({d, residuals[i].r_a.value.to_decimal(kDecimalDigits)}));
  }

  const bool has_upper_half = d_hi > mid;
  const BigRational growth = make_rational(3, 2);
  const bool q_bounded = q_calibrated <= residual_bound_q();
  const bool a_bounded = a_calibrated <= Real(residual_bound_a(), bits);
  const bool q_trend = !has_upper_half || q_upper <= growth * q_lower;
  const bool a_trend = !has_upper_half || a_upper <= Real(growth, bits) * a_lower;

  r.witness = Json{{"bound_q", side(residual_bound_q())},
                   {"max_r_q", Json{{"d", q_arg}, {"value", to_decimal(q_max, kDecimalDigits)}}},
                   {"bound_a", side(residual_bound_a())},
                   {"bounded_from", kCalibrationStart},
                   {"max_r_a", Json{{"d", a_arg}, {"value", a_max.to_decimal(kDecimalDigits)}}},
                   {"trend_q", Json{{"lower_half_max", to_decimal(q_lower, kDecimalDigits)},
                                    {"upper_half_max", to_decimal(q_upper, kDecimalDigits)}}},
                   {"trend_a", Json{{"lower_half_max", a_lower.to_decimal(kDecimalDigits)},
                                    {"upper_half_max", a_upper.to_decimal(kDecimalDigits)}}},
                   {"r_q", std::move(r_q_list)},
                   {"r_a", std::move(r_a_list)}};
  if (!has_upper_half) r.note = "single dimension: trend clause holds vacuously";
  if (d_lo < kCalibrationStart) {
    if (!r.note.empty()) r.note += "; ";
    r.note += "residuals below d = 50 are recorded but not bounded";
  }
  r.verdict = verdict_of(q_bounded && a_bounded && q_trend && a_trend);
  return r;
}

CheckRecord check_lt_general_gamma(int d, const BigRational& eta, const BigRational& gamma, int precision) {
  if (gamma < 1) throw std::invalid_argument("theorem range is gamma >= 1");
  const phase_space::PhaseSpaceValue rhs = phase_space::lt_rhs(d, eta, gamma, precision);
  const SpectrumParams params(d, eta);
  CheckRecord r = record("lt_general_gamma", {{"d", d},
                                              {"eta", coulomb_sharp::to_string(eta)},
                                              {"gamma", coulomb_sharp::to_string(gamma)},
                                              {"precision", precision}});

  const auto* exact_rhs = std::get_if<phase_space::PiScaledRational>(&rhs);
  if (gamma.get_den() == 1 && exact_rhs != nullptr && exact_rhs->is_rational()) {
    const BigRational lhs = spectrum::riesz_mean_exact(params, gamma.get_num().get_si());
    r.witness = Json{{"lhs", side(lhs)}, {"rhs", side(exact_rhs->ratio)}};
    r.note = "exact";
    r.verdict = verdict_of(lhs < exact_rhs->ratio);
    return r;
  }

  if (exact_rhs != nullptr) {
    r.witness["rhs_exact"] = Json{{"ratio", coulomb_sharp::to_string(exact_rhs->ratio)},
                                  {"pi_half_power", exact_rhs->pi_half_power}};
  }
  int digits = precision;
  for (int attempt = 0; attempt <= 3; ++attempt, digits *= 2) {
    const spectrum::SpectralValue lhs_value = spectrum::riesz_mean({params, gamma, digits});
    const HighPrecisionReal lhs =
        std::holds_alternative<BigRational>(lhs_value)
            ? HighPrecisionReal{Real(std::get<BigRational>(lhs_value), bits_for_digits(digits)), digits}
            : std::get<HighPrecisionReal>(lhs_value);
    const HighPrecisionReal rhs_real =
        exact_rhs != nullptr ? exact_rhs->to_real(digits)
                             : phase_space::to_real(phase_space::lt_rhs(d, eta, gamma, digits), digits);
    r.witness["lhs"] = side(lhs);
    r.witness["rhs"] = side(rhs_real);
    r.witness["digits"] = digits;
    const StrictOrder order = strict_order(lhs, rhs_real);
    if (order == StrictOrder::less) {
      r.verdict = Verdict::pass;
      return r;
    }
    if (order == StrictOrder::greater) {
      r.verdict = Verdict::fail;
      return r;
    }
  }
  r.verdict = Verdict::inconclusive;
  r.note = "margin below 10 units in the last digit after three precision doublings";
  return r;
}

std::vector<BigRational> EtaGrid::points() const {
  if (step <= 0) throw std::invalid_argument("eta grid step must be positive");
  if (start >= stop) throw std::invalid_argument("eta grid start must be below stop");
  std::vector<BigRational> out;
  for (BigRational x = start + step; x <= stop; x += step) out.push_back(x);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lt-gamma1",  "d3-envelopes", "coefficients", "identities",
                                                 "asymptotics", "clr",          "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

using Task = std::function<CheckRecord()>;

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

std::vector<int> dimensions(const SuiteOptions& options, int lo, int hi) {
  return options.d_values.empty() ? range(lo, hi) : options.d_values;
}

void lt_gamma1_tasks(const SuiteOptions& options, std::vector<Task>& tasks) {
  for (int d : dimensions(options, 4, 10)) {
    std::vector<BigRational> grid;
    if (options.eta_grid) {
      grid = options.eta_grid->points();
    } else {
      for (long k = 1; k <= 400; ++k) grid.push_back(d - 1 + make_rational(k, 10));
    }
    for (const auto& eta : grid) {
      tasks.push_back([d, eta] { return check_lt_gamma1(d, eta); });
      if (!options.gamma) continue;
      const BigRational gamma = *options.gamma;
      const int precision = options.precision;
      tasks.push_back([d, eta, gamma, precision] {
        if (gamma * 2 >= d) {
          CheckRecord r = record("lt_general_gamma", {{"d", d},
                                                      {"eta", coulomb_sharp::to_string(eta)},
                                                      {"gamma", coulomb_sharp::to_string(gamma)},
                                                      {"precision", precision}});
          r.note = "gamma >= d/2: phase-space integral diverges";
          return r;
        }
        return check_lt_general_gamma(d, eta, gamma, precision);
      });
    }
  }
}

void d3_envelope_tasks(const SuiteOptions& options, std::vector<Task>& tasks) {
  const EtaGrid grid = options.eta_grid.value_or(EtaGrid{2, 20, make_rational(1, 100)});
  for (const auto& eta : grid.points()) tasks.push_back([eta] { return check_d3_envelopes(eta); });
  for (long m = 1; m <= 9; ++m)
    for (long k = 1; k <= 16; ++k) tasks.push_back([m, k] { return check_phi_envelope(m, make_rational(k, 16)); });
}

void coefficient_tasks(const SuiteOptions& options, std::vector<Task>& tasks) {
  for (int d : dimensions(options, 3, 60)) {
    tasks.push_back([d] { return check_f_coefficients(d); });
    if (d >= 6 && d % 2 == 0) tasks.push_back([d] { return check_g_polynomial_form(d); });
    if (d >= 5 && d % 2 == 1) {
      tasks.push_back([d] { return check_p_a_coefficients(d, make_rational(1, 2)); });
      tasks.push_back([d] { return check_p_a_coefficients(d, zoo::sandwich_weight(d)); });
    }
  }
}

void identity_tasks(const SuiteOptions& options, std::vector<Task>& tasks) {
  for (int d : dimensions(options, 3, 30)) {
    tasks.push_back([d] { return check_pochhammer_identities(d, 50); });
    tasks.push_back([d] { return check_appendix_sums(d); });
    tasks.push_back([d] { return check_level_counts(d, 60); });
    tasks.push_back([d] { return check_log_derivatives(d); });
    if (d < 4) continue;
    for (long ell = 0; ell <= 30; ++ell) tasks.push_back([d, ell] { return check_abel_bound(d, ell); });
    tasks.push_back([d] { return check_big_g_bound(d, 200); });
    tasks.push_back([d] { return check_g_monotonicity_numerator(d); });
  }
}

void asymptotic_tasks(const SuiteOptions& options, std::vector<Task>& tasks) {
  std::vector<int> ds;
  for (int d : dimensions(options, 50, 200))
    if (d >= 10 && d <= 400) ds.push_back(d);
  if (ds.empty()) {
    tasks.push_back([] {
      CheckRecord r = record("asymptotics", Json::object());
      r.note = "no dimension in [10, 400] requested";
      return r;
    });
    return;
  }
  const auto [lo, hi] = std::minmax_element(ds.begin(), ds.end());
  const int d_lo = *lo, d_hi = *hi, precision = std::max(options.precision, 40), threads = options.threads;
  tasks.push_back([=] { return check_asymptotics(d_lo, d_hi, precision, threads); });
}

void clr_tasks(const SuiteOptions& options, std::vector<Task>& tasks) {
  tasks.push_back([] {
    CheckRecord r = check_clr_excess(6, make_rational(111, 10));
    r.note =
        "advisory: the figures 121 (count) and 81.81 (semiclassical value) quoted for this coupling differ from the "
        "exact 112 and 81.18; R > 1 either way";
    return r;
  });
  if (options.eta_grid) {
    const auto grid = options.eta_grid->points();
    for (int d : dimensions(options, 3, 60))
      for (const auto& eta : grid) tasks.push_back([d, eta] { return check_clr_excess(d, eta); });
    return;
  }
  for (int d : dimensions(options, 3, 60)) {
    tasks.push_back([d] { return check_q_star(d); });
    if (d >= 4) tasks.push_back([d] { return check_maximizer_bounds(d); });
    tasks.push_back([d] { return check_a_star(d); });
    if (d >= 5 && d % 2 == 1) tasks.push_back([d] { return check_a_zero_window(d); });
  }
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& suite, const SuiteOptions& options) {
  if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  std::vector<Task> tasks;
  const bool all = suite == "all";
  if (all || suite == "lt-gamma1") lt_gamma1_tasks(options, tasks);
  if (all || suite == "d3-envelopes") d3_envelope_tasks(options, tasks);
  if (all || suite == "coefficients") coefficient_tasks(options, tasks);
  if (all || suite == "identities") identity_tasks(options, tasks);
  if (all || suite == "asymptotics") asymptotic_tasks(options, tasks);
  if (all || suite == "clr") clr_tasks(options, tasks);
  return ordered_parallel_map(tasks.size(), options.threads, [&](std::size_t i) { return tasks[i](); });
}

}  // namespace coulomb_sharp::verification
