#pragma once

// The explicit functions whose extrema and zeros govern the sharp constants:
// Q_d, R_d, f_d, A_d, g_d, its shifted form, the comparison family h_a and the
// monotone envelope G, together with shifted Pochhammer symbols.

#include "coulomb_sharp/exact/polynomial.hpp"
#include "coulomb_sharp/exact/rational_function.hpp"
#include "coulomb_sharp/exact/real.hpp"

#include <variant>
#include <vector>

namespace coulomb_sharp::zoo {

/// p_m(t) = (t+1)(t+2)...(t+m), p_0 = 1.
struct PochhammerSpec {
  int m = 0;

  BigRational operator()(const BigRational& t) const;
  Polynomial polynomial() const;
};

BigRational pochhammer(int m, const BigRational& t);
Polynomial pochhammer_polynomial(int m);

/// Q_d(t) = (t+(d-1)/2)^(-d) (t+d/2) prod_{j=1}^{d-1} (t+j).
/// Throws std::domain_error at the pole t = -(d-1)/2.
BigRational q_eval(int d, const BigRational& t);
RationalFunction q_as_ratfun(int d);

/// R_d(eta) = N / clr_rhs, zero for an empty spectrum.
BigRational r_eval(int d, const BigRational& eta);

/// f_d = Q_d'/Q_d as partial fractions: 1/(t+d/2) - d/(t+(d-1)/2) + sum_k 1/(t+k).
std::vector<SimpleFraction> f_terms(int d);
RationalFunction f_as_ratfun(int d);

/// A_d(t)^2 = (t+d/2)^(2-d) (t+d/2-1)^(-d) prod_{k=1}^{d-1} (t+k)^2.
/// Throws std::domain_error at t = -d/2 and t = -d/2+1.
BigRational a_eval_squared(int d, const BigRational& t);
/// Exact A_d(t) for even d.
BigRational a_eval_exact(int d, const BigRational& t);
/// Positive root of A_d(t)^2 for t >= 0.
HighPrecisionReal a_eval(int d, const BigRational& t, int precision);
RationalFunction a_squared_as_ratfun(int d);

/// g_d = A_d'/A_d: (1-d/2)/(t+d/2) - (d/2)/(t+d/2-1) + sum_k 1/(t+k).
std::vector<SimpleFraction> g_terms(int d);
RationalFunction g_as_ratfun(int d);
BigRational g_eval(int d, const BigRational& t);

/// g_d(s - (d-1)/2) for odd d, summed in the shifted variable:
/// (1-d/2)/(s+1/2) - (d/2)/(s-1/2) + sum_{j=-(d-3)/2}^{(d-1)/2} 1/(s+j).
BigRational g_shifted_eval(int d, const BigRational& s);

/// a_d = 1/2 + 1/(2(d-3)).
BigRational sandwich_weight(int d);

/// h_a(s) for odd d >= 5 and 0 <= a <= 1: g~_d with the pole 1/s replaced by
/// (1-a)/(s-1/2) + a/(s+1/2).
std::vector<SimpleFraction> h_a_terms(int d, const BigRational& a);
BigRational h_a_eval(int d, const BigRational& a, const BigRational& s);
RationalFunction h_a_as_ratfun(int d, const BigRational& a);

struct SandwichCertificate {
  int d = 0;
  BigRational s;
  BigRational lower;   // h_{a_d}(s)
  BigRational middle;  // g~_d(s)
  BigRational upper;   // h_{1/2}(s)
  bool holds = false;  // lower < middle < upper
};

/// Evaluates h_{a_d}(s) < g~_d(s) < h_{1/2}(s). Requires odd d >= 5 and
/// s > (d-3)/2 (std::domain_error otherwise).
SandwichCertificate g_shifted_sandwich_check(int d, const BigRational& s);

/// G(t)^2 = p_{d-2}(t)^2 alpha(t)^d ((d/2+t)(d+t-1))^(2-d) with
/// alpha(t) = 1 + (d-3)/(d-1+2t) + 1/(2(d-2+t)). Requires d >= 4, t >= 0.
BigRational big_g_squared(int d, const BigRational& t);
/// Exact G(t) for even d.
BigRational big_g_exact(int d, const BigRational& t);
HighPrecisionReal big_g_eval(int d, const BigRational& t, int precision);

/// Numerator of the lower bound for (log g)' written over the product of its
/// five linear factors (t-(d-3)/2) t (t+1/2) (t+(d-2)/2) (t+(d-1)/2).
Polynomial g_monotonicity_numerator(int d);

enum class FunctionKind { Q, R, f, A, A_squared, g, g_shifted, h_a, G, G_shifted };

struct NamedFunction {
  FunctionKind kind;
  int d = 3;
  BigRational a = 0;  // h_a only

  /// Throws std::invalid_argument if d or a violate the kind's requirements.
  void validate() const;
};

using FunctionValue = std::variant<BigRational, HighPrecisionReal>;

/// Evaluates any named function. A and G (and G_shifted) at odd d come back as
/// high-precision reals, everything else exactly.
FunctionValue evaluate(const NamedFunction& fn, const BigRational& x, int precision = 30);

enum class LogDerivKind { Q, A_squared };

/// Symbolic identity Q'/Q == f_d, or (A^2)'/A^2 == 2 g_d.
bool logderiv_check(LogDerivKind kind, int d);

}  // namespace coulomb_sharp::zoo
