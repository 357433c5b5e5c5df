#include "coulomb_sharp/ratfun_zoo.hpp"

#include "coulomb_sharp/phase_space.hpp"
#include "coulomb_sharp/spectrum.hpp"

#include <stdexcept>

namespace coulomb_sharp::zoo {

namespace {

void require_dimension(int d, int minimum) {
  if (d < minimum) throw std::invalid_argument("dimension must be at least " + std::to_string(minimum));
}

void require_odd(int d) {
  if (d % 2 == 0) throw std::invalid_argument("odd dimension required, got d = " + std::to_string(d));
}

Polynomial power(const Polynomial& p, int n) {
  Polynomial out = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) out = out * p;
  return out;
}

BigRational half(long n) { return make_rational(n, 2); }

BigRational sum_terms(const std::vector<SimpleFraction>& terms, const BigRational& x) {
  BigRational sum = 0;
  for (const auto& term : terms) {
    BigRational den = x + term.shift;
    if (den == 0) throw std::domain_error("evaluation at a pole: " + to_string(x));
    sum += term.coefficient / den;
  }
  return sum;
}

}  // namespace

BigRational PochhammerSpec::operator()(const BigRational& t) const { return pochhammer(m, t); }
Polynomial PochhammerSpec::polynomial() const { return pochhammer_polynomial(m); }

BigRational pochhammer(int m, const BigRational& t) {
  if (m < 0) throw std::invalid_argument("Pochhammer index must be non-negative");
  BigRational out = 1;
  for (int k = 1; k <= m; ++k) out *= t + k;
  return out;
}

Polynomial pochhammer_polynomial(int m) {
  if (m < 0) throw std::invalid_argument("Pochhammer index must be non-negative");
  std::vector<BigRational> shifts;
  for (int k = 1; k <= m; ++k) shifts.emplace_back(k);
  return shifts.empty() ? Polynomial::constant(1) : expand_linear_factors(shifts);
}

BigRational q_eval(int d, const BigRational& t) {
  require_dimension(d, 3);
  // With t = n/m: Q_d(t) = 2^(d-1) (2n+dm) prod_j (n+jm) / (2n+(d-1)m)^d,
  // assembled over the integers so only one reduction is needed.
  const BigInt& n = t.get_num();
  const BigInt& m = t.get_den();
  const BigInt centre = 2 * n + (d - 1) * m;
  if (centre == 0) throw std::domain_error("Q_d has a pole at t = -(d-1)/2");
  BigInt num = BigInt(2 * n + d * m) << (d - 1);
  for (int j = 1; j <= d - 1; ++j) num *= n + j * m;
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), centre.get_mpz_t(), static_cast<unsigned long>(d));
  return make_rational(num, den);
}

RationalFunction q_as_ratfun(int d) {
  require_dimension(d, 3);
  Polynomial num = Polynomial::linear(half(d)) * pochhammer_polynomial(d - 1);
  return RationalFunction::reduce(num, power(Polynomial::linear(half(d - 1)), d));
}

BigRational r_eval(int d, const BigRational& eta) {
  const spectrum::SpectrumParams params(d, eta);
  return BigRational(spectrum::counting_function(params)) / phase_space::clr_rhs(d, eta);
}

std::vector<SimpleFraction> f_terms(int d) {
  require_dimension(d, 3);
  std::vector<SimpleFraction> terms{{1, half(d)}, {BigRational(-d), half(d - 1)}};
  for (int k = 1; k <= d - 1; ++k) terms.push_back({1, k});
  return terms;
}

RationalFunction f_as_ratfun(int d) { return sum_simple_fractions(f_terms(d)); }

BigRational a_eval_squared(int d, const BigRational& t) {
  require_dimension(d, 3);
  // With t = n/m: A_d(t)^2 = 4^(d-1) prod_k (n+km)^2 / ((2n+dm)^(d-2) (2n+(d-2)m)^d).
  const BigInt& n = t.get_num();
  const BigInt& m = t.get_den();
  const BigInt upper = 2 * n + d * m;
  const BigInt lower = 2 * n + (d - 2) * m;
  if (upper == 0 || lower == 0) throw std::domain_error("A_d has a pole at " + to_string(t));
  BigInt product = 1;
  for (int k = 1; k <= d - 1; ++k) product *= n + k * m;
  BigInt num = BigInt(product * product) << (2 * (d - 1));
  BigInt upper_pow, lower_pow;
  mpz_pow_ui(upper_pow.get_mpz_t(), upper.get_mpz_t(), static_cast<unsigned long>(d - 2));
  mpz_pow_ui(lower_pow.get_mpz_t(), lower.get_mpz_t(), static_cast<unsigned long>(d));
  return make_rational(num, upper_pow * lower_pow);
}

BigRational a_eval_exact(int d, const BigRational& t) {
  require_dimension(d, 3);
  if (d % 2 != 0) throw std::invalid_argument("A_d is rational only for even d");
  const BigRational upper = t + half(d);
  const BigRational lower = t + half(d - 2);
  if (upper == 0 || lower == 0) throw std::domain_error("A_d has a pole at " + to_string(t));
  return pochhammer(d - 1, t) * pow(upper, 1 - d / 2) / pow(lower, d / 2);
}

HighPrecisionReal a_eval(int d, const BigRational& t, int precision) {
  if (t < 0) throw std::domain_error("A_d is evaluated as a positive root only for t >= 0");
  if (d % 2 == 0) {
    const BigRational exact = a_eval_exact(d, t);
    return evaluate_validated(precision, [&](mpfr_prec_t bits) { return Real(exact, bits); });
  }
  const BigRational squared = a_eval_squared(d, t);
  return evaluate_validated(precision, [&](mpfr_prec_t bits) { return sqrt(Real(squared, bits)); });
}

RationalFunction a_squared_as_ratfun(int d) {
  require_dimension(d, 3);
  Polynomial num = power(pochhammer_polynomial(d - 1), 2);
  Polynomial den = power(Polynomial::linear(half(d)), d - 2) * power(Polynomial::linear(half(d - 2)), d);
  return RationalFunction::reduce(num, den);
}

std::vector<SimpleFraction> g_terms(int d) {
  require_dimension(d, 3);
  std::vector<SimpleFraction> terms{{BigRational(1 - half(d)), half(d)}, {BigRational(-half(d)), half(d - 2)}};
  for (int k = 1; k <= d - 1; ++k) terms.push_back({1, k});
  return terms;
}

RationalFunction g_as_ratfun(int d) { return sum_simple_fractions(g_terms(d)); }

BigRational g_eval(int d, const BigRational& t) { return sum_terms(g_terms(d), t); }

BigRational g_shifted_eval(int d, const BigRational& s) {
  require_dimension(d, 3);
  require_odd(d);
  std::vector<SimpleFraction> terms{{BigRational(1 - half(d)), half(1)}, {BigRational(-half(d)), half(-1)}};
  for (int j = -(d - 3) / 2; j <= (d - 1) / 2; ++j) terms.push_back({1, j});
  return sum_terms(terms, s);
}

BigRational sandwich_weight(int d) {
  if (d <= 3) throw std::invalid_argument("a_d requires d > 3");
  return half(1) + make_rational(1, 2L * (d - 3));
}

std::vector<SimpleFraction> h_a_terms(int d, const BigRational& a) {
  require_dimension(d, 5);
  require_odd(d);
  if (a < 0 || a > 1) throw std::invalid_argument("h_a requires 0 <= a <= 1");
  std::vector<SimpleFraction> terms{{BigRational(1 - half(d) + a), half(1)},
                                    {BigRational(1 - a - half(d)), half(-1)}};
  for (int k = -(d - 3) / 2; k <= (d - 1) / 2; ++k)
    if (k != 0) terms.push_back({1, k});
  return terms;
}

BigRational h_a_eval(int d, const BigRational& a, const BigRational& s) { return sum_terms(h_a_terms(d, a), s); }

RationalFunction h_a_as_ratfun(int d, const BigRational& a) { return sum_simple_fractions(h_a_terms(d, a)); }

SandwichCertificate g_shifted_sandwich_check(int d, const BigRational& s) {
  require_dimension(d, 5);
  require_odd(d);
  if (s <= half(d - 3))
    throw std::domain_error("sandwich requires s > (d-3)/2, got s = " + to_string(s));
  SandwichCertificate cert{d, s, h_a_eval(d, sandwich_weight(d), s), g_shifted_eval(d, s), h_a_eval(d, half(1), s)};
  cert.holds = cert.lower < cert.middle && cert.middle < cert.upper;
  return cert;
}

namespace {

struct GParts {
  BigRational pochhammer;
  BigRational alpha;
  BigRational base;
};

GParts big_g_parts(int d, const BigRational& t) {
  require_dimension(d, 4);
  if (t < 0) throw std::domain_error("G is defined for t >= 0");
  BigRational alpha = 1 + BigRational(d - 3) / (d - 1 + 2 * t) + 1 / (2 * (d - 2 + t));
  return {pochhammer(d - 2, t), alpha, (half(d) + t) * (d + t - 1)};
}

}  // namespace

BigRational big_g_squared(int d, const BigRational& t) {
  const GParts g = big_g_parts(d, t);
  return g.pochhammer * g.pochhammer * pow(g.alpha, d) * pow(g.base, 2 - d);
}

BigRational big_g_exact(int d, const BigRational& t) {
  if (d % 2 != 0) throw std::invalid_argument("G is rational only for even d");
  const GParts g = big_g_parts(d, t);
  return g.pochhammer * pow(g.alpha, d / 2) * pow(g.base, 1 - d / 2);
}

HighPrecisionReal big_g_eval(int d, const BigRational& t, int precision) {
  if (d % 2 == 0) {
    const BigRational exact = big_g_exact(d, t);
    return evaluate_validated(precision, [&](mpfr_prec_t bits) { return Real(exact, bits); });
  }
  const BigRational squared = big_g_squared(d, t);
  return evaluate_validated(precision, [&](mpfr_prec_t bits) { return sqrt(Real(squared, bits)); });
}

Polynomial g_monotonicity_numerator(int d) {
  require_dimension(d, 4);
  const std::vector<BigRational> shifts{half(-(d - 3)), 0, half(1), half(d - 2), half(d - 1)};
  const std::vector<BigRational> coefficients{1, -half(d), half(d - 4), half(d), -half(d - 2)};
  Polynomial numerator;
  for (size_t i = 0; i < shifts.size(); ++i) {
    Polynomial term = Polynomial::constant(coefficients[i]);
    for (size_t j = 0; j < shifts.size(); ++j)
      if (j != i) term = term * Polynomial::linear(shifts[j]);
    numerator = numerator + term;
  }
  return numerator;
}

void NamedFunction::validate() const {
  switch (kind) {
    case FunctionKind::h_a:
      require_dimension(d, 5);
      require_odd(d);
      if (a < 0 || a > 1) throw std::invalid_argument("h_a requires 0 <= a <= 1");
      return;
    case FunctionKind::g_shifted:
      require_dimension(d, 3);
      require_odd(d);
      return;
    case FunctionKind::G:
    case FunctionKind::G_shifted:
      require_dimension(d, 4);
      return;
    default:
      require_dimension(d, 3);
  }
}

FunctionValue evaluate(const NamedFunction& fn, const BigRational& x, int precision) {
  fn.validate();
  const int d = fn.d;
  switch (fn.kind) {
    case FunctionKind::Q: return q_eval(d, x);
    case FunctionKind::R: return r_eval(d, x);
    case FunctionKind::f: return sum_terms(f_terms(d), x);
    case FunctionKind::A:
      if (d % 2 == 0) return a_eval_exact(d, x);
      return a_eval(d, x, precision);
    case FunctionKind::A_squared: return a_eval_squared(d, x);
    case FunctionKind::g: return g_eval(d, x);
    case FunctionKind::g_shifted: return g_shifted_eval(d, x);
    case FunctionKind::h_a: return h_a_eval(d, fn.a, x);
    case FunctionKind::G:
      if (d % 2 == 0) return big_g_exact(d, x);
      return big_g_eval(d, x, precision);
    case FunctionKind::G_shifted: {
      const BigRational t = x - half(d - 1);
      if (d % 2 == 0) return big_g_exact(d, t);
      return big_g_eval(d, t, precision);
    }
  }
  throw std::logic_error("unknown function kind");
}

bool logderiv_check(LogDerivKind kind, int d) {
  if (kind == LogDerivKind::Q) return q_as_ratfun(d).log_derivative() == f_as_ratfun(d);
  return a_squared_as_ratfun(d).log_derivative() == BigRational(2) * g_as_ratfun(d);
}

}  // namespace coulomb_sharp::zoo
