#include "coulomb_sharp/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace coulomb_sharp::phase_space {

namespace {

/// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2), cached across calls.
const BigRational& bernoulli(size_t n) {
  static std::mutex mutex;
  static std::vector<BigRational> table{BigRational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    const size_t m = table.size();
    BigRational acc = 0;
    for (size_t k = 0; k < m; ++k)
      acc += BigRational(binomial(static_cast<long>(m + 1), static_cast<long>(k))) * table[k];
    table.push_back(-acc / static_cast<long>(m + 1));
  }
  return table[n];
}

Real pi_power_half(int m, mpfr_prec_t bits) {
  // pi^(m/2)
  Real root_pi = sqrt(Real::pi(bits));
  Real r(1L, bits);
  for (int i = 0; i < std::abs(m); ++i) r = r * root_pi;
  return m >= 0 ? r : Real(1L, bits) / r;
}

bool twice_is_integer(const BigRational& x) { return BigRational(2 * x).get_den() == 1; }

}  // namespace

PiScaledRational operator/(const PiScaledRational& a, const PiScaledRational& b) {
  if (b.ratio == 0) throw std::domain_error("division by zero");
  return {a.ratio / b.ratio, a.pi_half_power - b.pi_half_power};
}

HighPrecisionReal PiScaledRational::to_real(int digits) const {
  return evaluate_validated(digits, [this](mpfr_prec_t bits) {
    return Real(ratio, bits) * pi_power_half(pi_half_power, bits);
  });
}

int compare(const PiScaledRational& a, const PiScaledRational& b, int digits) {
  if (a.pi_half_power == b.pi_half_power || a.ratio == 0 || b.ratio == 0) {
    if (a.pi_half_power == b.pi_half_power) return cmp(a.ratio, b.ratio);
    // one side is zero: the sign of the other decides
    return a.ratio == 0 ? -sgn(b.ratio) : sgn(a.ratio);
  }
  for (int attempt = 0, p = digits; attempt < 4; ++attempt, p *= 2) {
    switch (strict_order(a.to_real(p), b.to_real(p))) {
      case StrictOrder::less: return -1;
      case StrictOrder::greater: return 1;
      case StrictOrder::inconclusive: break;
    }
  }
  // pi is transcendental, so values with different pi powers and nonzero ratios never coincide.
  throw std::runtime_error("comparison of pi-scaled values inconclusive");
}

PiScaledRational gamma_half_integer(long twice_x) {
  if (twice_x <= 0) throw std::domain_error("Gamma evaluated at a non-positive argument");
  if (twice_x % 2 == 0) return {BigRational(factorial(static_cast<unsigned long>(twice_x / 2 - 1))), 0};
  const long k = (twice_x - 1) / 2;  // x = k + 1/2
  BigInt four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return {make_rational(factorial(static_cast<unsigned long>(2 * k)), four_k * factorial(static_cast<unsigned long>(k))), 1};
}

Real log_gamma_stirling(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("log Gamma requires a positive argument");
  const mpfr_prec_t bits = x.precision();
  // The smallest Stirling term is about exp(-2 pi z); shift z so that this is
  // far below 2^-bits.
  const double z_min = 0.12 * static_cast<double>(bits) + 10.0;
  Real z = x;
  Real shift_product(1L, bits);
  while (z.to_double() < z_min) {
    shift_product = shift_product * z;
    z = z + Real(1L, bits);
  }

  Real half(make_rational(1, 2), bits);
  Real result = (z - half) * log(z) - z + half * log(Real(2L, bits) * Real::pi(bits));
  Real z_sq = z * z;
  Real z_pow = z;  // z^(2k-1)
  Real threshold = abs(result) * exp(Real(-static_cast<long>(bits) - 4, bits) * log(Real(2L, bits)));
  Real previous_mag(0L, bits);
  for (size_t k = 1; k < 10000; ++k) {
    const BigRational coeff = bernoulli(2 * k) / static_cast<long>(2 * k * (2 * k - 1));
    Real term = Real(coeff, bits) / z_pow;
    Real mag = abs(term);
    if (k > 1 && mag > previous_mag) break;  // asymptotic series began to diverge
    result += term;
    if (mag < threshold) break;
    previous_mag = mag;
    z_pow = z_pow * z_sq;
  }
  return result - log(shift_product);
}

PhaseSpaceValue gamma_at(const BigRational& x, int precision) {
  if (x <= 0) throw std::domain_error("Gamma evaluated at a non-positive argument (poles are not needed)");
  if (twice_is_integer(x)) {
    BigInt twice = BigRational(2 * x).get_num();
    if (!twice.fits_slong_p()) throw std::overflow_error("Gamma argument too large");
    return gamma_half_integer(twice.get_si());
  }
  return evaluate_validated(precision, [&](mpfr_prec_t bits) { return exp(log_gamma_stirling(Real(x, bits))); });
}

BigRational clr_rhs(int d, const BigRational& eta) {
  if (d < 3) throw std::invalid_argument("dimension must be at least 3");
  if (eta <= 0) throw std::invalid_argument("coupling ratio eta must be positive");
  return pow(eta, d) / BigRational(BigInt(BigInt(1) << (d - 1)) * factorial(static_cast<unsigned long>(d)));
}

PhaseSpaceValue lt_rhs(int d, const BigRational& eta, const BigRational& gamma, int precision) {
  if (d < 3) throw std::invalid_argument("dimension must be at least 3");
  if (eta <= 0) throw std::invalid_argument("coupling ratio eta must be positive");
  if (gamma < 0) throw std::invalid_argument("Riesz exponent must be non-negative");
  if (2 * gamma >= d) throw std::domain_error("phase-space integral diverges (requires gamma < d/2)");

  const BigRational prefactor = pow(eta, d) / BigRational(BigInt(BigInt(1) << (d - 1)));
  const PiScaledRational denominator = gamma_half_integer(2L * (d + 1)) * gamma_half_integer(d);
  if (twice_is_integer(gamma)) {
    const long g2 = BigRational(2 * gamma).get_num().get_si();
    PiScaledRational value = PiScaledRational{prefactor, 0} * gamma_half_integer(g2 + 2) *
                             gamma_half_integer(d - g2) / denominator;
    return value;
  }
  return evaluate_validated(precision, [&](mpfr_prec_t bits) {
    Real log_num = log_gamma_stirling(Real(BigRational(gamma + 1), bits)) +
                   log_gamma_stirling(Real(BigRational(make_rational(d, 2) - gamma), bits));
    Real den = Real(denominator.ratio, bits) * pi_power_half(denominator.pi_half_power, bits);
    return Real(prefactor, bits) * exp(log_num) / den;
  });
}

HighPrecisionReal semiclassical_constant(const BigRational& gamma, int d, int precision) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (gamma < 0) throw std::invalid_argument("Riesz exponent must be non-negative");
  return evaluate_validated(precision, [&](mpfr_prec_t bits) {
    Real lg = log_gamma_stirling(Real(BigRational(gamma + 1), bits)) -
              log_gamma_stirling(Real(BigRational(gamma + 1 + make_rational(d, 2)), bits));
    Real four_pi = Real(4L, bits) * Real::pi(bits);
    return exp(lg - Real(make_rational(d, 2), bits) * log(four_pi));
  });
}

HighPrecisionReal to_real(const PhaseSpaceValue& value, int digits) {
  if (const auto* exact = std::get_if<PiScaledRational>(&value)) return exact->to_real(digits);
  const auto& real = std::get<HighPrecisionReal>(value);
  return HighPrecisionReal{real.value, std::min(real.digits, digits)};
}

}  // namespace coulomb_sharp::phase_space
