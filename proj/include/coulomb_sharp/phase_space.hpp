#pragma once

// Semiclassical constants and the phase-space integrals that form the
// right-hand sides of the Lieb-Thirring and CLR bounds for the shifted Coulomb
// potential (units Lambda = 1).

#include "coulomb_sharp/exact/rational.hpp"
#include "coulomb_sharp/exact/real.hpp"

#include <variant>

namespace coulomb_sharp::phase_space {

/// ratio * pi^(pi_half_power / 2)
struct PiScaledRational {
  BigRational ratio;
  int pi_half_power = 0;

  bool is_rational() const { return pi_half_power == 0 || ratio == 0; }
  HighPrecisionReal to_real(int digits) const;

  friend PiScaledRational operator*(const PiScaledRational& a, const PiScaledRational& b) {
    return {a.ratio * b.ratio, a.pi_half_power + b.pi_half_power};
  }
  friend PiScaledRational operator/(const PiScaledRational& a, const PiScaledRational& b);
  friend bool operator==(const PiScaledRational& a, const PiScaledRational& b) {
    return a.ratio == b.ratio && (a.ratio == 0 || a.pi_half_power == b.pi_half_power);
  }
};

/// Exact comparison when the pi powers agree, otherwise via high precision.
/// Returns -1, 0 or +1; throws std::runtime_error if undecidable at `digits`.
int compare(const PiScaledRational& a, const PiScaledRational& b, int digits = 40);

using PhaseSpaceValue = std::variant<PiScaledRational, HighPrecisionReal>;

/// Gamma(x) for x > 0. Exact when 2x is an integer; otherwise evaluated with a
/// shifted Stirling series and validated to `precision` digits.
PhaseSpaceValue gamma_at(const BigRational& x, int precision);

/// log Gamma(x) for real x > 0 at the given binary precision via the Stirling
/// series; the caller is responsible for validation.
Real log_gamma_stirling(const Real& x);

/// Gamma(n/2) for n >= 1 as an exact multiple of a power of sqrt(pi).
PiScaledRational gamma_half_integer(long twice_x);

/// eta^d / 2^(d-1) * Gamma(gamma+1) Gamma(d/2-gamma) / (Gamma(d+1) Gamma(d/2)),
/// valid for 0 <= gamma < d/2. Exact (PiScaledRational) when 2 gamma is an
/// integer. Throws std::domain_error("phase-space integral diverges") otherwise.
PhaseSpaceValue lt_rhs(int d, const BigRational& eta, const BigRational& gamma, int precision);

/// eta^d / (2^(d-1) d!), the gamma = 0 case.
BigRational clr_rhs(int d, const BigRational& eta);

/// Gamma(gamma+1) / ((4 pi)^(d/2) Gamma(gamma+1+d/2)).
HighPrecisionReal semiclassical_constant(const BigRational& gamma, int d, int precision);

/// Converts a value to high precision at the requested digits.
HighPrecisionReal to_real(const PhaseSpaceValue& value, int digits);

}  // namespace coulomb_sharp::phase_space
