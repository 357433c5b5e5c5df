#pragma once

// Negative spectrum of the shifted Coulomb Hamiltonian -Delta - kappa/|x| + Lambda
// in d dimensions. Everything is expressed in units Lambda = 1, so the only
// parameter besides d is the coupling ratio eta = kappa / sqrt(Lambda).

#include "coulomb_sharp/exact/rational.hpp"
#include "coulomb_sharp/exact/real.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace coulomb_sharp::spectrum {

class SpectrumParams {
 public:
  /// Throws std::invalid_argument unless d >= 3 and eta > 0.
  SpectrumParams(int d, BigRational eta);

  int d() const { return d_; }
  const BigRational& eta() const { return eta_; }
  /// tau = (eta + 1 - d) / 2
  BigRational tau() const;
  /// Highest occupied level ceil(tau) - 1, or nullopt when eta <= d - 1 (no
  /// negative spectrum; a level at exactly zero energy is not counted).
  std::optional<long> top_level() const;

 private:
  int d_;
  BigRational eta_;
};

struct LevelData {
  long j = 0;
  BigInt multiplicity;
  /// lambda_j / Lambda = 1 - eta^2 / (2j + d - 1)^2, negative for occupied levels
  BigRational energy;
};

/// mu_j = (d-2+j)! (d-1+2j) / ((d-1)! j!)
BigInt multiplicity(int d, long j);
/// mu_j as binomial(d-1+j, d-1) + binomial(d-2+j, d-1); independent route.
BigInt multiplicity_binomial(int d, long j);

/// N_k = (d+2k)(d+k-1)! / (d! k!), the total multiplicity of levels 0..k.
BigInt cumulative_count(int d, long k);

std::vector<LevelData> levels(const SpectrumParams& params);

/// Tr(...)_-^0 = N_ell, zero for an empty spectrum.
BigInt counting_function(const SpectrumParams& params);

using SpectralValue = std::variant<BigRational, HighPrecisionReal>;

struct RieszQuery {
  SpectrumParams params;
  BigRational gamma;
  int precision = 30;
};

/// sum_j mu_j (eta^2/(2j+d-1)^2 - 1)^gamma. Exact for integer gamma >= 0
/// (gamma = 0 gives the eigenvalue count); high-precision otherwise.
SpectralValue riesz_mean(const RieszQuery& query);

/// Exact Riesz mean for a non-negative integer gamma.
BigRational riesz_mean_exact(const SpectrumParams& params, long gamma);

/// d = 3, gamma = 1: (l+1) eta^2/4 - (l+1)(l+2)(2l+3)/6 for eta > 2, else 0.
BigRational riesz_mean_d3_closed_form(const BigRational& eta);

}  // namespace coulomb_sharp::spectrum
