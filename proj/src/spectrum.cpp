#include "coulomb_sharp/spectrum.hpp"

#include <stdexcept>

namespace coulomb_sharp::spectrum {

SpectrumParams::SpectrumParams(int d, BigRational eta) : d_(d), eta_(std::move(eta)) {
  if (d_ < 3) throw std::invalid_argument("dimension must be at least 3");
  if (eta_ <= 0) throw std::invalid_argument("coupling ratio eta must be positive");
}

BigRational SpectrumParams::tau() const { return (eta_ + 1 - d_) / 2; }

std::optional<long> SpectrumParams::top_level() const {
  if (eta_ <= d_ - 1) return std::nullopt;
  BigInt ell = ceil_int(tau()) - 1;
  if (!ell.fits_slong_p()) throw std::overflow_error("level index out of range");
  return ell.get_si();
}

BigInt multiplicity(int d, long j) {
  if (d < 3 || j < 0) throw std::invalid_argument("multiplicity requires d >= 3, j >= 0");
  BigInt num = factorial(static_cast<unsigned long>(d - 2 + j)) * (d - 1 + 2 * j);
  BigInt den = factorial(static_cast<unsigned long>(d - 1)) * factorial(static_cast<unsigned long>(j));
  return num / den;
}

BigInt multiplicity_binomial(int d, long j) {
  if (d < 3 || j < 0) throw std::invalid_argument("multiplicity requires d >= 3, j >= 0");
  return binomial(d - 1 + j, d - 1) + binomial(d - 2 + j, d - 1);
}

BigInt cumulative_count(int d, long k) {
  if (d < 3 || k < 0) throw std::invalid_argument("cumulative count requires d >= 3, k >= 0");
  // (d+k-1)! / (d! k!) = binomial(d+k-1, k) / d
  BigInt n = binomial(d + k - 1, k) * (d + 2 * k);
  return n / d;
}

std::vector<LevelData> levels(const SpectrumParams& params) {
  std::vector<LevelData> out;
  auto top = params.top_level();
  if (!top) return out;
  const BigRational eta_sq = params.eta() * params.eta();
  out.reserve(static_cast<size_t>(*top) + 1);
  for (long j = 0; j <= *top; ++j) {
    const long n = 2 * j + params.d() - 1;
    out.push_back(LevelData{j, multiplicity(params.d(), j), BigRational(1 - eta_sq / (n * n))});
  }
  return out;
}

BigInt counting_function(const SpectrumParams& params) {
  auto top = params.top_level();
  return top ? cumulative_count(params.d(), *top) : BigInt(0);
}

BigRational riesz_mean_exact(const SpectrumParams& params, long gamma) {
  if (gamma < 0) throw std::invalid_argument("Riesz exponent must be non-negative");
  if (gamma == 0) return BigRational(counting_function(params));
  BigRational sum = 0;
  for (const auto& level : levels(params)) sum += BigRational(level.multiplicity) * pow(-level.energy, gamma);
  return sum;
}

SpectralValue riesz_mean(const RieszQuery& query) {
  if (query.gamma < 0) throw std::invalid_argument("Riesz exponent must be non-negative");
  if (query.gamma.get_den() == 1 && query.gamma.get_num().fits_slong_p())
    return riesz_mean_exact(query.params, query.gamma.get_num().get_si());

  auto lv = levels(query.params);
  return evaluate_validated(query.precision, [&](mpfr_prec_t bits) {
    Real sum(0L, bits);
    Real gamma(query.gamma, bits);
    for (const auto& level : lv) {
      Real base(BigRational(-level.energy), bits);
      Real mu(BigRational(level.multiplicity), bits);
      sum += mu * exp(gamma * log(base));
    }
    return sum;
  });
}

BigRational riesz_mean_d3_closed_form(const BigRational& eta) {
  if (eta <= 0) throw std::invalid_argument("coupling ratio eta must be positive");
  if (eta <= 2) return 0;
  BigRational l(ceil_int(BigRational(eta / 2)) - 2);
  return (l + 1) * eta * eta / 4 - (l + 1) * (l + 2) * (2 * l + 3) / 6;
}

}  // namespace coulomb_sharp::spectrum
