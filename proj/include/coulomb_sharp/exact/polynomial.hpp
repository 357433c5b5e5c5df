#pragma once

#include "coulomb_sharp/exact/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coulomb_sharp {

/// Dense univariate polynomial with exact rational coefficients, lowest degree
/// first. The leading stored coefficient is never zero; the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  static Polynomial monomial(const BigRational& c, int degree);
  /// t + shift
  static Polynomial linear(const BigRational& shift);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^power; zero beyond the degree.
  BigRational coefficient(int power) const;
  const BigRational& leading() const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  BigRational operator()(const BigRational& t) const;
  int sign_at(const BigRational& t) const { return sign((*this)(t)); }
  int sign_at_plus_infinity() const;
  int sign_at_minus_infinity() const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Positive rescaling to integer coefficients with content 1; preserves signs.
  Polynomial primitive() const;
  /// t -> t + c
  Polynomial shifted(const BigRational& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigRational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char variable = 't') const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Quotient and remainder of Euclidean division; throws std::domain_error when
/// the divisor is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Expands prod_i (t + shifts[i]); the empty product is 1.
Polynomial expand_linear_factors(std::span<const BigRational> shifts);

}  // namespace coulomb_sharp
