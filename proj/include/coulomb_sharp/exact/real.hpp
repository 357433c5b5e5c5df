#pragma once

#include "coulomb_sharp/exact/rational.hpp"

#include <mpfr.h>

#include <functional>
#include <string>

namespace coulomb_sharp {

/// Binary precision needed to carry the given number of decimal digits.
mpfr_prec_t bits_for_digits(int digits);

/// Owning wrapper around an mpfr_t. Results of binary operations carry the
/// larger of the two operand precisions; all rounding is to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(const BigRational& value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  static Real pi(mpfr_prec_t bits);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }

  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow(const Real& base, const Real& exponent);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Exponent e with 2^(e-1) <= |x| < 2^e; undefined for zero.
  long binary_exponent() const { return mpfr_get_exp(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  friend int compare(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }

  /// Scientific rendering with the given significant digits, e.g. "1.25e+0".
  std::string to_string(int digits) const;
  /// Plain decimal rendering (no exponent for moderate magnitudes).
  std::string to_decimal(int digits) const;

 private:
  mpfr_t value_;
};

/// A real number together with the number of significant decimal digits it is
/// certified to: relative error <= 10^(1 - digits) against the exact value.
struct HighPrecisionReal {
  Real value;
  int digits = 0;

  std::string to_string() const { return value.to_decimal(digits); }
};

/// Evaluates `compute(bits)` at digits+10 guard digits and again at twice that
/// working precision; the two results must agree to relative 10^-digits. On
/// disagreement the working precision is doubled and the test repeated (at most
/// four times) before std::runtime_error is thrown.
HighPrecisionReal evaluate_validated(int digits, const std::function<Real(mpfr_prec_t)>& compute);

enum class StrictOrder { less, greater, inconclusive };

/// Decides a < b or a > b only when |a - b| exceeds 10 units in the last kept
/// digit of the larger magnitude; otherwise reports inconclusive.
StrictOrder strict_order(const HighPrecisionReal& a, const HighPrecisionReal& b);

}  // namespace coulomb_sharp
