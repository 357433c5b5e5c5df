#include "coulomb_sharp/exact/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coulomb_sharp {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(const BigRational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

namespace {

template <class Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r(std::max(a.precision(), b.precision()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <class Op>
Real unary(const Real& a, Op op) {
  Real r(a.precision());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return binary(a, b, mpfr_div);
}
Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) {
  if (x.sign() <= 0) throw std::domain_error("log of a non-positive number");
  return unary(x, mpfr_log);
}
Real sqrt(const Real& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of a negative number");
  return unary(x, mpfr_sqrt);
}
Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real pow(const Real& base, const Real& exponent) { return binary(base, exponent, mpfr_pow); }

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign_part;
  if (s.front() == '-') {
    sign_part = "-";
    s.erase(0, 1);
  }
  std::string out = sign_part + s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  long e = static_cast<long>(exp10) - 1;
  out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  return out;
}

std::string Real::to_decimal(int digits) const {
  if (mpfr_nan_p(value_) || mpfr_inf_p(value_)) return to_string(digits);
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return coulomb_sharp::to_decimal(q, digits);
}

HighPrecisionReal evaluate_validated(int digits, const std::function<Real(mpfr_prec_t)>& compute) {
  mpfr_prec_t working = bits_for_digits(digits + 10);
  Real tolerance = exp(Real(-digits, working) * log(Real(10, working)));
  for (int attempt = 0; attempt < 5; ++attempt) {
    Real coarse = compute(working);
    Real fine = compute(2 * working);
    Real diff = abs(fine - coarse);
    if (diff.is_zero() || diff <= abs(fine) * tolerance) {
      Real out(bits_for_digits(digits + 10));
      mpfr_set(out.get(), fine.get(), MPFR_RNDN);
      return HighPrecisionReal{std::move(out), digits};
    }
    working *= 2;
  }
  throw std::runtime_error("high-precision evaluation failed to stabilize at " + std::to_string(digits) +
                           " digits");
}

StrictOrder strict_order(const HighPrecisionReal& a, const HighPrecisionReal& b) {
  int digits = std::min(a.digits, b.digits);
  mpfr_prec_t bits = std::max(a.value.precision(), b.value.precision());
  Real diff = a.value - b.value;
  Real scale = std::max(abs(a.value), abs(b.value));
  if (scale.is_zero()) return StrictOrder::inconclusive;
  // 10 units in the last kept digit, measured relative to the larger magnitude
  Real unit = exp(Real(1 - digits, bits) * log(Real(10, bits)));
  Real margin = Real(10, bits) * unit * scale;
  if (abs(diff) <= margin) return StrictOrder::inconclusive;
  return diff.sign() < 0 ? StrictOrder::less : StrictOrder::greater;
}

}  // namespace coulomb_sharp
