#include "coulomb_sharp/exact/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coulomb_sharp {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    BigInt ev = parse_integer(text.substr(e + 1));
    if (!ev.fits_slong_p() || abs(ev) > 100000) throw std::invalid_argument("exponent out of range");
    exponent = ev.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto whole = mantissa.substr(0, dot);
    auto frac = mantissa.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }

  BigInt num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - fraction_digits;
  if (scale >= 0) return BigRational(BigInt(num * pow10(static_cast<unsigned long>(scale))));
  return make_rational(num, pow10(static_cast<unsigned long>(-scale)));
}

std::string to_string(const BigRational& value) { return value.get_str(10); }
std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt floor_int(const BigRational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil_int(const BigRational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

int sign(const BigRational& value) { return sgn(value); }

BigRational pow(const BigRational& value, long exponent) {
  if (exponent < 0) {
    if (value == 0) throw std::domain_error("zero raised to a negative power");
    return 1 / pow(value, -exponent);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // already coprime
  BigRational r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_decimal(const BigRational& value, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits must be positive");
  if (value == 0) return "0";
  BigRational a = abs(value);

  // 10^e <= a < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto p10 = [](long k) {
    return k >= 0 ? BigRational(pow10(static_cast<unsigned long>(k)))
                  : make_rational(BigInt(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (a < p10(e)) --e;
  while (a >= p10(e + 1)) ++e;

  auto scaled_round = [&](long exp10) {
    BigRational s = a * p10(significant_digits - 1 - exp10);
    BigInt q = floor_int(s);
    if (s - BigRational(q) >= make_rational(1, 2)) q += 1;
    return q;
  };
  BigInt mant = scaled_round(e);
  if (mant == pow10(static_cast<unsigned long>(significant_digits))) {
    ++e;
    mant = scaled_round(e);
  }
  std::string digits = mant.get_str(10);
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = value < 0 ? "-" : "";
  if (e >= -6 && e < 21) {
    if (e < 0) {
      out += "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
    } else if (static_cast<long>(digits.size()) <= e + 1) {
      out += digits + std::string(static_cast<size_t>(e + 1) - digits.size(), '0');
    } else {
      out += digits.substr(0, static_cast<size_t>(e + 1)) + "." + digits.substr(static_cast<size_t>(e + 1));
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
  }
  return out;
}

}  // namespace coulomb_sharp
