#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coulomb_sharp {

using BigInt = mpz_class;

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with a
/// positive denominator as long as construction goes through make_rational or
/// parse_rational (raw two-argument mpq_class construction does not canonicalize).
using BigRational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);

/// Parses "P/Q", integers, and decimal strings ("11.1", "-0.25", "1e-3") exactly.
/// Binary floating point is never involved. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

BigInt floor_int(const BigRational& value);
BigInt ceil_int(const BigRational& value);
int sign(const BigRational& value);

/// value^exponent; a negative exponent requires value != 0.
BigRational pow(const BigRational& value, long exponent);
BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

/// Correctly rounded (half away from zero) decimal rendering with the given
/// number of significant digits; trailing zeros are dropped. Positional
/// notation for moderate exponents, otherwise "d.ddde+NN".
std::string to_decimal(const BigRational& value, int significant_digits);

}  // namespace coulomb_sharp
