#pragma once

#include "coulomb_sharp/exact/polynomial.hpp"

#include <span>

namespace coulomb_sharp {

/// c / (t + shift)
struct SimpleFraction {
  BigRational coefficient;
  BigRational shift;
};

/// Co-prime numerator/denominator pair with a monic denominator. Because the
/// representation is canonical, two equal rational functions compare equal.
class RationalFunction {
 public:
  /// Divides out gcd(num, den) and makes den monic. Throws std::domain_error
  /// when den is the zero polynomial.
  static RationalFunction reduce(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  /// Throws std::domain_error at a pole.
  BigRational operator()(const BigRational& t) const;

  /// (num'den - num den') / (num den), reduced.
  RationalFunction log_derivative() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const BigRational& c, const RationalFunction& f);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

/// Sums the simple fractions over their least common denominator (product of
/// the distinct linear factors), then reduces by polynomial gcd.
RationalFunction sum_simple_fractions(std::span<const SimpleFraction> terms);

}  // namespace coulomb_sharp
