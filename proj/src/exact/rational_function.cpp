#include "coulomb_sharp/exact/rational_function.hpp"

#include <map>
#include <stdexcept>

namespace coulomb_sharp {

RationalFunction RationalFunction::reduce(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction(Polynomial(), Polynomial::constant(1));
  Polynomial g = gcd(num, den);
  Polynomial n = divmod(num, g).first;
  Polynomial d = divmod(den, g).first;
  BigRational lead = d.leading();
  return RationalFunction((1 / lead) * n, (1 / lead) * d);
}

BigRational RationalFunction::operator()(const BigRational& t) const {
  BigRational d = den_(t);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole t=" + to_string(t));
  return num_(t) / d;
}

RationalFunction RationalFunction::log_derivative() const {
  if (num_.is_zero()) throw std::domain_error("log-derivative of the zero function");
  return reduce(num_.derivative() * den_ - num_ * den_.derivative(), num_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const BigRational& c, const RationalFunction& f) {
  return RationalFunction::reduce(c * f.num_, f.den_);
}

RationalFunction sum_simple_fractions(std::span<const SimpleFraction> terms) {
  std::map<BigRational, BigRational> by_pole;
  for (const auto& term : terms) by_pole[term.shift] += term.coefficient;

  std::vector<BigRational> shifts;
  shifts.reserve(by_pole.size());
  for (const auto& [shift, coefficient] : by_pole) shifts.push_back(shift);
  Polynomial den = expand_linear_factors(shifts);

  Polynomial num;
  for (const auto& [shift, coefficient] : by_pole) {
    if (coefficient == 0) continue;
    num = num + coefficient * divmod(den, Polynomial::linear(shift)).first;
  }
  return RationalFunction::reduce(num, den);
}

}  // namespace coulomb_sharp
