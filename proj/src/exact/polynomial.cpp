#include "coulomb_sharp/exact/polynomial.hpp"

#include <stdexcept>

namespace coulomb_sharp {

Polynomial::Polynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigRational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigRational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const BigRational& shift) { return Polynomial({shift, BigRational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<size_t>(power)];
}

const BigRational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigRational Polynomial::operator()(const BigRational& t) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

int Polynomial::sign_at_plus_infinity() const { return is_zero() ? 0 : sign(leading()); }

int Polynomial::sign_at_minus_infinity() const {
  if (is_zero()) return 0;
  return degree() % 2 == 0 ? sign(leading()) : -sign(leading());
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigRational> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  BigRational inv = 1 / leading();
  return inv * *this;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  BigInt den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  BigInt content = 0;
  for (const auto& c : coeffs_) {
    BigInt n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  return make_rational(den_lcm, content) * *this;
}

Polynomial Polynomial::shifted(const BigRational& c) const {
  // Horner in polynomial arithmetic: p(t + c)
  Polynomial acc;
  Polynomial x = linear(c);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + constant(*it);
  return acc;
}

Polynomial Polynomial::operator-() const { return BigRational(-1) * *this; }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const BigRational& c, const Polynomial& p) {
  if (c == 0) return {};
  std::vector<BigRational> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) out += coulomb_sharp::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += variable;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigRational> quot(static_cast<size_t>(a.degree() - b.degree() + 1));
  const auto bc = b.coefficients();
  const BigRational inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigRational q = rem[static_cast<size_t>(k + db)] * inv_lead;
    quot[static_cast<size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * bc[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial expand_linear_factors(std::span<const BigRational> shifts) {
  Polynomial acc = Polynomial::constant(1);
  for (const auto& r : shifts) acc = acc * Polynomial::linear(r);
  return acc;
}

}  // namespace coulomb_sharp
