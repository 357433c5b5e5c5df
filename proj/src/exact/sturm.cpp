#include "coulomb_sharp/exact/sturm.hpp"

namespace coulomb_sharp {

EndpointRootError::EndpointRootError(const BigRational& at)
    : std::domain_error("polynomial vanishes at interval endpoint " + to_string(at) +
                        "; nudge the endpoint by an exact rational 1/2^k and retry"),
      at_(at) {}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(p.primitive());
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative().primitive());
  while (true) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back((-r).primitive());
    // primitive() rescales by a positive factor, so the sign of -r is kept
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int SturmSequence::variations_at(const BigRational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.sign_at_plus_infinity());
  return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.sign_at_minus_infinity());
  return count_variations(signs);
}

int SturmSequence::count(const BigRational& lo, const std::optional<BigRational>& hi) const {
  if (chain_.front().sign_at(lo) == 0) throw EndpointRootError(lo);
  if (hi && chain_.front().sign_at(*hi) == 0) throw EndpointRootError(*hi);
  if (hi && !(lo < *hi)) throw std::invalid_argument("empty interval in Sturm count");
  int at_hi = hi ? variations_at(*hi) : variations_at_plus_infinity();
  return variations_at(lo) - at_hi;
}

int sturm_count(const Polynomial& p, const BigRational& lo, const BigRational& hi) {
  return SturmSequence(p).count(lo, hi);
}

int sturm_count_above(const Polynomial& p, const BigRational& lo) { return SturmSequence(p).count(lo, std::nullopt); }

Nudge nudge_off_root(const Polynomial& p, const BigRational& x, int direction, int first_power) {
  if (p.is_zero()) throw std::invalid_argument("cannot nudge off a root of the zero polynomial");
  if (p.sign_at(x) != 0) return {x, 0};
  BigRational step = make_rational(BigInt(1), BigInt(1) << first_power);
  for (int k = 0; k < 4096; ++k, step /= 2) {
    BigRational offset = direction >= 0 ? step : BigRational(-step);
    if (p.sign_at(x + offset) != 0) return {x + offset, offset};
  }
  throw std::runtime_error("nudge did not leave the root set");
}

RootBracket bisect_root(const Polynomial& p, RootBracket bracket, const BigRational& width) {
  SturmSequence sturm(p);
  if (sturm.count(bracket.lower, bracket.upper) != 1)
    throw std::domain_error("bracket does not isolate exactly one root");
  bracket.sign_at_lower = p.sign_at(bracket.lower);
  bracket.sign_at_upper = p.sign_at(bracket.upper);
  RootBracket out = bisect_sign_change([&](const BigRational& x) { return p.sign_at(x); }, bracket, width);
  if (sturm.count(out.lower, out.upper) != 1) throw std::logic_error("bisection lost the isolated root");
  return out;
}

RootBracket isolate_unique_root_above(const Polynomial& p, const BigRational& lo, const BigRational& width) {
  SturmSequence sturm(p);
  int total = sturm.count(lo, std::nullopt);
  if (total != 1)
    throw std::domain_error("expected exactly one root above " + to_string(lo) + ", found " +
                            std::to_string(total));
  // Fujiwara bound: every root satisfies |t| <= 2 max_i |a_{n-i} / a_n|^(1/i).
  const int n = p.degree();
  BigInt bound = 0;
  for (int i = 1; i <= n; ++i) {
    BigInt ratio = ceil_int(BigRational(abs(p.coefficient(n - i) / p.leading())));
    BigInt root;
    mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(i));
    bound = std::max(bound, BigInt(root + 1));
  }
  BigRational hi = std::max(BigRational(lo + 1), BigRational(2 * bound));
  RootBracket bracket{lo, hi, p.sign_at(lo), p.sign_at(hi)};
  return bisect_root(p, bracket, width);
}

}  // namespace coulomb_sharp
