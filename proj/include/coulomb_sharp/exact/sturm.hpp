#pragma once

#include "coulomb_sharp/exact/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace coulomb_sharp {

/// Raised when a Sturm count is requested at an endpoint that is itself a root.
/// Callers move the endpoint by an exact nudge (see nudge_off_root) and retry.
class EndpointRootError : public std::domain_error {
 public:
  explicit EndpointRootError(const BigRational& at);
  const BigRational& endpoint() const { return at_; }

 private:
  BigRational at_;
};

/// Signed remainder chain p, p', -rem(p, p'), ... Each member is rescaled by a
/// positive constant to a primitive integer polynomial, which leaves every
/// sign-variation count unchanged.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  int variations_at(const BigRational& x) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;

  /// Distinct real roots in the open interval (lo, hi); hi = nullopt means +inf.
  int count(const BigRational& lo, const std::optional<BigRational>& hi) const;

  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Distinct real roots of p in (lo, hi). Requires p(lo) != 0 and p(hi) != 0.
int sturm_count(const Polynomial& p, const BigRational& lo, const BigRational& hi);
/// Distinct real roots of p in (lo, +inf). Requires p(lo) != 0.
int sturm_count_above(const Polynomial& p, const BigRational& lo);

struct Nudge {
  BigRational point;
  BigRational offset;  // point = original + offset
};

/// Moves x by +-1/2^k (k = 1, 2, ...) in the given direction until p does not
/// vanish there; offset is zero when x is already a non-root.
Nudge nudge_off_root(const Polynomial& p, const BigRational& x, int direction, int first_power = 1);

/// An interval (lower, upper) with opposite nonzero signs of the bracketed
/// function at the two ends.
struct RootBracket {
  BigRational lower;
  BigRational upper;
  int sign_at_lower = 0;
  int sign_at_upper = 0;

  BigRational width() const { return upper - lower; }
  BigRational midpoint() const { return (lower + upper) / 2; }
};

/// Halves a sign-change bracket of an arbitrary exactly-evaluable sign function
/// until its width is at most `width`. An exact zero hit at a midpoint is
/// re-bracketed symmetrically around that point.
template <class SignFn>
RootBracket bisect_sign_change(SignFn&& sign_of, RootBracket bracket, const BigRational& width) {
  if (!(bracket.lower < bracket.upper) || bracket.sign_at_lower == 0 ||
      bracket.sign_at_lower != -bracket.sign_at_upper)
    throw std::invalid_argument("invalid root bracket");
  if (width <= 0) throw std::invalid_argument("bracket width must be positive");
  while (bracket.width() > width) {
    BigRational mid = bracket.midpoint();
    int s = sign_of(mid);
    if (s == 0) {
      BigRational half = width / 4;
      for (int guard = 0; guard < 256; ++guard, half /= 2) {
        int sl = sign_of(mid - half);
        int su = sign_of(mid + half);
        if (sl != 0 && su != 0 && sl == -su)
          return RootBracket{mid - half, mid + half, sl, su};
      }
      throw std::runtime_error("could not re-bracket an exact root");
    }
    if (s == bracket.sign_at_lower) {
      bracket.lower = mid;
    } else {
      bracket.upper = mid;
    }
  }
  return bracket;
}

/// Polynomial bisection with Sturm certification: the input bracket must hold
/// exactly one distinct root, and so does every returned bracket.
RootBracket bisect_root(const Polynomial& p, RootBracket bracket, const BigRational& width);

/// Brackets the unique root of p in (lo, +inf) to the given width. Throws
/// std::domain_error unless that root exists and is unique.
RootBracket isolate_unique_root_above(const Polynomial& p, const BigRational& lo, const BigRational& width);

}  // namespace coulomb_sharp
