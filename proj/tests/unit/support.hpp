#pragma once

#include "coulomb_sharp/exact/rational.hpp"

#include <cstdint>
#include <random>

namespace test_support {

inline coulomb_sharp::BigRational q(const char* text) { return coulomb_sharp::parse_rational(text); }

/// Fixed-seed generator so property tests are reproducible run to run.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234abcdULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random rational num/den with |num| <= max_num and 1 <= den <= max_den.
inline coulomb_sharp::BigRational random_rational(long max_num, long max_den) {
  return coulomb_sharp::make_rational(uniform(-max_num, max_num), uniform(1, max_den));
}

}  // namespace test_support
