#ifndef NEVK_TESTS_TEST_UTIL_HPP
#define NEVK_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "nevk/rational.hpp"
#include "nevk/series.hpp"

namespace nevk::testutil {

// Deterministic generators (fixed seeds live in the tests).
inline Rat randomRat(std::mt19937& rng, int maxAbs = 50) {
  std::uniform_int_distribution<int> num(-maxAbs, maxAbs);
  std::uniform_int_distribution<int> den(1, maxAbs);
  return ratOf(num(rng), den(rng));
}

inline Rat randomNonzeroRat(std::mt19937& rng, int maxAbs = 50) {
  for (;;) {
    Rat r = randomRat(rng, maxAbs);
    if (r != 0) return r;
  }
}

inline Series randomPolynomial(std::mt19937& rng, int maxDegree,
                               int maxAbs = 20) {
  std::uniform_int_distribution<int> deg(0, maxDegree);
  int d = deg(rng);
  std::vector<std::pair<long, Rat>> coeffs;
  for (long j = 0; j <= d; ++j) {
    Rat c = randomRat(rng, maxAbs);
    if (c != 0) coeffs.emplace_back(j, c);
  }
  return Series::fromCoefficients(std::move(coeffs));
}

}  // namespace nevk::testutil

#endif
