// Copyright 2026 the nevk authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NEVK_SERIES_HPP
#define NEVK_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nevk/rational.hpp"

namespace nevk {

// Truncation marker for series that are not known exactly: coefficients
// with index >= order are unknown, and the Gauss norm is trusted only on
// s <= sMax (the user-declared validity radius, as a log-radius).
struct Truncation {
  long order;
  Rat sMax;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// One-variable polynomial or (truncated) series over Q with integer
// exponents; negative exponents make it a Laurent polynomial. Stored
// sparsely, no zero coefficients. Immutable value type.
class Series {
 public:
  Series() = default;  // zero

  static Series monomial(long j, Rat c);
  static Series constant(Rat c) { return monomial(0, std::move(c)); }
  static Series fromCoefficients(std::vector<std::pair<long, Rat>> coeffs);

  bool isZero() const { return coeffs_.empty(); }
  bool isExact() const { return !trunc_.has_value(); }
  const std::optional<Truncation>& truncation() const { return trunc_; }
  Series withTruncation(Truncation t) const;

  // Lowest / highest stored exponent. Undefined on zero (throws).
  long lowestIndex() const;
  long highestIndex() const;
  Rat coefficient(long j) const;
  const std::map<long, Rat>& coefficients() const { return coeffs_; }

  bool isEntire() const { return coeffs_.empty() || lowestIndex() >= 0; }
  bool isConstantSeries() const;

  // Exact evaluation at a rational point (polynomials only).
  Rat evaluateAt(const Rat& z) const;

  std::string toString(const std::string& var = "z") const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::map<long, Rat> coeffs_;
  std::optional<Truncation> trunc_;
};

enum class SeriesOp { Add, Mul };

// Exact coefficient arithmetic; for truncated operands the result carries
// the tightest truncation implied by the inputs.
Series seriesArith(const Series& a, const Series& b, SeriesOp op);

inline Series operator+(const Series& a, const Series& b) {
  return seriesArith(a, b, SeriesOp::Add);
}
inline Series operator*(const Series& a, const Series& b) {
  return seriesArith(a, b, SeriesOp::Mul);
}
Series operator*(const Rat& c, const Series& a);
inline Series operator-(const Series& a, const Series& b) {
  return a + Rat(-1) * b;
}
Series seriesPow(const Series& a, long k);

// Is a series zero exactly, provably nonzero, or zero only as far as the
// retained coefficients can tell?
enum class Zeroness { NonZero, ExactZero, ZeroToPrecision };
Zeroness classify(const Series& a);

// Monic gcd over Q[z]. Exact polynomials with nonnegative exponents only.
Series polyGcd(const Series& a, const Series& b);
// Exact division; throws InvariantViolation if the remainder is nonzero.
Series polyDivExact(const Series& a, const Series& b);

}  // namespace nevk

#endif  // NEVK_SERIES_HPP
