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

#ifndef NEVK_PIECEWISE_HPP
#define NEVK_PIECEWISE_HPP

#include <optional>
#include <vector>

#include "nevk/rational.hpp"

namespace nevk {

struct Line {
  Rat slope;
  Rat intercept;
  Rat at(const Rat& s) const { return slope * s + intercept; }
  friend bool operator==(const Line&, const Line&) = default;
};

// An exact continuous piecewise-linear function of the log-radius
// s = log_p r. The domain is either the full line or a half-line
// [lower, +inf); it is never bounded above. Pieces are closed on the
// left and open on the right; continuity across breakpoints is a class
// invariant, so the boundary convention never affects a value.
//
// Immutable after construction; all operations return new values.
class PiecewiseLinear {
 public:
  // Constant / affine functions on the full line.
  static PiecewiseLinear constant(Rat c);
  static PiecewiseLinear affine(Rat slope, Rat intercept);

  // Pointwise max of finitely many lines (the upper envelope), on the
  // full line. Throws DomainError on an empty set of lines.
  static PiecewiseLinear upperEnvelope(std::vector<Line> lines);

  // Explicit construction; validates ordering and continuity.
  PiecewiseLinear(std::optional<Rat> lower, std::vector<Rat> breakpoints,
                  std::vector<Line> pieces);

  bool hasLowerBound() const { return lower_.has_value(); }
  const Rat& lowerBound() const;
  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Line>& pieces() const { return pieces_; }

  // Exact evaluation. Throws DomainError for s below the lower bound.
  Rat operator()(const Rat& s) const;

  // Restriction to [s0, +inf); s0 may lie above the current lower bound.
  PiecewiseLinear restrictLower(const Rat& s0) const;

  // s -> f(-s). Only defined for full-line functions.
  PiecewiseLinear reflect() const;

  // Slope of the last (respectively first) piece.
  const Rat& eventualSlope() const { return pieces_.back().slope; }
  const Rat& initialSlope() const { return pieces_.front().slope; }

  bool isConstant() const;

  struct UpperBound {
    bool bounded;
    Rat supremum;  // meaningful only when bounded
  };
  // bounded iff the function does not tend to +inf on either end of its
  // domain; then supremum is the exact maximum (attained, by continuity
  // and piecewise linearity).
  UpperBound boundedAbove() const;

  // Structural equality after normalization == pointwise equality.
  friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b);

  // Pointwise max on the intersection of domains.
  friend PiecewiseLinear plMax(const PiecewiseLinear& f,
                               const PiecewiseLinear& g);
  // alpha*f + beta*g on the intersection of domains.
  friend PiecewiseLinear plCombine(const PiecewiseLinear& f,
                                   const PiecewiseLinear& g, const Rat& alpha,
                                   const Rat& beta);

 private:
  PiecewiseLinear() = default;
  void normalize();
  void validate() const;

  std::optional<Rat> lower_;   // nullopt: full line
  std::vector<Rat> breaks_;    // strictly increasing, > lower_ when bounded
  std::vector<Line> pieces_;   // breaks_.size() + 1 entries
};

inline PiecewiseLinear operator+(const PiecewiseLinear& f,
                                 const PiecewiseLinear& g) {
  return plCombine(f, g, Rat(1), Rat(1));
}
inline PiecewiseLinear operator-(const PiecewiseLinear& f,
                                 const PiecewiseLinear& g) {
  return plCombine(f, g, Rat(1), Rat(-1));
}
PiecewiseLinear operator*(const Rat& c, const PiecewiseLinear& f);

}  // namespace nevk

#endif  // NEVK_PIECEWISE_HPP
