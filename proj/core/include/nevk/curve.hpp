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

#ifndef NEVK_CURVE_HPP
#define NEVK_CURVE_HPP

#include <vector>

#include "nevk/forms.hpp"
#include "nevk/series.hpp"

namespace nevk {

enum class CurveMode { Entire, Punctured };

// A reduced representation (f_0, ..., f_N) of an analytic curve into
// projective N-space, entire or punctured-plane mode. For truncated
// components reducedness cannot be decided from finitely many
// coefficients; the caller asserts it and reports carry the assertion.
struct AnalyticCurve {
  std::vector<Series> components;
  CurveMode mode = CurveMode::Entire;
  bool reducednessAsserted = false;

  int ambientDim() const { return static_cast<int>(components.size()) - 1; }
  bool isExact() const;
};

// Ambient projective space P^N, its defining forms and its dimension n.
struct VarietyContext {
  int ambientDim;                    // N
  std::vector<MultiForm> generators; // homogeneous, possibly empty (all of P^N)
  int dimension;                     // n, 1 <= n <= N for theorem scenarios
};

// Q(f_0, ..., f_N) by exact substitution. Throws ShapeError when the
// variable count of Q does not match the curve.
Series formEvaluate(const MultiForm& q, const AnalyticCurve& f);
Series formEvaluate(const MultiForm& q, const std::vector<Series>& components);

// True iff every generator of X composes to zero along the curve
// (exactly for polynomial curves, to available precision for truncated).
bool checkOnVariety(const AnalyticCurve& f, const VarietyContext& x);

// Divides out the monic gcd of polynomial components (and the common
// monomial z^k in punctured mode). Throws on the all-zero tuple and on
// non-polynomial input.
AnalyticCurve reduceRepresentation(std::vector<Series> components,
                                   CurveMode mode = CurveMode::Entire);

// Projective constancy: all components pairwise proportional.
bool isConstantCurve(const AnalyticCurve& f);

}  // namespace nevk

#endif  // NEVK_CURVE_HPP
