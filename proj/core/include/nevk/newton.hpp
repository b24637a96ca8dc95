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

#ifndef NEVK_NEWTON_HPP
#define NEVK_NEWTON_HPP

#include <vector>

#include "nevk/piecewise.hpp"
#include "nevk/series.hpp"

namespace nevk {

// One segment of the lower hull: slope lambda over horizontal length ell.
// It encodes ell zeros of valuation -lambda; with |z| = p^{-v(z)} such a
// zero lies in |z| <= p^s exactly when lambda <= s.
struct PolygonSegment {
  Rat slope;
  long length;
  friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

// Lower convex hull of {(j, v_p(a_j)) : a_j != 0}.
struct NewtonPolygon {
  long ord0;      // lowest stored exponent (order of vanishing at 0)
  long topIndex;  // highest stored exponent
  std::vector<std::pair<long, Rat>> vertices;  // strictly increasing in j
  std::vector<PolygonSegment> segments;        // slopes strictly increasing
};

// Throws DomainError on the zero series.
NewtonPolygon newtonPolygon(const Series& f, const Int& p);

// log_p |f|_{p^s} = max_j (j*s - v_p(a_j)), the exact upper envelope on
// the full line (restriction to a validity window is the caller's call).
PiecewiseLinear gaussNormPL(const Series& f, const Int& p);

// Zeros with |z| <= p^s, counting multiplicity (entire convention:
// ord0 zeros at the origin plus all segments of slope <= s).
long zeroCount(const NewtonPolygon& poly, const Rat& s);
long zeroCount(const Series& f, const Int& p, const Rat& s);

// N_f as an exact piecewise-linear function on [0, +inf):
// N(s) = ord0*s + sum over segments with slope <= s of ell*(s - slope).
PiecewiseLinear countingFunctionPL(const Series& f, const Int& p);

// Punctured-plane counting on [0, +inf): zeros of the Laurent series away
// from the origin, weighted by (s - |log_p z|):
// N(s) = sum over segments of ell * max(0, s - |slope|).
PiecewiseLinear laurentCountingPL(const Series& f, const Int& p);

}  // namespace nevk

#endif  // NEVK_NEWTON_HPP
