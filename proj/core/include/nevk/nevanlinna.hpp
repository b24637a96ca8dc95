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

#ifndef NEVK_NEVANLINNA_HPP
#define NEVK_NEVANLINNA_HPP

#include <string>
#include <vector>

#include "nevk/curve.hpp"
#include "nevk/newton.hpp"
#include "nevk/piecewise.hpp"

namespace nevk {

// T_f as a function of s = log_p r, domain [0, +inf). Entire mode: the
// max of the component Gauss norms. Punctured mode: the three-term
// combination L(s) + L(-s) - 2L(0) of that max, which is what makes the
// value independent of the choice of reduced representation.
PiecewiseLinear characteristicPL(const AnalyticCurve& f, const Int& p);

// m_f(s, Q) = d*T(s) - log|Q o f|_s (entire), or its three-term
// punctured analog. Throws PreconditionError when Q o f vanishes
// identically (curve contained in the hypersurface).
PiecewiseLinear proximityPL(const AnalyticCurve& f, const MultiForm& q,
                            const Int& p);

// N_f(s, Q) from the Newton polygon of Q o f (two-sided in punctured
// mode), domain [0, +inf).
PiecewiseLinear countingPL(const AnalyticCurve& f, const MultiForm& q,
                           const Int& p);

// m + N - d*T. The first main theorem says this is a constant function;
// a non-constant result signals an implementation bug and throws
// InvariantViolation.
PiecewiseLinear fmtResidual(const AnalyticCurve& f, const MultiForm& q,
                            const Int& p);

struct DefectValue {
  Rat value;
  // True when the curve has truncated components: the value is m/(dT) at
  // the declared validity radius, not an exact limit.
  bool estimateOnly = false;
};

// delta_f(D) = liminf m/(dT). Exact for polynomial curves, where the
// liminf is the slope ratio of the eventual pieces.
DefectValue defect(const AnalyticCurve& f, const MultiForm& q, const Int& p);

struct NamedForm {
  std::string name;
  MultiForm form;
};

struct HypersurfaceReport {
  std::string name;
  int degree;
  PiecewiseLinear proximity;
  PiecewiseLinear counting;
  PiecewiseLinear fmtResidual;
  DefectValue defect;
  bool omitted;  // Q o f has no zeros in the domain of the curve
};

// Everything the defect-relation verification produces. verdict is the
// boundedness of the gap (the main inequality); the corollary flags are
// recorded separately so a failure pinpoints what broke.
struct NevanlinnaReport {
  PiecewiseLinear T;
  std::vector<HypersurfaceReport> perHypersurface;
  PiecewiseLinear sumScaledProximity;
  PiecewiseLinear bound;  // multiplier * n * T
  PiecewiseLinear gap;    // sumScaledProximity - bound
  bool gapBounded;
  Rat gapSupremum;  // the realized O(1) constant, valid iff gapBounded
  Rat defectSum;
  int positiveDefectCount;
  int omittedCount;
  int multiplier;  // 1 for the entire plane, 2 for the punctured plane
  bool defectSumWithinBound;     // sum of defects <= multiplier * n
  bool positiveCountWithinBound; // positive defects <= multiplier * n
  bool verdict;

  // constructed by defectRelationCheck / laurentDefectCheck only
  NevanlinnaReport(PiecewiseLinear t, PiecewiseLinear sum, PiecewiseLinear bd,
                   PiecewiseLinear g)
      : T(std::move(t)),
        sumScaledProximity(std::move(sum)),
        bound(std::move(bd)),
        gap(std::move(g)) {}
};

// The Main Theorem pipeline: preconditions (on-variety, non-constant,
// general position via the algebra module, no containment), then the
// inequality sum m/deg <= n*T + O(1) decided exactly, with the realized
// O(1) constant, the defect table, and both corollaries.
NevanlinnaReport defectRelationCheck(const AnalyticCurve& f,
                                     const VarietyContext& x,
                                     const std::vector<NamedForm>& hyps,
                                     const Int& p, long cap = 0);

struct LaurentTriple {
  PiecewiseLinear T;
  PiecewiseLinear counting;
  PiecewiseLinear proximity;
};

// Punctured-plane T, N, m for one hypersurface; verifies the first main
// theorem analog (constant residual) before returning.
LaurentTriple laurentNevanlinna(const AnalyticCurve& f, const MultiForm& q,
                                const Int& p);

// Punctured-plane defect relation with the 2n bound.
NevanlinnaReport laurentDefectCheck(const AnalyticCurve& f,
                                    const VarietyContext& x,
                                    const std::vector<NamedForm>& hyps,
                                    const Int& p, long cap = 0);

}  // namespace nevk

#endif  // NEVK_NEVANLINNA_HPP
