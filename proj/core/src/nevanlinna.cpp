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

#include "nevk/nevanlinna.hpp"

#include <algorithm>

#include "nevk/errors.hpp"
#include "nevk/groebner.hpp"

namespace nevk {

namespace {

// max of the component Gauss norms on the full line.
PiecewiseLinear componentEnvelope(const AnalyticCurve& f, const Int& p) {
  bool have = false;
  PiecewiseLinear env = PiecewiseLinear::constant(Rat(0));
  for (const auto& comp : f.components) {
    if (comp.isZero()) continue;
    PiecewiseLinear g = gaussNormPL(comp, p);
    env = have ? plMax(env, g) : g;
    have = true;
  }
  if (!have) throw PreconditionError("all curve components are zero");
  return env;
}

// h(s) + h(-s) - 2h(0) on [0, +inf), the punctured-plane symmetrization.
PiecewiseLinear symmetrize(const PiecewiseLinear& h) {
  PiecewiseLinear two = h + h.reflect();
  PiecewiseLinear sym = two - PiecewiseLinear::constant(two(Rat(0)));
  return sym.restrictLower(Rat(0));
}

Series composeOrThrow(const AnalyticCurve& f, const MultiForm& q) {
  Series g = formEvaluate(q, f);
  switch (classify(g)) {
    case Zeroness::ExactZero:
      throw PreconditionError(
          "Q o f vanishes identically: the curve lies in the hypersurface");
    case Zeroness::ZeroToPrecision:
      throw PreconditionError(
          "Q o f is zero to the available precision; cannot separate the "
          "curve from the hypersurface");
    case Zeroness::NonZero:
      break;
  }
  return g;
}

}  // namespace

PiecewiseLinear characteristicPL(const AnalyticCurve& f, const Int& p) {
  PiecewiseLinear env = componentEnvelope(f, p);
  if (f.mode == CurveMode::Punctured) return symmetrize(env);
  return env.restrictLower(Rat(0));
}

PiecewiseLinear proximityPL(const AnalyticCurve& f, const MultiForm& q,
                            const Int& p) {
  Series g = composeOrThrow(f, q);
  Rat d(q.degree());
  PiecewiseLinear env = componentEnvelope(f, p);
  PiecewiseLinear a = gaussNormPL(g, p);
  PiecewiseLinear diff = plCombine(env, a, d, Rat(-1));
  if (f.mode == CurveMode::Punctured) return symmetrize(diff);
  return diff.restrictLower(Rat(0));
}

PiecewiseLinear countingPL(const AnalyticCurve& f, const MultiForm& q,
                           const Int& p) {
  Series g = composeOrThrow(f, q);
  return f.mode == CurveMode::Punctured ? laurentCountingPL(g, p)
                                        : countingFunctionPL(g, p);
}

PiecewiseLinear fmtResidual(const AnalyticCurve& f, const MultiForm& q,
                            const Int& p) {
  PiecewiseLinear res = proximityPL(f, q, p) + countingPL(f, q, p) -
                        Rat(q.degree()) * characteristicPL(f, p);
  if (f.isExact() && !res.isConstant())
    throw InvariantViolation(
        "first main theorem residual is not constant (implementation bug)");
  return res;
}

DefectValue defect(const AnalyticCurve& f, const MultiForm& q, const Int& p) {
  if (isConstantCurve(f))
    throw PreconditionError("defect of a constant curve is undefined");
  PiecewiseLinear t = characteristicPL(f, p);
  PiecewiseLinear m = proximityPL(f, q, p);
  Rat d(q.degree());
  if (f.isExact()) {
    // For polynomial curves the liminf is the exact limit: the ratio of
    // eventual slopes.
    return {m.eventualSlope() / (d * t.eventualSlope()), false};
  }
  // Truncated curve: the honest statement is the value at the declared
  // validity radius, flagged as an estimate.
  Rat sMax(0);
  bool have = false;
  for (const auto& comp : f.components) {
    if (comp.isExact()) continue;
    const Rat& sm = comp.truncation()->sMax;
    if (!have || sm < sMax) sMax = sm;
    have = true;
  }
  Rat ts = t(sMax);
  if (ts == 0)
    throw PreconditionError("validity radius too small to estimate a defect");
  return {m(sMax) / (d * ts), true};
}

namespace {

NevanlinnaReport runDefectRelation(const AnalyticCurve& f,
                                   const VarietyContext& x,
                                   const std::vector<NamedForm>& hyps,
                                   const Int& p, long cap, int multiplier) {
  if (!isPrime(p)) throw ConfigError("p = " + p.get_str() + " is not prime");
  if (hyps.empty()) throw PreconditionError("no hypersurfaces supplied");
  if (isConstantCurve(f))
    throw PreconditionError("the theorem requires a non-constant curve");
  if (!checkOnVariety(f, x))
    throw PreconditionError("the curve does not lie on X");

  std::vector<MultiForm> forms;
  for (const auto& h : hyps) forms.push_back(h.form);
  GeneralPositionResult gp = generalPosition(x, forms, cap);
  if (!gp.ok) {
    std::string names;
    for (int i : gp.witness) {
      if (!names.empty()) names += ", ";
      names += hyps[static_cast<std::size_t>(i)].name;
    }
    throw PreconditionError("hypersurfaces not in general position with X; "
                            "witness subset {" + names + "}");
  }

  PiecewiseLinear t = characteristicPL(f, p);
  PiecewiseLinear sum = PiecewiseLinear::constant(Rat(0));
  bool haveSum = false;
  std::vector<HypersurfaceReport> per;
  for (const auto& h : hyps) {
    Series g = composeOrThrow(f, h.form);
    PiecewiseLinear m = proximityPL(f, h.form, p);
    PiecewiseLinear n = countingPL(f, h.form, p);
    PiecewiseLinear res = m + n - Rat(h.form.degree()) * t;
    if (f.isExact() && !res.isConstant())
      throw InvariantViolation("non-constant first-main-theorem residual");
    DefectValue dv = defect(f, h.form, p);
    // Omitted: Q o f has no zeros in the curve's domain. On the punctured
    // plane a monomial is a unit, so only hull segments count.
    bool omitted = f.mode == CurveMode::Punctured
                       ? newtonPolygon(g, p).segments.empty()
                       : g.isConstantSeries();
    per.push_back(HypersurfaceReport{h.name, h.form.degree(), m, n, res, dv,
                                     omitted});
    PiecewiseLinear scaled = (Rat(1) / Rat(h.form.degree())) * m;
    sum = haveSum ? sum + scaled : scaled;
    haveSum = true;
  }

  Rat nBound(multiplier * x.dimension);
  PiecewiseLinear bound = nBound * t;
  PiecewiseLinear gap = sum - bound;
  NevanlinnaReport rep(t, sum, bound, gap);
  rep.perHypersurface = std::move(per);
  auto ub = gap.boundedAbove();
  rep.gapBounded = ub.bounded;
  rep.gapSupremum = ub.supremum;
  rep.multiplier = multiplier;

  rep.defectSum = Rat(0);
  rep.positiveDefectCount = 0;
  rep.omittedCount = 0;
  for (const auto& h : rep.perHypersurface) {
    rep.defectSum += h.defect.value;
    if (h.defect.value > 0) ++rep.positiveDefectCount;
    if (h.omitted) ++rep.omittedCount;
  }
  rep.defectSumWithinBound = rep.defectSum <= nBound;
  rep.positiveCountWithinBound = Rat(rep.positiveDefectCount) <= nBound;
  rep.verdict =
      rep.gapBounded && rep.defectSumWithinBound && rep.positiveCountWithinBound;
  return rep;
}

}  // namespace

NevanlinnaReport defectRelationCheck(const AnalyticCurve& f,
                                     const VarietyContext& x,
                                     const std::vector<NamedForm>& hyps,
                                     const Int& p, long cap) {
  if (f.mode != CurveMode::Entire)
    throw PreconditionError("defectRelationCheck expects an entire curve");
  return runDefectRelation(f, x, hyps, p, cap, 1);
}

LaurentTriple laurentNevanlinna(const AnalyticCurve& f, const MultiForm& q,
                                const Int& p) {
  if (f.mode != CurveMode::Punctured)
    throw PreconditionError("laurentNevanlinna expects a punctured curve");
  LaurentTriple out{characteristicPL(f, p), countingPL(f, q, p),
                    proximityPL(f, q, p)};
  PiecewiseLinear res =
      out.proximity + out.counting - Rat(q.degree()) * out.T;
  if (f.isExact() && !res.isConstant())
    throw InvariantViolation(
        "punctured first-main-theorem residual is not constant");
  return out;
}

NevanlinnaReport laurentDefectCheck(const AnalyticCurve& f,
                                    const VarietyContext& x,
                                    const std::vector<NamedForm>& hyps,
                                    const Int& p, long cap) {
  if (f.mode != CurveMode::Punctured)
    throw PreconditionError("laurentDefectCheck expects a punctured curve");
  return runDefectRelation(f, x, hyps, p, cap, 2);
}

}  // namespace nevk
