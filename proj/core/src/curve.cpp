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

#include "nevk/curve.hpp"

#include <algorithm>

#include "nevk/errors.hpp"

namespace nevk {

bool AnalyticCurve::isExact() const {
  return std::all_of(components.begin(), components.end(),
                     [](const Series& s) { return s.isExact(); });
}

Series formEvaluate(const MultiForm& q, const std::vector<Series>& comps) {
  if (static_cast<std::size_t>(q.nvars()) != comps.size())
    throw ShapeError("form has " + std::to_string(q.nvars()) +
                     " variables, curve has " + std::to_string(comps.size()) +
                     " components");
  Series acc;
  for (const auto& [e, c] : q.terms()) {
    Series mono = Series::constant(c);
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (e[i] != 0) mono = mono * seriesPow(comps[i], e[i]);
    acc = acc + mono;
  }
  return acc;
}

Series formEvaluate(const MultiForm& q, const AnalyticCurve& f) {
  return formEvaluate(q, f.components);
}

bool checkOnVariety(const AnalyticCurve& f, const VarietyContext& x) {
  if (f.ambientDim() != x.ambientDim)
    throw ShapeError("curve ambient dimension mismatch");
  for (const auto& g : x.generators)
    if (classify(formEvaluate(g, f)) == Zeroness::NonZero) return false;
  return true;
}

AnalyticCurve reduceRepresentation(std::vector<Series> components,
                                   CurveMode mode) {
  if (components.empty()) throw PreconditionError("empty component tuple");
  bool allZero = true;
  for (const auto& s : components) {
    if (!s.isExact())
      throw DomainError(
          "reduceRepresentation supports polynomial components only; supply "
          "an already-reduced truncated representative and assert it");
    if (!s.isZero()) allZero = false;
  }
  if (allZero) throw PreconditionError("all curve components are zero");

  // Punctured mode: strip the common monomial z^k first so the gcd runs
  // on honest polynomials.
  long shift = 0;
  if (mode == CurveMode::Punctured) {
    bool first = true;
    for (const auto& s : components) {
      if (s.isZero()) continue;
      shift = first ? s.lowestIndex() : std::min(shift, s.lowestIndex());
      first = false;
    }
  } else {
    for (const auto& s : components)
      if (!s.isZero() && s.lowestIndex() < 0)
        throw DomainError("negative exponents require punctured mode");
  }
  if (shift != 0) {
    for (auto& s : components)
      s = Series::monomial(-shift, Rat(1)) * s;
  }

  Series g;
  for (const auto& s : components) g = polyGcd(g, s);
  if (!g.isConstantSeries()) {
    for (auto& s : components)
      s = s.isZero() ? s : polyDivExact(s, g);
  }
  return AnalyticCurve{std::move(components), mode, true};
}

bool isConstantCurve(const AnalyticCurve& f) {
  // Projectively constant iff every component is a scalar multiple of one
  // fixed nonzero component: the cross product f_i * c0 - pivot * c_i
  // vanishes, where c0 is the pivot coefficient of the pivot component.
  const Series* pivot = nullptr;
  for (const auto& s : f.components)
    if (!s.isZero()) {
      pivot = &s;
      break;
    }
  if (pivot == nullptr) return true;
  long j0 = pivot->lowestIndex();
  Rat c0 = pivot->coefficient(j0);
  for (const auto& s : f.components) {
    Series cross = c0 * s - s.coefficient(j0) * *pivot;
    if (!cross.isZero()) return false;
  }
  return true;
}

}  // namespace nevk
