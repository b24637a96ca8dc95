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

#include "nevk/newton.hpp"

#include <map>

#include "nevk/errors.hpp"

namespace nevk {

NewtonPolygon newtonPolygon(const Series& f, const Int& p) {
  if (f.isZero())
    throw DomainError("Newton polygon of the zero series is undefined");
  std::vector<std::pair<Rat, Rat>> pts;  // (j, v_p(a_j)), j ascending
  for (const auto& [j, c] : f.coefficients())
    pts.emplace_back(Rat(j), valuation(c, p).value());

  // Andrew lower hull with exact cross products; collinear middle points
  // are dropped so vertices are minimal.
  std::vector<std::pair<Rat, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      Rat cross = (b.first - a.first) * (pt.second - a.second) -
                  (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  NewtonPolygon poly;
  poly.ord0 = f.lowestIndex();
  poly.topIndex = f.highestIndex();
  for (const auto& [j, v] : hull)
    poly.vertices.emplace_back(j.get_num().get_si(), v);
  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    const auto& [j0, v0] = poly.vertices[i];
    const auto& [j1, v1] = poly.vertices[i + 1];
    poly.segments.push_back(PolygonSegment{(v1 - v0) / Rat(j1 - j0), j1 - j0});
  }
  return poly;
}

PiecewiseLinear gaussNormPL(const Series& f, const Int& p) {
  if (f.isZero()) throw DomainError("Gauss norm of the zero series");
  std::vector<Line> lines;
  for (const auto& [j, c] : f.coefficients())
    lines.push_back(Line{Rat(j), -valuation(c, p).value()});
  return PiecewiseLinear::upperEnvelope(std::move(lines));
}

long zeroCount(const NewtonPolygon& poly, const Rat& s) {
  long n = poly.ord0;
  for (const auto& seg : poly.segments)
    if (seg.slope <= s) n += seg.length;
  return n;
}

long zeroCount(const Series& f, const Int& p, const Rat& s) {
  return zeroCount(newtonPolygon(f, p), s);
}

namespace {

// Builds the convex function on [0, +inf) with value v0 at 0, initial
// slope c0, and slope increments add[x] at breakpoints x > 0.
PiecewiseLinear convexFromSlopes(Rat v0, Rat c0,
                                 const std::map<Rat, long>& add) {
  std::vector<Rat> breaks;
  std::vector<Line> pieces;
  Rat start(0), value = std::move(v0), slope = std::move(c0);
  pieces.push_back(Line{slope, value - slope * start});
  for (const auto& [x, ell] : add) {
    value += slope * (x - start);
    start = x;
    slope += ell;
    breaks.push_back(x);
    pieces.push_back(Line{slope, value - slope * start});
  }
  return PiecewiseLinear(Rat(0), std::move(breaks), std::move(pieces));
}

}  // namespace

PiecewiseLinear countingFunctionPL(const Series& f, const Int& p) {
  NewtonPolygon poly = newtonPolygon(f, p);
  Rat v0(0);
  Rat c0(poly.ord0);
  std::map<Rat, long> add;
  for (const auto& seg : poly.segments) {
    if (seg.slope <= 0) {
      v0 += Rat(seg.length) * (-seg.slope);
      c0 += seg.length;
    } else {
      add[seg.slope] += seg.length;
    }
  }
  return convexFromSlopes(std::move(v0), std::move(c0), add);
}

PiecewiseLinear laurentCountingPL(const Series& f, const Int& p) {
  NewtonPolygon poly = newtonPolygon(f, p);
  Rat c0(0);
  std::map<Rat, long> add;
  for (const auto& seg : poly.segments) {
    Rat a = seg.slope < 0 ? -seg.slope : seg.slope;
    if (a == 0)
      c0 += seg.length;
    else
      add[a] += seg.length;
  }
  return convexFromSlopes(Rat(0), std::move(c0), add);
}

}  // namespace nevk
