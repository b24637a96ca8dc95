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

#include "nevk/piecewise.hpp"

#include <algorithm>

#include "nevk/errors.hpp"

namespace nevk {

namespace {

// Representative interior point of the interval (a, b) where either end
// may be absent (unbounded).
Rat interiorPoint(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (a && b) return (*a + *b) / 2;
  if (a) return *a + 1;
  if (b) return *b - 1;
  return Rat(0);
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::optional<Rat> lower,
                                 std::vector<Rat> breakpoints,
                                 std::vector<Line> pieces)
    : lower_(std::move(lower)),
      breaks_(std::move(breakpoints)),
      pieces_(std::move(pieces)) {
  validate();
  normalize();
}

void PiecewiseLinear::validate() const {
  if (pieces_.size() != breaks_.size() + 1)
    throw InvariantViolation("piece/breakpoint count mismatch");
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw InvariantViolation("breakpoints not strictly increasing");
  if (lower_ && !breaks_.empty() && !(*lower_ < breaks_.front()))
    throw InvariantViolation("breakpoint at or below the domain start");
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    if (pieces_[i].at(breaks_[i]) != pieces_[i + 1].at(breaks_[i]))
      throw InvariantViolation("discontinuity at breakpoint " +
                               ratToString(breaks_[i]));
}

void PiecewiseLinear::normalize() {
  std::vector<Rat> nb;
  std::vector<Line> np;
  np.push_back(pieces_.front());
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (pieces_[i + 1] == np.back()) continue;  // same line, drop the break
    nb.push_back(breaks_[i]);
    np.push_back(pieces_[i + 1]);
  }
  breaks_ = std::move(nb);
  pieces_ = std::move(np);
}

PiecewiseLinear PiecewiseLinear::constant(Rat c) {
  return affine(Rat(0), std::move(c));
}

PiecewiseLinear PiecewiseLinear::affine(Rat slope, Rat intercept) {
  PiecewiseLinear f;
  f.pieces_.push_back(Line{std::move(slope), std::move(intercept)});
  return f;
}

PiecewiseLinear PiecewiseLinear::upperEnvelope(std::vector<Line> lines) {
  if (lines.empty()) throw DomainError("upper envelope of no lines");
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.intercept < b.intercept);
  });
  // Per slope only the largest intercept can contribute.
  std::vector<Line> distinct;
  for (auto& l : lines) {
    if (!distinct.empty() && distinct.back().slope == l.slope)
      distinct.back() = l;
    else
      distinct.push_back(l);
  }
  // Incremental hull: stack of lines plus the s where each takes over.
  std::vector<Line> hull;
  std::vector<Rat> from;  // from[i]: hull[i] wins on [from[i], ...)
  for (auto& l : distinct) {
    for (;;) {
      if (hull.empty()) {
        hull.push_back(l);
        break;
      }
      const Line& top = hull.back();
      // slopes distinct, l.slope > top.slope
      Rat x = (top.intercept - l.intercept) / (l.slope - top.slope);
      if (!from.empty() && x <= from.back()) {
        hull.pop_back();
        from.pop_back();
        continue;
      }
      hull.push_back(l);
      from.push_back(x);
      break;
    }
  }
  PiecewiseLinear f;
  f.breaks_ = std::move(from);
  f.pieces_ = std::move(hull);
  f.normalize();
  return f;
}

const Rat& PiecewiseLinear::lowerBound() const {
  if (!lower_) throw DomainError("full-line function has no lower bound");
  return *lower_;
}

Rat PiecewiseLinear::operator()(const Rat& s) const {
  if (lower_ && s < *lower_)
    throw DomainError("evaluation at s = " + ratToString(s) +
                      " below domain start " + ratToString(*lower_));
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), s);
  return pieces_[static_cast<std::size_t>(it - breaks_.begin())].at(s);
}

PiecewiseLinear PiecewiseLinear::restrictLower(const Rat& s0) const {
  if (lower_ && s0 < *lower_)
    throw DomainError("cannot extend domain below " + ratToString(*lower_));
  PiecewiseLinear f;
  f.lower_ = s0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), s0);
  auto first = static_cast<std::size_t>(it - breaks_.begin());
  f.breaks_.assign(breaks_.begin() + static_cast<long>(first), breaks_.end());
  f.pieces_.assign(pieces_.begin() + static_cast<long>(first), pieces_.end());
  f.normalize();
  return f;
}

PiecewiseLinear PiecewiseLinear::reflect() const {
  if (lower_)
    throw DomainError("reflect is defined for full-line functions only");
  PiecewiseLinear f;
  f.breaks_.reserve(breaks_.size());
  for (auto it = breaks_.rbegin(); it != breaks_.rend(); ++it)
    f.breaks_.push_back(-*it);
  f.pieces_.reserve(pieces_.size());
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it)
    f.pieces_.push_back(Line{-it->slope, it->intercept});
  f.normalize();
  return f;
}

bool PiecewiseLinear::isConstant() const {
  return pieces_.size() == 1 && pieces_[0].slope == 0;
}

PiecewiseLinear::UpperBound PiecewiseLinear::boundedAbove() const {
  if (eventualSlope() > 0) return {false, Rat(0)};
  if (!lower_ && initialSlope() < 0) return {false, Rat(0)};
  // Bounded: the max is attained at the domain start or a breakpoint,
  // or the function is constant near an unbounded end (then that limit
  // equals an adjacent candidate or the single intercept).
  std::vector<Rat> cands;
  if (lower_) cands.push_back((*this)(*lower_));
  for (const auto& b : breaks_) cands.push_back((*this)(b));
  if (cands.empty()) cands.push_back(pieces_.front().intercept);  // constant
  return {true, *std::max_element(cands.begin(), cands.end())};
}

bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  return a.lower_ == b.lower_ && a.breaks_ == b.breaks_ &&
         a.pieces_ == b.pieces_;
}

namespace {

std::optional<Rat> commonLower(const PiecewiseLinear& f,
                               const PiecewiseLinear& g) {
  if (!f.hasLowerBound()) return g.hasLowerBound()
                                     ? std::optional<Rat>(g.lowerBound())
                                     : std::nullopt;
  if (!g.hasLowerBound()) return f.lowerBound();
  return std::max(f.lowerBound(), g.lowerBound());
}

std::vector<Rat> mergedBreaks(const PiecewiseLinear& f,
                              const PiecewiseLinear& g,
                              const std::optional<Rat>& lower) {
  std::vector<Rat> m;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(),
             g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(m));
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (lower)
    m.erase(m.begin(), std::upper_bound(m.begin(), m.end(), *lower));
  return m;
}

// The affine piece of f on an interval containing the point s.
Line lineAt(const PiecewiseLinear& f, const Rat& s) {
  const auto& br = f.breakpoints();
  auto it = std::upper_bound(br.begin(), br.end(), s);
  return f.pieces()[static_cast<std::size_t>(it - br.begin())];
}

}  // namespace

PiecewiseLinear plCombine(const PiecewiseLinear& f, const PiecewiseLinear& g,
                          const Rat& alpha, const Rat& beta) {
  auto lower = commonLower(f, g);
  auto breaks = mergedBreaks(f, g, lower);
  std::vector<Line> pieces;
  for (std::size_t i = 0; i <= breaks.size(); ++i) {
    std::optional<Rat> a = (i == 0) ? lower : std::optional<Rat>(breaks[i - 1]);
    std::optional<Rat> b =
        (i == breaks.size()) ? std::nullopt : std::optional<Rat>(breaks[i]);
    Rat s = interiorPoint(a, b);
    Line lf = lineAt(f, s), lg = lineAt(g, s);
    pieces.push_back(Line{alpha * lf.slope + beta * lg.slope,
                          alpha * lf.intercept + beta * lg.intercept});
  }
  return PiecewiseLinear(std::move(lower), std::move(breaks),
                         std::move(pieces));
}

PiecewiseLinear plMax(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  auto lower = commonLower(f, g);
  auto breaks = mergedBreaks(f, g, lower);
  // Insert exact crossing points so each final interval has one winner.
  std::vector<Rat> refined;
  for (std::size_t i = 0; i <= breaks.size(); ++i) {
    std::optional<Rat> a = (i == 0) ? lower : std::optional<Rat>(breaks[i - 1]);
    std::optional<Rat> b =
        (i == breaks.size()) ? std::nullopt : std::optional<Rat>(breaks[i]);
    if (i > 0) refined.push_back(breaks[i - 1]);
    Line lf = lineAt(f, interiorPoint(a, b));
    Line lg = lineAt(g, interiorPoint(a, b));
    if (lf.slope != lg.slope) {
      Rat x = (lg.intercept - lf.intercept) / (lf.slope - lg.slope);
      bool inside = (!a || *a < x) && (!b || x < *b);
      if (inside) refined.push_back(x);
    }
  }
  std::vector<Line> pieces;
  for (std::size_t i = 0; i <= refined.size(); ++i) {
    std::optional<Rat> a =
        (i == 0) ? lower : std::optional<Rat>(refined[i - 1]);
    std::optional<Rat> b =
        (i == refined.size()) ? std::nullopt : std::optional<Rat>(refined[i]);
    Rat s = interiorPoint(a, b);
    Line lf = lineAt(f, s), lg = lineAt(g, s);
    pieces.push_back(lf.at(s) >= lg.at(s) ? lf : lg);
  }
  return PiecewiseLinear(std::move(lower), std::move(refined),
                         std::move(pieces));
}

PiecewiseLinear operator*(const Rat& c, const PiecewiseLinear& f) {
  return plCombine(f, f, c, Rat(0));
}

}  // namespace nevk
