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

#include "nevk/series.hpp"

#include <algorithm>

#include "nevk/errors.hpp"

namespace nevk {

Series Series::monomial(long j, Rat c) {
  Series s;
  if (c != 0) s.coeffs_.emplace(j, std::move(c));
  return s;
}

Series Series::fromCoefficients(std::vector<std::pair<long, Rat>> coeffs) {
  Series s;
  for (auto& [j, c] : coeffs) {
    if (c == 0) continue;
    auto [it, fresh] = s.coeffs_.emplace(j, c);
    if (!fresh) throw InvariantViolation("duplicate series index");
  }
  return s;
}

Series Series::withTruncation(Truncation t) const {
  Series s = *this;
  // Unknown territory starts at t.order; stored coefficients there would
  // be meaningless.
  s.coeffs_.erase(s.coeffs_.lower_bound(t.order), s.coeffs_.end());
  s.trunc_ = std::move(t);
  return s;
}

long Series::lowestIndex() const {
  if (coeffs_.empty()) throw DomainError("lowestIndex of zero series");
  return coeffs_.begin()->first;
}

long Series::highestIndex() const {
  if (coeffs_.empty()) throw DomainError("highestIndex of zero series");
  return coeffs_.rbegin()->first;
}

Rat Series::coefficient(long j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

bool Series::isConstantSeries() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && lowestIndex() == 0);
}

Rat Series::evaluateAt(const Rat& z) const {
  if (!isExact()) throw DomainError("exact evaluation of a truncated series");
  Rat acc(0);
  for (const auto& [j, c] : coeffs_) {
    if (j < 0 && z == 0) throw DomainError("Laurent evaluation at 0");
    Rat zj(1);
    long e = j < 0 ? -j : j;
    for (long i = 0; i < e; ++i) zj *= z;
    acc += j < 0 ? Rat(c / zj) : Rat(c * zj);
  }
  return acc;
}

std::string Series::toString(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [j, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += ratToString(c);
    } else {
      if (c != 1) out += ratToString(c) + "*";
      out += var;
      if (j != 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

namespace {

std::optional<Truncation> combinedTruncation(const Series& a, const Series& b,
                                             SeriesOp op) {
  if (a.isExact() && b.isExact()) return std::nullopt;
  auto orderOf = [](const Series& s) {
    return s.isExact() ? std::optional<long>() : s.truncation()->order;
  };
  auto lowOf = [](const Series& s) {
    return s.isZero() ? 0 : s.lowestIndex();
  };
  std::optional<long> order;
  if (op == SeriesOp::Add) {
    for (auto o : {orderOf(a), orderOf(b)})
      if (o) order = order ? std::min(*order, *o) : *o;
  } else {
    // (a mod z^oa)(b) is known mod z^(oa + low(b)) and symmetrically.
    if (auto oa = orderOf(a)) order = *oa + lowOf(b);
    if (auto ob = orderOf(b)) {
      long o = *ob + lowOf(a);
      order = order ? std::min(*order, o) : o;
    }
  }
  Rat sMax;
  bool have = false;
  for (const Series* s : {&a, &b}) {
    if (s->isExact()) continue;
    const Rat& m = s->truncation()->sMax;
    if (!have || m < sMax) sMax = m;
    have = true;
  }
  return Truncation{*order, sMax};
}

}  // namespace

Series seriesArith(const Series& a, const Series& b, SeriesOp op) {
  std::map<long, Rat> acc;
  if (op == SeriesOp::Add) {
    for (const auto& [j, c] : a.coefficients()) acc[j] += c;
    for (const auto& [j, c] : b.coefficients()) acc[j] += c;
  } else {
    for (const auto& [i, ca] : a.coefficients())
      for (const auto& [j, cb] : b.coefficients()) acc[i + j] += ca * cb;
  }
  std::vector<std::pair<long, Rat>> kept;
  for (auto& [j, c] : acc)
    if (c != 0) kept.emplace_back(j, std::move(c));
  Series r = Series::fromCoefficients(std::move(kept));
  if (auto t = combinedTruncation(a, b, op)) r = r.withTruncation(*t);
  return r;
}

Series operator*(const Rat& c, const Series& a) {
  std::vector<std::pair<long, Rat>> kept;
  for (const auto& [j, x] : a.coefficients()) kept.emplace_back(j, c * x);
  Series r = Series::fromCoefficients(std::move(kept));
  if (!a.isExact()) r = r.withTruncation(*a.truncation());
  return r;
}

Series seriesPow(const Series& a, long k) {
  if (k < 0) throw DomainError("negative series power");
  Series r = Series::constant(Rat(1));
  for (long i = 0; i < k; ++i) r = r * a;
  return r;
}

Zeroness classify(const Series& a) {
  if (!a.isZero()) return Zeroness::NonZero;
  return a.isExact() ? Zeroness::ExactZero : Zeroness::ZeroToPrecision;
}

namespace {

void requirePolynomial(const Series& s, const char* who) {
  if (!s.isExact() || !s.isEntire())
    throw DomainError(std::string(who) + " requires exact polynomials");
}

// Remainder of a by b (b nonzero), both polynomials.
Series polyRem(Series a, const Series& b) {
  long db = b.highestIndex();
  const Rat& lb = b.coefficients().rbegin()->second;
  while (!a.isZero() && a.highestIndex() >= db) {
    Rat q = a.coefficients().rbegin()->second / lb;
    a = a - Series::monomial(a.highestIndex() - db, q) * b;
  }
  return a;
}

}  // namespace

Series polyGcd(const Series& a, const Series& b) {
  requirePolynomial(a, "polyGcd");
  requirePolynomial(b, "polyGcd");
  Series x = a, y = b;
  while (!y.isZero()) {
    Series r = polyRem(x, y);
    x = y;
    y = r;
  }
  if (x.isZero()) return x;
  return (Rat(1) / x.coefficients().rbegin()->second) * x;  // monic
}

Series polyDivExact(const Series& a, const Series& b) {
  requirePolynomial(a, "polyDivExact");
  requirePolynomial(b, "polyDivExact");
  if (b.isZero()) throw DomainError("division by the zero polynomial");
  Series rem = a, quot;
  long db = b.highestIndex();
  const Rat& lb = b.coefficients().rbegin()->second;
  while (!rem.isZero() && rem.highestIndex() >= db) {
    Series m = Series::monomial(rem.highestIndex() - db,
                                rem.coefficients().rbegin()->second / lb);
    quot = quot + m;
    rem = rem - m * b;
  }
  if (!rem.isZero())
    throw InvariantViolation("polyDivExact: nonzero remainder");
  return quot;
}

}  // namespace nevk
