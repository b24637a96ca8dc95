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

#include "nevk/forms.hpp"

#include <algorithm>

#include "nevk/errors.hpp"

namespace nevk {

MultiForm MultiForm::term(int nvars, Exponents e, Rat c) {
  MultiForm f(nvars);
  f.addTerm(e, c);
  return f;
}

MultiForm MultiForm::variable(int nvars, int k) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return term(nvars, std::move(e), Rat(1));
}

MultiForm MultiForm::constantOne(int nvars) {
  return term(nvars, Exponents(static_cast<std::size_t>(nvars), 0), Rat(1));
}

int MultiForm::degree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial");
  return totalDegree(terms_.rbegin()->first);
}

bool MultiForm::isHomogeneous() const {
  if (terms_.empty()) return true;
  int d = totalDegree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (totalDegree(e) != d) return false;
  return true;
}

const std::pair<const Exponents, Rat>& MultiForm::leadingTerm() const {
  if (terms_.empty()) throw DomainError("leading term of zero");
  return *terms_.rbegin();
}

MultiForm MultiForm::homogeneousComponent(int d) const {
  MultiForm f(nvars_);
  for (const auto& [e, c] : terms_)
    if (totalDegree(e) == d) f.terms_.emplace(e, c);
  return f;
}

void MultiForm::addTerm(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw ShapeError("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw ShapeError("negative exponent in form");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::string MultiForm::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += ratToString(c);
    } else {
      if (c != 1) out += ratToString(c) + "*";
      out += mono;
    }
  }
  return out;
}

namespace {
void checkShapes(const MultiForm& a, const MultiForm& b) {
  if (a.nvars() != b.nvars())
    throw ShapeError("variable count mismatch in form arithmetic");
}
}  // namespace

MultiForm operator+(const MultiForm& a, const MultiForm& b) {
  checkShapes(a, b);
  MultiForm r = a;
  for (const auto& [e, c] : b.terms()) r.addTerm(e, c);
  return r;
}

MultiForm operator-(const MultiForm& a, const MultiForm& b) {
  return a + Rat(-1) * b;
}

MultiForm operator*(const MultiForm& a, const MultiForm& b) {
  checkShapes(a, b);
  MultiForm r(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, ca * cb);
    }
  }
  return r;
}

MultiForm operator*(const Rat& c, const MultiForm& a) {
  MultiForm r(a.nvars());
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms()) r.addTerm(e, c * x);
  return r;
}

MultiForm formPow(const MultiForm& a, long k) {
  if (k < 0) throw DomainError("negative form power");
  MultiForm r = MultiForm::constantOne(a.nvars());
  for (long i = 0; i < k; ++i) r = r * a;
  return r;
}

bool monomialDivides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents monomialQuotient(const Exponents& b, const Exponents& a) {
  Exponents q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Exponents monomialLcm(const Exponents& a, const Exponents& b) {
  Exponents m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

}  // namespace nevk
