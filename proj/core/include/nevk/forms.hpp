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

#ifndef NEVK_FORMS_HPP
#define NEVK_FORMS_HPP

#include <map>
#include <string>
#include <vector>

#include "nevk/rational.hpp"

namespace nevk {

using Exponents = std::vector<int>;

inline int totalDegree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// Graded reverse lexicographic order with x0 > x1 > ... > xN:
// higher total degree wins; on equal degree, a > b iff the last nonzero
// entry of a - b is negative.
struct GrevlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }
};

// Multivariate polynomial over Q in variables x0..x(nvars-1), stored
// sparsely with grevlex-ordered terms. The library only ever feeds
// homogeneous polynomials through public module boundaries; intermediate
// arithmetic may pass through zero.
class MultiForm {
 public:
  explicit MultiForm(int nvars) : nvars_(nvars) {}

  static MultiForm zero(int nvars) { return MultiForm(nvars); }
  static MultiForm term(int nvars, Exponents e, Rat c);
  static MultiForm variable(int nvars, int k);
  static MultiForm constantOne(int nvars);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  // Total degree of the (grevlex-)leading term; undefined on zero.
  int degree() const;
  bool isHomogeneous() const;

  const std::map<Exponents, Rat, GrevlexLess>& terms() const { return terms_; }
  // Largest term under grevlex.
  const std::pair<const Exponents, Rat>& leadingTerm() const;

  // Terms of exact total degree d.
  MultiForm homogeneousComponent(int d) const;

  void addTerm(const Exponents& e, const Rat& c);  // builder use only

  std::string toString() const;

  friend bool operator==(const MultiForm&, const MultiForm&) = default;

 private:
  int nvars_;
  std::map<Exponents, Rat, GrevlexLess> terms_;
};

MultiForm operator+(const MultiForm& a, const MultiForm& b);
MultiForm operator-(const MultiForm& a, const MultiForm& b);
MultiForm operator*(const MultiForm& a, const MultiForm& b);
MultiForm operator*(const Rat& c, const MultiForm& a);
MultiForm formPow(const MultiForm& a, long k);

// Divisibility of monomials, and their quotient.
bool monomialDivides(const Exponents& a, const Exponents& b);  // a | b
Exponents monomialQuotient(const Exponents& b, const Exponents& a);
Exponents monomialLcm(const Exponents& a, const Exponents& b);

}  // namespace nevk

#endif  // NEVK_FORMS_HPP
