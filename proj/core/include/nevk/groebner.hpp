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

#ifndef NEVK_GROEBNER_HPP
#define NEVK_GROEBNER_HPP

#include <optional>
#include <vector>

#include "nevk/curve.hpp"
#include "nevk/forms.hpp"

namespace nevk {

// Reduced Groebner basis under grevlex (x0 > x1 > ... > xN), leading
// coefficients 1. When tracked, cofactors[i] expresses gens[i] as a
// combination of the original input polynomials.
struct GroebnerBasis {
  int nvars;
  std::vector<MultiForm> gens;
  std::vector<std::vector<MultiForm>> cofactors;  // empty unless tracked
  bool tracked = false;
};

// Deterministic Buchberger (normal selection: lcm degree, then pair
// index) followed by inter-reduction. Homogeneous inputs only; exact
// rational arithmetic throughout.
GroebnerBasis buchberger(const std::vector<MultiForm>& input, int nvars,
                         bool track = false);

struct NormalFormResult {
  MultiForm remainder;
  std::vector<MultiForm> cofactors;  // over B.gens, filled when tracked
};

// Multivariate division: g = sum cofactors[j]*B.gens[j] + remainder, with
// no remainder monomial divisible by any leading term.
NormalFormResult normalForm(const MultiForm& g, const GroebnerBasis& basis,
                            bool trackCofactors = false);

bool idealContains(const GroebnerBasis& basis, const MultiForm& g);

struct EmptinessResult {
  bool empty;
  // Minimal exponents m_k with x_k^{m_k} in the ideal; filled iff empty.
  std::vector<long> exponents;
};

// Projective emptiness of V(generators) in P^(nvars-1). The verdict is
// decided exactly from the initial ideal (each variable must have a pure
// power among the leading terms); the minimal exponents are then found by
// upward search, which throws InconclusiveError past the cap.
// cap <= 0 selects the default max(1, 2 * sum of generator degrees).
EmptinessResult projectiveEmpty(const std::vector<MultiForm>& generators,
                                int nvars, long cap = 0);

// Dimension of V(generators) as a projective variety: the combinatorial
// dimension of the initial ideal minus one. Throws PreconditionError on
// the empty variety.
int projectiveDimension(const std::vector<MultiForm>& generators, int nvars);

struct GeneralPositionResult {
  bool ok;
  std::vector<int> witness;  // indices of a failing (n+1)-subset
};

// Every (n+1)-subset of the forms must meet X in the empty set.
// Throws PreconditionError when fewer than n+1 forms are supplied.
GeneralPositionResult generalPosition(const VarietyContext& x,
                                      const std::vector<MultiForm>& forms,
                                      long cap = 0);

// The data behind the key inequality of the defect-relation proof:
// Delta = lcm of the degrees, G_i = Q_i^(Delta/d_i), and per variable k
// an exponent m_k >= Delta with
//     x_k^{m_k} = sum_i b_ik * G_i   on X,
// b_ik homogeneous of degree m_k - Delta. logConstant is the canonical
// realization of the constant: max over all coefficients c of the b_ik
// of -v_p(c), so that
//     Delta * T_f(s) <= logConstant + max_i log|G_i o f|_s.
struct NullstellensatzCertificate {
  long delta;
  std::vector<MultiForm> g;               // n+1 forms of degree Delta
  std::vector<long> exponents;            // m_k, k = 0..N
  std::vector<std::vector<MultiForm>> b;  // b[k][i]
  Rat logConstant;
};

// Computes and verifies the certificate (the identity is re-checked by
// reduction modulo the X-ideal; an unverifiable certificate is never
// returned). Throws PreconditionError if the forms are not in general
// position with X, InconclusiveError past the exponent cap.
NullstellensatzCertificate nullstellensatzCertificate(
    const VarietyContext& x, const std::vector<MultiForm>& q, const Int& p,
    long cap = 0);

// Checks Delta * max_k log|f_k|_s <= logConstant + max_i log|G_i o f|_s
// exactly at each sample. A false return is a verdict, not an error.
bool verifyCertificateOnCurve(const NullstellensatzCertificate& cert,
                              const AnalyticCurve& f, const Int& p,
                              const std::vector<Rat>& samples);

long defaultExponentCap(const std::vector<MultiForm>& generators);

}  // namespace nevk

#endif  // NEVK_GROEBNER_HPP
