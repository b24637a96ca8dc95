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

#include "nevk/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "nevk/errors.hpp"
#include "nevk/newton.hpp"

namespace nevk {

namespace {

struct Work {
  MultiForm poly;
  std::vector<MultiForm> cof;  // over the original input list
};

// Full division of h by the current working set, updating cofactors.
void reduceFully(Work& h, const std::vector<Work>& reducers, bool track) {
  MultiForm rem(h.poly.nvars());
  while (!h.poly.isZero()) {
    const auto& [lm, lc] = h.poly.leadingTerm();
    bool reduced = false;
    for (const auto& r : reducers) {
      if (r.poly.isZero()) continue;
      const auto& [rlm, rlc] = r.poly.leadingTerm();
      if (!monomialDivides(rlm, lm)) continue;
      MultiForm q = MultiForm::term(h.poly.nvars(),
                                    monomialQuotient(lm, rlm), lc / rlc);
      h.poly = h.poly - q * r.poly;
      if (track)
        for (std::size_t j = 0; j < h.cof.size(); ++j)
          h.cof[j] = h.cof[j] - q * r.cof[j];
      reduced = true;
      break;
    }
    if (!reduced) {
      // move the leading monomial to the remainder
      rem.addTerm(lm, lc);
      h.poly = h.poly - MultiForm::term(h.poly.nvars(), lm, lc);
    }
  }
  h.poly = std::move(rem);
}

Work sPolynomial(const Work& f, const Work& g, bool track) {
  const auto& [lf, cf] = f.poly.leadingTerm();
  const auto& [lg, cg] = g.poly.leadingTerm();
  Exponents u = monomialLcm(lf, lg);
  MultiForm mf =
      MultiForm::term(f.poly.nvars(), monomialQuotient(u, lf), Rat(1) / cf);
  MultiForm mg =
      MultiForm::term(f.poly.nvars(), monomialQuotient(u, lg), Rat(1) / cg);
  Work s{mf * f.poly - mg * g.poly, {}};
  if (track) {
    s.cof.resize(f.cof.size(), MultiForm::zero(f.poly.nvars()));
    for (std::size_t j = 0; j < f.cof.size(); ++j)
      s.cof[j] = mf * f.cof[j] - mg * g.cof[j];
  }
  return s;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiForm>& input, int nvars,
                         bool track) {
  for (const auto& f : input) {
    if (static_cast<int>(f.nvars()) != nvars)
      throw ShapeError("generator variable count mismatch");
    if (!f.isHomogeneous())
      throw ShapeError("Buchberger input must be homogeneous");
  }
  const std::size_t nin = input.size();
  std::vector<Work> basis;
  for (std::size_t i = 0; i < nin; ++i) {
    if (input[i].isZero()) continue;
    Work w{input[i], {}};
    if (track) {
      w.cof.resize(nin, MultiForm::zero(nvars));
      w.cof[i] = MultiForm::constantOne(nvars);
    }
    basis.push_back(std::move(w));
  }

  // Pair queue: (degree of lcm, i, j), normal selection strategy.
  using PairKey = std::tuple<int, std::size_t, std::size_t>;
  std::set<PairKey> pairs;
  auto pushPairs = [&](std::size_t upTo) {
    for (std::size_t i = 0; i < upTo; ++i) {
      Exponents u = monomialLcm(basis[i].poly.leadingTerm().first,
                                basis[upTo].poly.leadingTerm().first);
      pairs.insert({totalDegree(u), i, upTo});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) pushPairs(k);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const auto& li = basis[i].poly.leadingTerm().first;
    const auto& lj = basis[j].poly.leadingTerm().first;
    // coprime leading monomials: the S-polynomial reduces to zero
    Exponents u = monomialLcm(li, lj);
    if (totalDegree(u) == totalDegree(li) + totalDegree(lj)) continue;
    Work s = sPolynomial(basis[i], basis[j], track);
    reduceFully(s, basis, track);
    if (s.poly.isZero()) continue;
    basis.push_back(std::move(s));
    pushPairs(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by
  // another surviving one.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (monomialDivides(basis[j].poly.leadingTerm().first,
                          basis[i].poly.leadingTerm().first) &&
          (j < i || basis[j].poly.leadingTerm().first !=
                        basis[i].poly.leadingTerm().first)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Work> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce each against the others and make monic.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Work> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // leading term survives (it is not divisible by any other), the tail
    // gets fully reduced
    reduceFully(minimal[i], others, track);
    Rat lc = minimal[i].poly.leadingTerm().second;
    minimal[i].poly = (Rat(1) / lc) * minimal[i].poly;
    if (track)
      for (auto& c : minimal[i].cof) c = (Rat(1) / lc) * c;
  }

  std::sort(minimal.begin(), minimal.end(), [](const Work& a, const Work& b) {
    return GrevlexLess{}(a.poly.leadingTerm().first,
                         b.poly.leadingTerm().first);
  });

  GroebnerBasis out;
  out.nvars = nvars;
  out.tracked = track;
  for (auto& w : minimal) {
    out.gens.push_back(std::move(w.poly));
    if (track) out.cofactors.push_back(std::move(w.cof));
  }
  return out;
}

NormalFormResult normalForm(const MultiForm& g, const GroebnerBasis& basis,
                            bool trackCofactors) {
  NormalFormResult res{MultiForm::zero(basis.nvars), {}};
  if (trackCofactors)
    res.cofactors.resize(basis.gens.size(), MultiForm::zero(basis.nvars));
  MultiForm h = g;
  while (!h.isZero()) {
    const auto lm = h.leadingTerm().first;
    const Rat lc = h.leadingTerm().second;
    bool reduced = false;
    for (std::size_t j = 0; j < basis.gens.size(); ++j) {
      const auto& [rlm, rlc] = basis.gens[j].leadingTerm();
      if (!monomialDivides(rlm, lm)) continue;
      MultiForm q =
          MultiForm::term(basis.nvars, monomialQuotient(lm, rlm), lc / rlc);
      h = h - q * basis.gens[j];
      if (trackCofactors) res.cofactors[j] = res.cofactors[j] + q;
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.addTerm(lm, lc);
      h = h - MultiForm::term(basis.nvars, lm, lc);
    }
  }
  return res;
}

bool idealContains(const GroebnerBasis& basis, const MultiForm& g) {
  return normalForm(g, basis).remainder.isZero();
}

long defaultExponentCap(const std::vector<MultiForm>& generators) {
  long sum = 0;
  for (const auto& g : generators)
    if (!g.isZero()) sum += g.degree();
  return std::max<long>(1, 2 * sum);
}

EmptinessResult projectiveEmpty(const std::vector<MultiForm>& generators,
                                int nvars, long cap) {
  GroebnerBasis basis = buchberger(generators, nvars);
  if (cap <= 0) cap = defaultExponentCap(generators);
  // V(I) is projectively empty iff the affine cone is {0}, i.e. each
  // variable has a pure power among the leading monomials.
  for (int k = 0; k < nvars; ++k) {
    bool found = false;
    for (const auto& g : basis.gens) {
      const Exponents& lm = g.leadingTerm().first;
      bool pure = lm[static_cast<std::size_t>(k)] > 0;
      for (int j = 0; j < nvars && pure; ++j)
        if (j != k && lm[static_cast<std::size_t>(j)] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return {false, {}};
  }
  // Minimal exponents by upward search; existence is guaranteed, the cap
  // only guards against runaway degrees.
  std::vector<long> exps;
  for (int k = 0; k < nvars; ++k) {
    long m = 1;
    for (;; ++m) {
      if (m > cap)
        throw InconclusiveError(
            "power of x" + std::to_string(k) +
                " not found up to cap; raise --cap",
            cap);
      Exponents e(static_cast<std::size_t>(nvars), 0);
      e[static_cast<std::size_t>(k)] = static_cast<int>(m);
      if (idealContains(basis, MultiForm::term(nvars, e, Rat(1)))) break;
    }
    exps.push_back(m);
  }
  return {true, std::move(exps)};
}

int projectiveDimension(const std::vector<MultiForm>& generators, int nvars) {
  GroebnerBasis basis = buchberger(generators, nvars);
  std::vector<Exponents> lms;
  for (const auto& g : basis.gens) lms.push_back(g.leadingTerm().first);
  // Combinatorial dimension of the initial ideal: the largest variable
  // subset S such that no leading monomial is supported inside S.
  int best = -1;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    bool independent = true;
    for (const auto& lm : lms) {
      bool inside = true;
      for (int j = 0; j < nvars && inside; ++j)
        if (lm[static_cast<std::size_t>(j)] > 0 && !(mask & (1u << j)))
          inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  int projDim = best - 1;
  if (projDim < 0)
    throw PreconditionError("projective dimension of the empty variety");
  return projDim;
}

GeneralPositionResult generalPosition(const VarietyContext& x,
                                      const std::vector<MultiForm>& forms,
                                      long cap) {
  const int n = x.dimension;
  const int q = static_cast<int>(forms.size());
  if (q < n + 1)
    throw PreconditionError("general position needs q >= n+1 = " +
                            std::to_string(n + 1) + " hypersurfaces, got " +
                            std::to_string(q));
  std::vector<int> idx(static_cast<std::size_t>(n + 1));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<MultiForm> gens = x.generators;
    for (int i : idx) gens.push_back(forms[static_cast<std::size_t>(i)]);
    if (!projectiveEmpty(gens, x.ambientDim + 1, cap).empty)
      return {false, idx};
    // next combination
    int i = n;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == q - (n + 1) + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= n; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {true, {}};
}

NullstellensatzCertificate nullstellensatzCertificate(
    const VarietyContext& x, const std::vector<MultiForm>& q, const Int& p,
    long cap) {
  if (!isPrime(p)) throw ConfigError("p = " + p.get_str() + " is not prime");
  if (q.empty()) throw PreconditionError("no forms supplied");
  const int nvars = x.ambientDim + 1;

  long delta = 1;
  for (const auto& f : q) delta = std::lcm(delta, static_cast<long>(f.degree()));
  std::vector<MultiForm> g;
  for (const auto& f : q) g.push_back(formPow(f, delta / f.degree()));

  std::vector<MultiForm> ideal = x.generators;
  ideal.insert(ideal.end(), g.begin(), g.end());
  if (cap <= 0) cap = std::max(delta, defaultExponentCap(ideal));

  if (!projectiveEmpty(ideal, nvars, cap).empty)
    throw PreconditionError(
        "forms do not cut X down to the empty set (general position fails "
        "for this subset)");

  GroebnerBasis tracked = buchberger(ideal, nvars, /*track=*/true);
  GroebnerBasis xBasis = buchberger(x.generators, nvars);

  NullstellensatzCertificate cert;
  cert.delta = delta;
  cert.g = g;
  const std::size_t nx = x.generators.size();

  bool anyCoefficient = false;
  Rat logC(0);
  for (int k = 0; k < nvars; ++k) {
    long m = delta;
    NormalFormResult nf{MultiForm::zero(nvars), {}};
    for (;; ++m) {
      if (m > cap)
        throw InconclusiveError("certificate exponent for x" +
                                    std::to_string(k) + " exceeds cap",
                                cap);
      Exponents e(static_cast<std::size_t>(nvars), 0);
      e[static_cast<std::size_t>(k)] = static_cast<int>(m);
      nf = normalForm(MultiForm::term(nvars, e, Rat(1)), tracked,
                      /*track=*/true);
      if (nf.remainder.isZero()) break;
    }
    // Compose: cofactors over basis elements -> over original generators;
    // the X-generator part is discarded (the identity holds on X).
    std::vector<MultiForm> bk(g.size(), MultiForm::zero(nvars));
    for (std::size_t j = 0; j < tracked.gens.size(); ++j) {
      if (nf.cofactors[j].isZero()) continue;
      for (std::size_t i = 0; i < g.size(); ++i)
        bk[i] = bk[i] + nf.cofactors[j] * tracked.cofactors[j][nx + i];
    }
    // Homogeneous data in, homogeneous cofactors out; the component
    // extraction is a checked no-op.
    for (std::size_t i = 0; i < bk.size(); ++i) {
      MultiForm comp = bk[i].homogeneousComponent(static_cast<int>(m - delta));
      if (!(comp == bk[i]))
        throw InvariantViolation("inhomogeneous certificate cofactor");
      bk[i] = std::move(comp);
    }
    // Verify: x_k^m - sum b_ik G_i lies in the ideal of X.
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k)] = static_cast<int>(m);
    MultiForm check = MultiForm::term(nvars, e, Rat(1));
    for (std::size_t i = 0; i < g.size(); ++i) check = check - bk[i] * g[i];
    if (!idealContains(xBasis, check))
      throw InvariantViolation("certificate identity failed verification");

    for (const auto& f : bk)
      for (const auto& [mono, c] : f.terms()) {
        Rat nv = -valuation(c, p).value();
        if (!anyCoefficient || nv > logC) logC = nv;
        anyCoefficient = true;
      }
    cert.exponents.push_back(m);
    cert.b.push_back(std::move(bk));
  }
  cert.logConstant = anyCoefficient ? logC : Rat(0);
  return cert;
}

bool verifyCertificateOnCurve(const NullstellensatzCertificate& cert,
                              const AnalyticCurve& f, const Int& p,
                              const std::vector<Rat>& samples) {
  for (const Rat& s : samples) {
    bool haveLhs = false, haveRhs = false;
    Rat lhs(0), rhs(0);
    for (const auto& comp : f.components) {
      if (comp.isZero()) continue;
      Rat v = gaussNormPL(comp, p)(s);
      if (!haveLhs || v > lhs) lhs = v;
      haveLhs = true;
    }
    for (const auto& gi : cert.g) {
      Series gof = formEvaluate(gi, f);
      if (gof.isZero()) continue;
      Rat v = gaussNormPL(gof, p)(s);
      if (!haveRhs || v > rhs) rhs = v;
      haveRhs = true;
    }
    if (!haveLhs) throw PreconditionError("zero curve");
    if (!haveRhs) return false;  // all G_i vanish along the curve
    if (!(Rat(cert.delta) * lhs <= cert.logConstant + rhs)) return false;
  }
  return true;
}

}  // namespace nevk
