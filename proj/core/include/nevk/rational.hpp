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

#ifndef NEVK_RATIONAL_HPP
#define NEVK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "nevk/errors.hpp"

namespace nevk {

// Exact arbitrary-precision rationals. GMP keeps them canonical
// (coprime numerator/denominator, positive denominator); every helper
// below preserves that.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical fraction n/d (mpq_class does not reduce on construction).
inline Rat ratOf(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "a" or "a/b" with optional sign. Throws ParseError on bad syntax
// or zero denominator.
Rat ratFromString(const std::string& text);

// "a" when integral, "a/b" otherwise.
std::string ratToString(const Rat& q);

bool isPrime(const Int& n);

// p-adic valuation with the distinguished value v(0) = +infinity.
// Totally ordered with +infinity maximal.
class Valuation {
 public:
  Valuation() : infinite_(true) {}  // +infinity
  explicit Valuation(Rat v) : infinite_(false), value_(std::move(v)) {}
  static Valuation infinity() { return Valuation(); }

  bool isInfinite() const { return infinite_; }
  // Only meaningful for finite valuations.
  const Rat& value() const {
    if (infinite_) throw DomainError("value() of infinite valuation");
    return value_;
  }

  Valuation operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return Valuation(value_ + o.value_);
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) {
    return a < b || a == b;
  }

  friend Valuation min(const Valuation& a, const Valuation& b) {
    return a < b ? a : b;
  }

 private:
  bool infinite_;
  Rat value_;
};

// v_p of a nonzero integer (the exponent of p in n).
long intValuation(Int n, const Int& p);

// v_p(a) = v_p(num) - v_p(den); +infinity iff a == 0.
// Throws ConfigError when p is not prime.
Valuation valuation(const Rat& a, const Int& p);

}  // namespace nevk

#endif  // NEVK_RATIONAL_HPP
