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

#include "nevk/rational.hpp"

#include <cctype>

namespace nevk {

Rat ratFromString(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  // Validate shape before handing to GMP: [+-]digits[/digits]
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0)
    throw ParseError("bad rational literal '" + text + "'", static_cast<int>(i));
  if (i < text.size()) {
    if (text[i] != '/')
      throw ParseError("bad rational literal '" + text + "'",
                       static_cast<int>(i));
    ++i;
    std::size_t den = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den;
    }
    if (den == 0 || i != text.size())
      throw ParseError("bad rational literal '" + text + "'",
                       static_cast<int>(i));
  }
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw ParseError("bad rational literal '" + text + "'");
  if (q.get_den() == 0)
    throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string ratToString(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool isPrime(const Int& n) {
  if (n < 2) return false;
  // 50 Miller-Rabin rounds; GMP returns 2 for proven primes, 1 for
  // probable primes (error < 4^-50, beyond reach for scenario-sized p).
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

long intValuation(Int n, const Int& p) {
  if (n == 0) throw DomainError("intValuation of zero");
  long v = 0;
  Int q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    n = q;
    ++v;
  }
}

Valuation valuation(const Rat& a, const Int& p) {
  if (!isPrime(p)) throw ConfigError("p = " + p.get_str() + " is not prime");
  if (a == 0) return Valuation::infinity();
  long v = intValuation(a.get_num(), p) - intValuation(a.get_den(), p);
  return Valuation(Rat(v));
}

}  // namespace nevk
