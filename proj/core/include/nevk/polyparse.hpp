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

#ifndef NEVK_POLYPARSE_HPP
#define NEVK_POLYPARSE_HPP

#include <string>

#include "nevk/forms.hpp"
#include "nevk/series.hpp"

namespace nevk {

// Grammar (both parsers): rationals "a" / "a/b", operators + - * ^,
// parentheses, unary minus. No implicit multiplication.

// Variables x0..xN with nvars = N+1; exponents must be nonnegative.
// Homogeneity is the caller's check (error messages carry field paths).
MultiForm parseForm(const std::string& text, int nvars);

// Variable z; z^-k (equivalently via parenthesized negative exponents)
// is accepted only when laurent is true.
Series parseSeries(const std::string& text, bool laurent);

}  // namespace nevk

#endif  // NEVK_POLYPARSE_HPP
