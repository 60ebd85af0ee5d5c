// Copyright 2026 The bpfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Principal branch of Lambert's W on the nonnegative reals: the inverse of
// u(w) = w e^w on [0, inf).

#include "bpfree/interval.hpp"

namespace bpfree {

// Enclosure of W(x) of width at most 2^(1-precision) for an exact x >= 0.
// Throws std::domain_error for x < 0.
DyadicInterval lambert_w(const Rational& x, unsigned long precision = 64);

// Enclosure of W over the whole input interval (W is increasing, so this is
// [W(lo), W(hi)] rounded outward). Throws std::domain_error if lo < 0.
DyadicInterval lambert_w(const DyadicInterval& x, unsigned long precision = 64);

// b * W(n / (b * r^(1/b))). Throws std::domain_error for b <= 0.
DyadicInterval delta(const Rational& b, const DyadicInterval& n, const Integer& r, unsigned long precision = 64);
DyadicInterval delta(const Rational& b, const Integer& n, const Integer& r, unsigned long precision = 64);

// r^(1/b) for a positive rational b and integer r >= 1.
DyadicInterval rational_root(const Integer& r, const Rational& b, mpfr_prec_t bits);

}  // namespace bpfree
