// Copyright 2026 The ssgsolve Authors
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

#ifndef SSG_RATIONAL_HPP_
#define SSG_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ssg/dyadic.hpp"

namespace ssg {

/// Exact rational number, always kept in lowest terms by GMP.
using Rational = mpq_class;

/// A per-position vector of exact values, indexed 0..n (slot 0 = GOAL).
using RationalVector = std::vector<Rational>;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// "<num>/<den>" in lowest terms; integers keep the "/1" (e.g. "1/1").
std::string format_rational(const Rational& q);

/**
 * The smallest rational a/b >= v with 1 <= b <= max_denominator, for
 * v in [0, 1]. Found by walking v's continued fraction: of the two
 * best approximations with denominator <= max_denominator, one is on
 * each side of v, and the upper one is the answer. If v itself fits
 * the denominator bound it is returned unchanged.
 *
 * This recovers the exact value of a position from a sufficiently
 * close dyadic approximation: if the true value has denominator <= q
 * and |v - true| < 1/(q*(q-1)), the result *is* the true value.
 */
Rational min_rational_geq(const Dyadic& v, const mpz_class& max_denominator);

}  // namespace ssg

#endif  // SSG_RATIONAL_HPP_
