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

#include "ssg/rational.hpp"

#include <stdexcept>

namespace ssg {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational min_rational_geq(const Dyadic& v, const mpz_class& max_denominator) {
  if (max_denominator < 1) {
    throw std::invalid_argument("max_denominator must be >= 1");
  }
  Rational value = v.to_rational();
  if (value < 0 || value > 1) {
    throw std::invalid_argument("value outside [0, 1]");
  }
  if (value.get_den() <= max_denominator) {
    return value;
  }

  // Walk the continued fraction of value, keeping the last two
  // convergents p0/q0 and p1/q1 whose denominators fit the bound.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class num = value.get_num(), den = value.get_den();
  while (true) {
    mpz_class a = num / den;
    mpz_class q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    mpz_class next_p1 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = next_p1;
    q1 = q2;
    mpz_class rem = num - a * den;
    num = den;
    den = rem;
  }
  // The two best approximations with denominator <= bound straddle
  // value; the answer is the one above it.
  mpz_class k = (max_denominator - q0) / q1;
  Rational side = make_rational(p0 + k * p1, q0 + k * q1);
  Rational convergent = make_rational(p1, q1);
  return side > value ? side : convergent;
}

}  // namespace ssg
