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

#ifndef SSG_DYADIC_HPP_
#define SSG_DYADIC_HPP_

#include <gmpxx.h>

#include <string>

namespace ssg {

/**
 * An exact dyadic rational m / 2^p with m >= 0 and p >= 0, the number
 * representation used by the iterative solver. The mantissa is an
 * unbounded integer, so no precision is ever lost silently: every
 * rounding step in the solver is an explicit floor.
 *
 * Mantissas are not normalized (8/2^4 keeps precision 4); equality and
 * ordering compare the represented numbers, not the representations.
 */
class Dyadic {
 public:
  /// Zero at precision 0.
  Dyadic() : mantissa_(0), precision_(0) {}
  Dyadic(mpz_class mantissa, int precision);

  static Dyadic zero(int precision) { return Dyadic(0, precision); }
  /// One at the given precision, i.e. mantissa 2^p.
  static Dyadic one(int precision);
  /// Largest dyadic with the given precision that is <= x; x must be >= 0.
  static Dyadic floor_of(const mpq_class& x, int precision);

  const mpz_class& mantissa() const { return mantissa_; }
  int precision() const { return precision_; }

  /// Same number at a higher (or equal) precision.
  Dyadic rescaled(int precision) const;
  mpq_class to_rational() const;
  bool is_zero() const { return mantissa_ == 0; }

  /// Diagnostic form "<mantissa>p<precision>", e.g. "3p3" for 3/8.
  std::string to_string() const;

  /// Three-way numeric comparison; mixed precisions are aligned first.
  static int compare(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) != 0;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) {
    return compare(a, b) >= 0;
  }

 private:
  mpz_class mantissa_;
  int precision_;
};

/**
 * (a + b) / 2 rounded down to the operands' shared precision p:
 * mantissa floor((m_a + m_b) / 2). The rounding error is < 2^-p.
 * Throws std::invalid_argument("precision mismatch") if the precisions
 * differ.
 */
Dyadic avg_floor(const Dyadic& a, const Dyadic& b);

/**
 * (a + b) / 2 exactly; the result has precision p + 1. Same precision
 * precondition as avg_floor.
 */
Dyadic exact_avg(const Dyadic& a, const Dyadic& b);

}  // namespace ssg

#endif  // SSG_DYADIC_HPP_
