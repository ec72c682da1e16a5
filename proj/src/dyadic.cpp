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

#include "ssg/dyadic.hpp"

#include <stdexcept>
#include <utility>

namespace ssg {

Dyadic::Dyadic(mpz_class mantissa, int precision)
    : mantissa_(std::move(mantissa)), precision_(precision) {
  if (precision_ < 0) throw std::invalid_argument("negative precision");
  if (mantissa_ < 0) throw std::invalid_argument("negative mantissa");
}

Dyadic Dyadic::one(int precision) {
  mpz_class m = 1;
  m <<= precision;
  return Dyadic(std::move(m), precision);
}

Dyadic Dyadic::floor_of(const mpq_class& x, int precision) {
  if (x < 0) throw std::invalid_argument("negative value");
  mpz_class scaled = x.get_num() << precision;
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  return Dyadic(std::move(m), precision);
}

Dyadic Dyadic::rescaled(int precision) const {
  if (precision < precision_) {
    throw std::invalid_argument("rescale cannot lower precision");
  }
  return Dyadic(mantissa_ << (precision - precision_), precision);
}

mpq_class Dyadic::to_rational() const {
  mpz_class den = 1;
  den <<= precision_;
  mpq_class q(mantissa_, den);
  q.canonicalize();
  return q;
}

std::string Dyadic::to_string() const {
  return mantissa_.get_str() + "p" + std::to_string(precision_);
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
  if (a.precision_ == b.precision_) {
    return cmp(a.mantissa_, b.mantissa_);
  }
  if (a.precision_ < b.precision_) {
    mpz_class lifted = a.mantissa_ << (b.precision_ - a.precision_);
    return cmp(lifted, b.mantissa_);
  }
  mpz_class lifted = b.mantissa_ << (a.precision_ - b.precision_);
  return cmp(a.mantissa_, lifted);
}

Dyadic avg_floor(const Dyadic& a, const Dyadic& b) {
  if (a.precision() != b.precision()) {
    throw std::invalid_argument("precision mismatch");
  }
  mpz_class sum = a.mantissa() + b.mantissa();
  return Dyadic(sum >> 1, a.precision());
}

Dyadic exact_avg(const Dyadic& a, const Dyadic& b) {
  if (a.precision() != b.precision()) {
    throw std::invalid_argument("precision mismatch");
  }
  return Dyadic(a.mantissa() + b.mantissa(), a.precision() + 1);
}

}  // namespace ssg
