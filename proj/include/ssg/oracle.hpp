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

#ifndef SSG_ORACLE_HPP_
#define SSG_ORACLE_HPP_

#include <cstdint>

#include "ssg/errors.hpp"
#include "ssg/game.hpp"
#include "ssg/rational.hpp"

namespace ssg {

struct OracleLimits {
  /// enumerate_values refuses when |Max positions| + |Min positions|
  /// exceeds this many bits, i.e. more than 2^20 strategy pairs.
  int max_strategy_bits = 20;
};

/**
 * Exact value of every position when both players fix the given
 * positional strategies. The induced process is a Markov chain; the
 * values solve, by exact rational elimination, the linear system over
 * the coin positions after (a) zeroing every position that cannot reach
 * GOAL under the fixed arcs and (b) collapsing deterministic runs of
 * player positions onto the coin/terminal they feed into.
 */
RationalVector eval_strategy_pair(const SimpleStochasticGame& game,
                                  const PositionalStrategy& max_strategy,
                                  const PositionalStrategy& min_strategy);

/**
 * Exact game values by brute force: max over Max strategies of the
 * componentwise min over Min strategies of eval_strategy_pair. Cost is
 * 2^(|V_max| + |V_min|) chain solves; guarded by limits (throws
 * resource_limit_error). Independent of the iterative solver by design:
 * it shares no value computation with it, only the game type.
 *
 * Strategy codes are enumerated with position i's slot in bit i of the
 * code (Max and Min positions each taken in ascending id order).
 */
RationalVector enumerate_values(const SimpleStochasticGame& game,
                                const OracleLimits& limits = {});

/// Single-threaded reference for enumerate_values; the parallel version
/// must agree with it exactly on every input.
RationalVector enumerate_values_serial(const SimpleStochasticGame& game,
                                       const OracleLimits& limits = {});

/**
 * The r-step Fibonacci numbers: F_m = 0 for m <= 0, F_1 = F_2 = 1, and
 * F_m = sum of the r preceding terms for m >= 3. (For r = 1, F_m = 1
 * for all m >= 1; r = 0 is rejected.)
 */
mpz_class fib_r_step(std::int64_t m, int r);

/**
 * Probability that t fair coin tosses contain a run of r consecutive
 * tails, computed as 1 - F^(r)_{t+2} / 2^t with F the r-step Fibonacci
 * sequence.
 */
Rational tails_run_prob(std::int64_t t, int r);

}  // namespace ssg

#endif  // SSG_ORACLE_HPP_
