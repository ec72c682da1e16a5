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

#ifndef SSG_GENERATORS_HPP_
#define SSG_GENERATORS_HPP_

#include <cstdint>

#include "ssg/game.hpp"

namespace ssg {

/**
 * SplitMix64: the fixed, documented generator behind gen_random, so a
 * seed reproduces the same game on every platform. Reference: Steele,
 * Lea & Flood, "Fast splittable pseudorandom number generators" (2014).
 */
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., bound-1} by modulo (bias is irrelevant
  /// at game sizes; determinism is what matters here).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/**
 * The slow-convergence family: coins 1..r form a chain where coin 1
 * goes to {GOAL, r} and coin i >= 2 goes to {i-1, r}, and positions
 * r+1..n are Min positions with both arcs to GOAL. Every position is
 * worth 1, yet after t averaging steps the value of position r is
 * exactly the probability that t tosses contain a run of r tails —
 * the family that pins the EXTREMAL iteration budget.
 * Requires 1 <= r <= n.
 */
SimpleStochasticGame gen_extremal(int n, int r);

/**
 * A deterministic chain walking down to GOAL: position i has both arcs
 * to i-1 and is a coin for i <= r, a Min position for i > r. Every
 * value is 1. Scales to large n, which makes it the benchmark family
 * and a stress case for classical value iteration (the 1 takes n steps
 * to propagate). Requires 0 <= r <= n, n >= 1.
 */
SimpleStochasticGame gen_chain(int n, int r);

/**
 * A pseudorandom game with the given position counts (ids: Max first,
 * then Min, then coins) whose 2n successors are independent uniform
 * draws from {0, ..., n}, in id order, slot 0 before slot 1, using
 * SplitMix64(seed). Requires max_count + min_count + r == n, counts
 * >= 0, n >= 1.
 */
SimpleStochasticGame gen_random(int n, int r, int max_count, int min_count,
                                std::uint64_t seed);

}  // namespace ssg

#endif  // SSG_GENERATORS_HPP_
