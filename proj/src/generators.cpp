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

#include "ssg/generators.hpp"

#include <stdexcept>

namespace ssg {

namespace {

SimpleStochasticGame blank_game(int n, int r) {
  SimpleStochasticGame g;
  g.n = n;
  g.r = r;
  g.kinds.assign(n + 1, PositionKind::GOAL);
  g.successors.assign(n + 1, {0, 0});
  return g;
}

}  // namespace

SimpleStochasticGame gen_extremal(int n, int r) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("gen_extremal requires 1 <= r <= n");
  }
  SimpleStochasticGame g = blank_game(n, r);
  // Coin chain with reset-to-top: tails steps down, heads restarts at r.
  g.kinds[1] = PositionKind::AVE;
  g.successors[1] = {kGoal, r};
  for (int i = 2; i <= r; ++i) {
    g.kinds[i] = PositionKind::AVE;
    g.successors[i] = {i - 1, r};
  }
  for (int i = r + 1; i <= n; ++i) {
    g.kinds[i] = PositionKind::MIN;
    g.successors[i] = {kGoal, kGoal};
  }
  return g;
}

SimpleStochasticGame gen_chain(int n, int r) {
  if (n < 1 || r < 0 || r > n) {
    throw std::invalid_argument("gen_chain requires 0 <= r <= n, n >= 1");
  }
  SimpleStochasticGame g = blank_game(n, r);
  for (int i = 1; i <= n; ++i) {
    g.kinds[i] = i <= r ? PositionKind::AVE : PositionKind::MIN;
    g.successors[i] = {i - 1, i - 1};
  }
  return g;
}

SimpleStochasticGame gen_random(int n, int r, int max_count, int min_count,
                                std::uint64_t seed) {
  if (n < 1 || r < 0 || max_count < 0 || min_count < 0 ||
      max_count + min_count + r != n) {
    throw std::invalid_argument(
        "gen_random requires max_count + min_count + r == n with "
        "nonnegative counts and n >= 1");
  }
  SimpleStochasticGame g = blank_game(n, r);
  for (int i = 1; i <= n; ++i) {
    if (i <= max_count) {
      g.kinds[i] = PositionKind::MAX;
    } else if (i <= max_count + min_count) {
      g.kinds[i] = PositionKind::MIN;
    } else {
      g.kinds[i] = PositionKind::AVE;
    }
  }
  SplitMix64 rng(seed);
  for (int i = 1; i <= n; ++i) {
    for (int slot = 0; slot < 2; ++slot) {
      g.successors[i][slot] =
          static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) + 1));
    }
  }
  return g;
}

}  // namespace ssg
