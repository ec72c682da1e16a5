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

#include "ssg/oracle.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ssg {

namespace {

// Resolution codes for positions in the induced chain: a non-negative
// code is a coin ordinal, the rest are fixed values.
constexpr int kOne = -1;
constexpr int kZero = -2;
constexpr int kUnresolved = -3;

}  // namespace

RationalVector eval_strategy_pair(const SimpleStochasticGame& game,
                                  const PositionalStrategy& max_strategy,
                                  const PositionalStrategy& min_strategy) {
  const int n = game.n;

  // Induced arcs: players keep only the chosen successor.
  std::vector<int> chosen(n + 1, -1);
  for (int u = 1; u <= n; ++u) {
    if (game.kinds[u] == PositionKind::MAX) {
      chosen[u] = game.successors[u][max_strategy.slot(u)];
    } else if (game.kinds[u] == PositionKind::MIN) {
      chosen[u] = game.successors[u][min_strategy.slot(u)];
    }
  }

  // Predecessor CSR of the induced chain, then backward reachability:
  // anything that cannot reach GOAL is absorbed with value 0.
  std::vector<std::int32_t> off(n + 2, 0);
  auto each_arc = [&](auto&& f) {
    for (int u = 1; u <= n; ++u) {
      if (chosen[u] >= 0) {
        f(u, chosen[u]);
      } else {
        f(u, game.successors[u][0]);
        f(u, game.successors[u][1]);
      }
    }
  };
  each_arc([&](int, int v) { ++off[v + 1]; });
  for (int v = 0; v <= n; ++v) off[v + 1] += off[v];
  std::vector<std::int32_t> preds(off[n + 1]);
  {
    std::vector<std::int32_t> cursor(off.begin(), off.end() - 1);
    each_arc([&](int u, int v) { preds[cursor[v]++] = u; });
  }
  std::vector<char> reach(n + 1, 0);
  std::vector<std::int32_t> queue;
  queue.reserve(n + 1);
  reach[kGoal] = 1;
  queue.push_back(kGoal);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (std::int32_t e = off[v]; e < off[v + 1]; ++e) {
      if (!reach[preds[e]]) {
        reach[preds[e]] = 1;
        queue.push_back(preds[e]);
      }
    }
  }

  // Collapse deterministic player runs onto what they feed into.
  std::vector<int> res(n + 1, kUnresolved);
  std::vector<int> ordinal(n + 1, -1);
  std::vector<int> coins;
  res[kGoal] = kOne;
  for (int u = 1; u <= n; ++u) {
    if (!reach[u]) {
      res[u] = kZero;
    } else if (game.kinds[u] == PositionKind::AVE) {
      ordinal[u] = static_cast<int>(coins.size());
      res[u] = ordinal[u];
      coins.push_back(u);
    }
  }
  std::vector<int> path;
  for (int u = 1; u <= n; ++u) {
    if (res[u] != kUnresolved) continue;
    path.clear();
    int cur = u;
    // Reachable player runs are acyclic (a chosen-arc cycle could
    // never reach GOAL), so this walk always exits.
    while (res[cur] == kUnresolved) {
      path.push_back(cur);
      cur = chosen[cur];
    }
    for (int p : path) res[p] = res[cur];
  }

  // Exact linear system over the reachable coins: u_c = average of the
  // resolved successor values. Eliminate with the first nonzero pivot.
  const int m = static_cast<int>(coins.size());
  const Rational half(1, 2);
  std::vector<std::vector<Rational>> a(
      m, std::vector<Rational>(m, Rational(0)));
  std::vector<Rational> b(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    a[i][i] = 1;
    for (int slot = 0; slot < 2; ++slot) {
      int code = res[game.successors[coins[i]][slot]];
      if (code == kOne) {
        b[i] += half;
      } else if (code >= 0) {
        a[i][code] -= half;
      }
    }
  }
  for (int k = 0; k < m; ++k) {
    int pivot = -1;
    for (int i = k; i < m; ++i) {
      if (a[i][k] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("singular coin system");
    std::swap(a[k], a[pivot]);
    std::swap(b[k], b[pivot]);
    for (int i = k + 1; i < m; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      a[i][k] = 0;
      for (int j = k + 1; j < m; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> u(m, Rational(0));
  for (int i = m - 1; i >= 0; --i) {
    Rational s = b[i];
    for (int j = i + 1; j < m; ++j) s -= a[i][j] * u[j];
    u[i] = s / a[i][i];
  }

  RationalVector out(n + 1, Rational(0));
  out[kGoal] = 1;
  for (int pos = 1; pos <= n; ++pos) {
    int code = res[pos];
    if (code == kOne) {
      out[pos] = 1;
    } else if (code >= 0) {
      out[pos] = u[code];
    }
  }
  return out;
}

namespace {

PositionalStrategy strategy_from_code(const std::vector<int>& positions,
                                      std::uint64_t code) {
  PositionalStrategy s;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    s.choices[positions[i]] = static_cast<int>((code >> i) & 1u);
  }
  return s;
}

void merge_max(RationalVector& into, const RationalVector& from) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    if (from[k] > into[k]) into[k] = from[k];
  }
}

RationalVector enumerate_impl(const SimpleStochasticGame& game,
                              const OracleLimits& limits, bool parallel) {
  const std::vector<int> maxp = game.positions_of(PositionKind::MAX);
  const std::vector<int> minp = game.positions_of(PositionKind::MIN);
  const int bits = static_cast<int>(maxp.size() + minp.size());
  if (bits > limits.max_strategy_bits) {
    throw resource_limit_error(
        "strategy enumeration over " + std::to_string(bits) +
        " player positions exceeds the " +
        std::to_string(limits.max_strategy_bits) + "-bit cap");
  }
  const std::int64_t num_x = std::int64_t{1} << maxp.size();
  const std::int64_t num_y = std::int64_t{1} << minp.size();

  // Guaranteed value of one Max strategy: componentwise min over all
  // Min replies.
  auto floor_of_x = [&](std::int64_t xc) {
    PositionalStrategy x = strategy_from_code(maxp, xc);
    RationalVector lower;
    for (std::int64_t yc = 0; yc < num_y; ++yc) {
      RationalVector v =
          eval_strategy_pair(game, x, strategy_from_code(minp, yc));
      if (yc == 0) {
        lower = std::move(v);
      } else {
        for (std::size_t k = 0; k < lower.size(); ++k) {
          if (v[k] < lower[k]) lower[k] = v[k];
        }
      }
    }
    return lower;
  };

  RationalVector best(game.n + 1, Rational(-1));
  if (!parallel) {
    for (std::int64_t xc = 0; xc < num_x; ++xc) merge_max(best, floor_of_x(xc));
  } else {
#pragma omp parallel
    {
      RationalVector local(game.n + 1, Rational(-1));
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t xc = 0; xc < num_x; ++xc) {
        merge_max(local, floor_of_x(xc));
      }
#pragma omp critical
      merge_max(best, local);
    }
  }
  return best;
}

}  // namespace

RationalVector enumerate_values_serial(const SimpleStochasticGame& game,
                                       const OracleLimits& limits) {
  return enumerate_impl(game, limits, false);
}

RationalVector enumerate_values(const SimpleStochasticGame& game,
                                const OracleLimits& limits) {
#ifdef _OPENMP
  return enumerate_impl(game, limits, true);
#else
  return enumerate_impl(game, limits, false);
#endif
}

mpz_class fib_r_step(std::int64_t m, int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  if (m <= 0) return 0;
  if (m <= 2) return 1;
  // Rolling window of the last r terms plus their running sum.
  std::vector<mpz_class> win(static_cast<std::size_t>(r), mpz_class(0));
  mpz_class sum = 0;
  mpz_class fk;
  for (std::int64_t k = 1; k <= m; ++k) {
    std::size_t slot = static_cast<std::size_t>(k % r);
    if (k <= 2) {
      fk = 1;
    } else {
      fk = sum;
    }
    sum += fk;
    sum -= win[slot];  // evict F_{k-r}
    win[slot] = fk;
  }
  return fk;
}

Rational tails_run_prob(std::int64_t t, int r) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  mpz_class pow2 = 1;
  mpz_pow_ui(pow2.get_mpz_t(), mpz_class(2).get_mpz_t(),
             static_cast<unsigned long>(t));
  return make_rational(pow2 - fib_r_step(t + 2, r), pow2);
}

}  // namespace ssg
