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

#include "ssg/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ssg/oracle.hpp"

namespace ssg {

Rounding Rounding::floor(int bits) {
  if (bits < 1) throw std::invalid_argument("rounding bits must be >= 1");
  return Rounding{false, bits};
}

namespace {

// ln 2 truncated to 60 decimal digits, as numerator over 10^60. A
// rational lower bound tight enough that ceil(k * ln2) computed from it
// equals the true ceiling for every k used here (the fractional part of
// k * ln2 never comes within k * 1e-60 of an integer at these sizes).
const char kLn2Digits[] =
    "693147180559945309417232121458176568075500134360255254120680";

}  // namespace

IterationBudget iteration_budget(int r, BudgetMode mode) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  const int rp = std::max(r, 6);
  mpz_class scale = 1;
  scale <<= rp;
  mpz_class k;
  if (mode == BudgetMode::EXTREMAL) {
    k = 2 * (5 * rp + 1) * scale;
  } else {
    k = 5 * rp * rp * scale;
  }
  mpz_class num = k * mpz_class(kLn2Digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 60);
  mpz_class t;
  mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!t.fits_slong_p()) {
    throw std::overflow_error("iteration budget exceeds 64 bits");
  }
  return IterationBudget{mode, rp, static_cast<std::int64_t>(t.get_si())};
}

int default_precision_bits(int r) { return 7 * std::max(r, 6); }

MviRun::MviRun(const SimpleStochasticGame& game, Rounding rounding)
    : game_(&game),
      rounding_(rounding),
      solver_(game),
      precision_(rounding.is_exact ? 0 : rounding.bits) {
  payoffs_.assign(solver_.coin_positions().size(), Dyadic::zero(precision_));
  sol_ = solver_.solve(payoffs_, Dyadic::one(precision_),
                       Dyadic::zero(precision_));
}

void MviRun::advance() {
  const std::vector<std::int32_t>& coins = solver_.coin_positions();
  std::vector<Dyadic> next(coins.size());
  for (std::size_t i = 0; i < coins.size(); ++i) {
    const Dyadic& u0 = sol_.value(game_->successors[coins[i]][0]);
    const Dyadic& u1 = sol_.value(game_->successors[coins[i]][1]);
    next[i] = rounding_.is_exact ? exact_avg(u0, u1) : avg_floor(u0, u1);
  }
  if (rounding_.is_exact) ++precision_;
  payoffs_ = std::move(next);
  sol_ = solver_.solve(payoffs_, Dyadic::one(precision_),
                       Dyadic::zero(precision_));
  ++t_;
}

void MviRun::advance_until(std::int64_t t) {
  while (t_ < t) advance();
}

std::vector<Dyadic> MviRun::values() const {
  std::vector<Dyadic> out;
  out.reserve(game_->n + 1);
  for (int pos = 0; pos <= game_->n; ++pos) out.push_back(sol_.value(pos));
  return out;
}

Dyadic MviRun::value_at(int pos) const { return sol_.value(pos); }

namespace {

int uniform_precision(const std::vector<Dyadic>& v, const Rounding& rounding) {
  if (v.empty()) throw std::invalid_argument("empty value vector");
  int p = v[0].precision();
  for (const Dyadic& e : v) {
    if (e.precision() != p) throw std::invalid_argument("precision mismatch");
  }
  if (!rounding.is_exact && p != rounding.bits) {
    throw std::invalid_argument("precision mismatch");
  }
  return p;
}

}  // namespace

std::vector<Dyadic> mvi_step(const SimpleStochasticGame& game,
                             const std::vector<Dyadic>& v,
                             const Rounding& rounding) {
  if (static_cast<int>(v.size()) != game.n + 1) {
    throw std::invalid_argument("value vector size mismatch");
  }
  const int p = uniform_precision(v, rounding);

  DggSolver solver(game);
  const std::vector<std::int32_t>& coins = solver.coin_positions();
  std::vector<Dyadic> payoffs;
  payoffs.reserve(coins.size());
  for (std::int32_t c : coins) payoffs.push_back(v[c]);
  DggSolution<Dyadic> sol =
      solver.solve(payoffs, Dyadic::one(p), Dyadic::zero(p));

  const int out_p = rounding.is_exact ? p + 1 : p;
  std::vector<Dyadic> out;
  out.reserve(v.size());
  for (int pos = 0; pos <= game.n; ++pos) {
    if (game.kinds[pos] == PositionKind::AVE) {
      const Dyadic& u0 = sol.value(game.successors[pos][0]);
      const Dyadic& u1 = sol.value(game.successors[pos][1]);
      out.push_back(rounding.is_exact ? exact_avg(u0, u1)
                                      : avg_floor(u0, u1));
    } else {
      out.push_back(sol.value(pos).rescaled(out_p));
    }
  }
  return out;
}

std::vector<Dyadic> timed_values(const SimpleStochasticGame& game,
                                 std::int64_t t, const Rounding& rounding) {
  if (t < 0) throw std::invalid_argument("t must be >= 0");
  MviRun run(game, rounding);
  run.advance_until(t);
  return run.values();
}

std::vector<Dyadic> unmodified_vi_step(const SimpleStochasticGame& game,
                                       const std::vector<Dyadic>& v,
                                       const Rounding& rounding) {
  if (static_cast<int>(v.size()) != game.n + 1) {
    throw std::invalid_argument("value vector size mismatch");
  }
  const int p = uniform_precision(v, rounding);
  const int out_p = rounding.is_exact ? p + 1 : p;

  std::vector<Dyadic> out;
  out.reserve(v.size());
  out.push_back(Dyadic::one(out_p));
  for (int pos = 1; pos <= game.n; ++pos) {
    const Dyadic& u0 = v[game.successors[pos][0]];
    const Dyadic& u1 = v[game.successors[pos][1]];
    switch (game.kinds[pos]) {
      case PositionKind::MAX:
        out.push_back((u0 >= u1 ? u0 : u1).rescaled(out_p));
        break;
      case PositionKind::MIN:
        out.push_back((u0 <= u1 ? u0 : u1).rescaled(out_p));
        break;
      default:
        out.push_back(rounding.is_exact ? exact_avg(u0, u1)
                                        : avg_floor(u0, u1));
        break;
    }
  }
  return out;
}

Solution solve(const SimpleStochasticGame& game, const SolveOptions& options) {
  if (game.r > options.max_coins) {
    throw resource_limit_error("r exceeds cap: " + std::to_string(game.r) +
                               " coin positions, cap " +
                               std::to_string(options.max_coins));
  }
  IterationBudget budget = iteration_budget(game.r, options.mode);
  const int p = options.precision_bits.value_or(default_precision_bits(game.r));

  MviRun run(game, Rounding::floor(p));
  // With no coins the initial solve is already exact.
  const std::int64_t iterations = game.r == 0 ? 0 : budget.iterations;
  run.advance_until(iterations);

  // Round each of the <= r+1 distinct solved values up to the nearest
  // admissible rational once, then fan out per position.
  mpz_class max_den = 1;
  max_den <<= 2 * game.r;  // 4^r
  const DggSolution<Dyadic>& sol = run.solution();
  std::vector<Rational> recon(sol.class_values.size());
  for (std::size_t c = 0; c < recon.size(); ++c) {
    recon[c] = min_rational_geq(sol.class_values[c], max_den);
  }

  Solution out;
  out.budget = budget;
  out.precision_bits = p;
  out.iterations_run = iterations;
  out.values.assign(game.n + 1, Rational(0));
  for (int pos = 0; pos <= game.n; ++pos) {
    std::int32_t c = sol.class_of[pos];
    if (c >= 0) out.values[pos] = recon[c];
  }
  if (options.strategies) {
    auto [x, y] = extract_strategies(game, out.values);
    out.max_strategy = std::move(x);
    out.min_strategy = std::move(y);
  }
  return out;
}

std::pair<PositionalStrategy, PositionalStrategy> extract_strategies(
    const SimpleStochasticGame& game, const RationalVector& values) {
  const int n = game.n;

  // Min: an arc towards a smallest-valued successor is always optimal
  // (with Min so fixed, the true values are still the least fixpoint of
  // the remaining max/average equations). Slot 0 wins ties.
  std::vector<std::int8_t> min_slot(n + 1, 0);
  PositionalStrategy min_strategy;
  for (int pos = 1; pos <= n; ++pos) {
    if (game.kinds[pos] != PositionKind::MIN) continue;
    const Rational& u0 = values[game.successors[pos][0]];
    const Rational& u1 = values[game.successors[pos][1]];
    min_slot[pos] = u0 <= u1 ? 0 : 1;
    min_strategy.choices[pos] = min_slot[pos];
  }

  // Max: picking any largest-valued successor is NOT enough — such an
  // arc can spin play forever around positions of equal value (e.g.
  // into a coin that feeds straight back), which is worth 0, not the
  // shared value. Rank positions by walking backwards from GOAL: a Max
  // position is ranked (and its arc fixed) once some equal-valued
  // successor is ranked, a Min position once the choice fixed above is
  // ranked, and a coin once either successor is ranked. Every position
  // of positive value gets ranked, and the chosen arcs then move the
  // play strictly down in rank with probability >= 1/2 per step, so no
  // positive-value trap remains in the induced chain.
  std::vector<std::vector<std::int32_t>> preds(n + 1);
  for (int pos = 1; pos <= n; ++pos) {
    for (int slot = 0; slot < 2; ++slot) {
      preds[game.successors[pos][slot]].push_back((pos << 1) | slot);
    }
  }
  std::vector<char> ranked(n + 1, 0);
  std::vector<std::int8_t> max_slot(n + 1, 0);
  std::vector<std::int32_t> queue;
  queue.reserve(n + 1);
  ranked[kGoal] = 1;
  queue.push_back(kGoal);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int w = queue[head];
    for (std::int32_t e : preds[w]) {
      const int u = e >> 1;
      const int slot = e & 1;
      if (ranked[u] || values[u] == 0) continue;
      switch (game.kinds[u]) {
        case PositionKind::MAX:
          if (values[w] != values[u]) continue;
          max_slot[u] = static_cast<std::int8_t>(slot);
          break;
        case PositionKind::MIN:
          if (slot != min_slot[u]) continue;
          break;
        default:
          break;  // a coin progresses through either arc
      }
      ranked[u] = 1;
      queue.push_back(u);
    }
  }

  PositionalStrategy max_strategy;
  for (int pos = 1; pos <= n; ++pos) {
    if (game.kinds[pos] == PositionKind::MAX) {
      // Unranked Max positions are worth 0 and keep the slot-0 default;
      // both arcs are equally hopeless there.
      max_strategy.choices[pos] = max_slot[pos];
    }
  }

  RationalVector achieved =
      eval_strategy_pair(game, max_strategy, min_strategy);
  if (achieved != values) {
    throw std::logic_error("strategy verification failed");
  }
  return {std::move(max_strategy), std::move(min_strategy)};
}

std::string format_solution(const Solution& solution, bool with_strategies) {
  std::ostringstream out;
  for (std::size_t pos = 0; pos < solution.values.size(); ++pos) {
    out << "value " << pos << " " << format_rational(solution.values[pos])
        << "\n";
  }
  if (with_strategies) {
    for (const auto& [pos, slot] : solution.max_strategy.choices) {
      out << "strategy max " << pos << " " << slot << "\n";
    }
    for (const auto& [pos, slot] : solution.min_strategy.choices) {
      out << "strategy min " << pos << " " << slot << "\n";
    }
  }
  return out.str();
}

}  // namespace ssg
