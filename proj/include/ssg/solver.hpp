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

#ifndef SSG_SOLVER_HPP_
#define SSG_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/dgg.hpp"
#include "ssg/dyadic.hpp"
#include "ssg/errors.hpp"
#include "ssg/game.hpp"
#include "ssg/rational.hpp"

namespace ssg {

/// How coin averages are rounded during value iteration.
struct Rounding {
  /// No rounding; precision grows by one bit per step.
  static Rounding exact() { return Rounding{true, 0}; }
  /// Round every average down to a fixed number of fractional bits.
  static Rounding floor(int bits);

  bool is_exact;
  int bits;  // meaningful only when !is_exact
};

enum class BudgetMode {
  EXTREMAL,  // iterations matched to the worst known convergence family
  DIRECT,    // iterations from the generic convergence-rate argument
};

struct IterationBudget {
  BudgetMode mode;
  int r_prime;               // max(r, 6), the padded coin count
  std::int64_t iterations;   // number of averaging steps to run
};

/**
 * Iterations sufficient for the final dyadic vector to pin down the
 * exact values, computed exactly (no floating point): with r' = max(r,6),
 *   EXTREMAL: ceil(2 * (5r'+1) * ln2 * 2^r')   e.g. 2751 for r' = 6,
 *   DIRECT:   ceil(5 * ln2 * r'^2 * 2^r')      e.g. 7986 for r' = 6.
 * The ceiling is taken against a 60-digit rational lower bound on ln 2,
 * which is tight enough that the result never lands on the truncation.
 */
IterationBudget iteration_budget(int r, BudgetMode mode);

/// Default fractional bits kept during rounded iteration: 7 * max(r, 6).
int default_precision_bits(int r);

/**
 * Runs modified value iteration incrementally: the value vector starts
 * at (1, 0, ..., 0) and each advance() replaces every coin entry with
 * the rounded average of its successors' values and then re-solves the
 * deterministic game those payoffs induce. After t steps, values() is
 * exactly the value vector of the game truncated to t coin tosses
 * (lower-bounded by it when rounding, see timed_values).
 *
 * Keeping the run object alive makes a sweep over t = 0..T cost one
 * solve per step instead of re-running from scratch.
 */
class MviRun {
 public:
  MviRun(const SimpleStochasticGame& game, Rounding rounding);

  std::int64_t t() const { return t_; }
  /// Current fractional bits (fixed when rounding, t when exact).
  int precision() const { return precision_; }

  /// One averaging step followed by a re-solve.
  void advance();
  void advance_until(std::int64_t t);

  /// Per-position values after t steps, indexed 0..n.
  std::vector<Dyadic> values() const;
  Dyadic value_at(int pos) const;

  /// The current deterministic-game solution (witnesses, classes).
  const DggSolution<Dyadic>& solution() const { return sol_; }
  /// Current frozen coin payoffs, indexed like DggSolver::coin_positions.
  const std::vector<Dyadic>& coin_payoffs() const { return payoffs_; }
  const std::vector<std::int32_t>& coin_positions() const {
    return solver_.coin_positions();
  }

 private:
  const SimpleStochasticGame* game_;
  Rounding rounding_;
  DggSolver solver_;
  std::vector<Dyadic> payoffs_;
  DggSolution<Dyadic> sol_;
  std::int64_t t_ = 0;
  int precision_;
};

/**
 * One modified value iteration step on an explicit vector v (indexed
 * 0..n, all entries at one precision): solve the deterministic game
 * frozen at v's coin entries, write every player position's solved value,
 * and replace each coin entry with the rounded average of its successors'
 * solved values. With exact rounding the result gains one bit and all
 * entries are rescaled to match.
 */
std::vector<Dyadic> mvi_step(const SimpleStochasticGame& game,
                             const std::vector<Dyadic>& v,
                             const Rounding& rounding);

/**
 * The value vector of the t-toss truncation of the game: positions are
 * valued as if the game ends (worth 0) after the coins have been tossed
 * t times in total, with both players playing optimally. Computed by t
 * incremental steps (see MviRun). With floor rounding at p bits the
 * result is sandwiched: exact - t * 2^-p <= rounded <= exact, entrywise.
 */
std::vector<Dyadic> timed_values(const SimpleStochasticGame& game,
                                 std::int64_t t, const Rounding& rounding);

/**
 * One classical (unmodified) value iteration step: GOAL stays 1, a Max
 * position takes the larger of its successors' old values, Min the
 * smaller, and a coin their (rounded) average. Kept for comparison
 * experiments; converges far more slowly than mvi_step.
 */
std::vector<Dyadic> unmodified_vi_step(const SimpleStochasticGame& game,
                                       const std::vector<Dyadic>& v,
                                       const Rounding& rounding);

struct SolveOptions {
  BudgetMode mode = BudgetMode::EXTREMAL;
  /// Refuse games with more coin positions than this (the iteration
  /// count is exponential in r).
  int max_coins = 24;
  /// Override the fractional bits kept during iteration. Values below
  /// the default void the exactness guarantee; for experiments only.
  std::optional<int> precision_bits;
  /// Skip strategy extraction (values only).
  bool strategies = true;
};

struct Solution {
  RationalVector values;          // exact values, indexed 0..n
  PositionalStrategy max_strategy;
  PositionalStrategy min_strategy;
  IterationBudget budget;
  std::int64_t iterations_run;    // 0 when the game has no coins
  int precision_bits;
};

/**
 * Solves the game exactly: runs the iteration budget of rounded steps,
 * then rounds each position's dyadic value up to the nearest rational
 * with denominator <= 4^r, which the budget guarantees is the true
 * value. Total cost O(T * (r log r + n)) integer-word operations with
 * T the budget. Throws resource_limit_error if r exceeds
 * options.max_coins.
 */
Solution solve(const SimpleStochasticGame& game,
               const SolveOptions& options = {});

/**
 * Optimal positional strategies from the exact values. Min takes an
 * arc to a smallest-valued successor (lowest slot on ties). Max takes
 * an equal-valued arc chosen by backward ranking from GOAL, which
 * rules out value-preserving choices that trap the play in a cycle;
 * value-0 Max positions default to slot 0. The pair is verified
 * against eval_strategy_pair before returning; a mismatch (impossible
 * for correct values) raises std::logic_error.
 */
std::pair<PositionalStrategy, PositionalStrategy> extract_strategies(
    const SimpleStochasticGame& game, const RationalVector& values);

/**
 * Text form of a solution: one "value <id> <num>/<den>" line per
 * position 0..n, then (optionally) "strategy max <id> <slot>" and
 * "strategy min <id> <slot>" lines in ascending id order.
 */
std::string format_solution(const Solution& solution, bool with_strategies);

}  // namespace ssg

#endif  // SSG_SOLVER_HPP_
