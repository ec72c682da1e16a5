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

#ifndef SSG_DGG_HPP_
#define SSG_DGG_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ssg/game.hpp"

namespace ssg {

/**
 * Result of solving the deterministic game obtained by freezing every
 * coin position at a fixed payoff. Position values are grouped into
 * payoff classes sorted strictly descending; class 0 always holds value
 * one (GOAL's payoff). Positions worth zero are left unassigned
 * (class_of == -1) rather than given a class.
 */
template <typename Value>
struct DggSolution {
  /// Distinct attained values > 0, strictly descending; [0] == one.
  std::vector<Value> class_values;
  /// Per position 0..n: index into class_values, or -1 for value zero.
  std::vector<std::int32_t> class_of;
  /// Per position: the arc slot that first secured its class, or -1
  /// (terminals, and positions worth zero). For a Max position this is
  /// an optimal arc; for a Min position it is an arc into its value
  /// class.
  std::vector<std::int8_t> witness;
  /// Positions in assignment order: the whole value-one class first
  /// (GOAL leading), then each lower class in turn.
  std::vector<std::int32_t> order;
  /// The value reported for unassigned positions.
  Value zero;

  bool assigned(int pos) const { return class_of[pos] >= 0; }
  const Value& value(int pos) const {
    std::int32_t c = class_of[pos];
    return c < 0 ? zero : class_values[c];
  }
};

/**
 * Solves deterministic goal games by retrograde analysis: coin positions
 * are frozen as payoff terminals, payoffs are bucketed into descending
 * classes, and each class is grown backwards along reverse arcs. A Max
 * position joins the first (highest) class that reaches it; a Min
 * position joins a class only once both its arcs lead into it or higher,
 * tracked with a per-position countdown. Anything never reached is worth
 * zero. One call costs O(r log r + n) plus the payoff comparisons.
 *
 * The reverse graph is built once per game; solve() may be called many
 * times with different payoffs and reuses internal scratch, so a solver
 * instance must not be shared between threads (distinct instances are
 * independent).
 */
class DggSolver {
 public:
  explicit DggSolver(const SimpleStochasticGame& game);

  /// Ids (ascending) of the game's coin positions; payoff vectors passed
  /// to solve() are indexed by position in this list.
  const std::vector<std::int32_t>& coin_positions() const {
    return coin_positions_;
  }

  /**
   * Solves for the given frozen coin payoffs, all in [zero, one].
   * `one` and `zero` name the payoff bounds in the caller's number type
   * (e.g. Dyadic::one(p) / Dyadic::zero(p)). Equal payoffs must compare
   * equal with ==; rational payoffs therefore have to be canonical
   * (mpq_class arithmetic and make_rational always produce that form).
   */
  template <typename Value>
  DggSolution<Value> solve(const std::vector<Value>& coin_payoffs,
                           const Value& one, const Value& zero) {
    const int n = n_;
    const int m = static_cast<int>(coin_positions_.size());
    if (static_cast<int>(coin_payoffs.size()) != m) {
      throw std::invalid_argument("coin payoff count mismatch");
    }

    DggSolution<Value> out;
    out.zero = zero;
    out.class_of.assign(n + 1, -1);
    out.witness.assign(n + 1, -1);
    out.order.reserve(n + 1);

    sort_idx_.resize(m);
    std::iota(sort_idx_.begin(), sort_idx_.end(), 0);
    std::stable_sort(
        sort_idx_.begin(), sort_idx_.end(),
        [&](std::int32_t a, std::int32_t b) {
          return coin_payoffs[b] < coin_payoffs[a];
        });

    counter_.assign(n + 1, 2);
    queue_.clear();
    std::size_t head = 0;

    auto seed = [&](int pos, int cls) {
      out.class_of[pos] = cls;
      out.order.push_back(pos);
      queue_.push_back(pos);
    };
    // Grow class `cls` backwards until no more positions can secure it.
    auto relax = [&](std::int32_t cls) {
      while (head < queue_.size()) {
        int v = queue_[head++];
        for (std::int32_t e = rev_offset_[v]; e < rev_offset_[v + 1]; ++e) {
          int u = rev_[e] >> 1;
          if (out.class_of[u] != -1) continue;
          if (kinds_[u] != PositionKind::MIN || --counter_[u] == 0) {
            out.class_of[u] = cls;
            out.witness[u] = static_cast<std::int8_t>(rev_[e] & 1);
            out.order.push_back(u);
            queue_.push_back(u);
          }
        }
      }
    };

    int next = 0;  // cursor into sort_idx_
    out.class_values.push_back(one);
    seed(kGoal, 0);
    while (next < m && coin_payoffs[sort_idx_[next]] == one) {
      seed(coin_positions_[sort_idx_[next]], 0);
      ++next;
    }
    relax(0);

    while (next < m) {
      const Value& v = coin_payoffs[sort_idx_[next]];
      if (v == zero) break;  // value-zero coins stay unassigned
      std::int32_t cls = static_cast<std::int32_t>(out.class_values.size());
      out.class_values.push_back(v);
      while (next < m && coin_payoffs[sort_idx_[next]] == v) {
        seed(coin_positions_[sort_idx_[next]], cls);
        ++next;
      }
      relax(cls);
    }
    return out;
  }

 private:
  int n_;
  std::vector<PositionKind> kinds_;
  std::vector<std::int32_t> coin_positions_;
  // Reverse arcs of player positions only (coin arcs are frozen away),
  // CSR by target; entries pack (source << 1) | slot.
  std::vector<std::int32_t> rev_offset_;
  std::vector<std::int32_t> rev_;
  // Scratch reused across solve() calls.
  std::vector<std::int32_t> sort_idx_;
  std::vector<std::int32_t> queue_;
  std::vector<std::int8_t> counter_;
};

/// One-shot convenience wrapper around DggSolver for a single solve.
template <typename Value>
DggSolution<Value> solve_dgg(const SimpleStochasticGame& game,
                             const std::vector<Value>& coin_payoffs,
                             const Value& one, const Value& zero) {
  DggSolver solver(game);
  return solver.solve(coin_payoffs, one, zero);
}

}  // namespace ssg

#endif  // SSG_DGG_HPP_
