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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "ssg/dgg.hpp"
#include "ssg/game.hpp"
#include "ssg/generators.hpp"
#include "ssg/rational.hpp"
#include "test_util.hpp"

using ssg::DggSolution;
using ssg::DggSolver;
using ssg::parse_game;
using ssg::PositionKind;
using ssg::Rational;
using ssg::RationalVector;
using ssg::SimpleStochasticGame;

namespace {

/// Ground truth for deterministic goal games, fully independent of the
/// retrograde solver: enumerate every strategy pair, follow the single
/// induced play from each position (payoff at the terminal reached, 0
/// if play cycles), and take the max over Max choices of the min over
/// Min choices.
RationalVector dgg_brute_force(const SimpleStochasticGame& game,
                               const std::vector<Rational>& coin_payoffs) {
  std::vector<int> maxp = game.positions_of(PositionKind::MAX);
  std::vector<int> minp = game.positions_of(PositionKind::MIN);
  std::vector<int> coins = game.positions_of(PositionKind::AVE);
  std::map<int, Rational> payoff;
  for (std::size_t i = 0; i < coins.size(); ++i) {
    payoff[coins[i]] = coin_payoffs[i];
  }

  auto play_value = [&](const std::map<int, int>& arc, int start) {
    std::set<int> visited;
    int cur = start;
    while (true) {
      if (cur == ssg::kGoal) return Rational(1);
      if (payoff.count(cur)) return payoff.at(cur);
      if (!visited.insert(cur).second) return Rational(0);
      cur = game.successors[cur][arc.at(cur)];
    }
  };

  RationalVector best(game.n + 1, Rational(-1));
  for (std::uint64_t xc = 0; xc < (1ull << maxp.size()); ++xc) {
    RationalVector guaranteed(game.n + 1, Rational(2));
    for (std::uint64_t yc = 0; yc < (1ull << minp.size()); ++yc) {
      std::map<int, int> arc;
      for (std::size_t i = 0; i < maxp.size(); ++i) {
        arc[maxp[i]] = static_cast<int>((xc >> i) & 1);
      }
      for (std::size_t i = 0; i < minp.size(); ++i) {
        arc[minp[i]] = static_cast<int>((yc >> i) & 1);
      }
      for (int pos = 0; pos <= game.n; ++pos) {
        Rational v = play_value(arc, pos);
        if (v < guaranteed[pos]) guaranteed[pos] = v;
      }
    }
    for (int pos = 0; pos <= game.n; ++pos) {
      if (guaranteed[pos] > best[pos]) best[pos] = guaranteed[pos];
    }
  }
  return best;
}

RationalVector solved_values(const SimpleStochasticGame& game,
                             const std::vector<Rational>& coin_payoffs) {
  DggSolution<Rational> sol =
      ssg::solve_dgg(game, coin_payoffs, Rational(1), Rational(0));
  RationalVector out(game.n + 1);
  for (int pos = 0; pos <= game.n; ++pos) out[pos] = sol.value(pos);
  return out;
}

}  // namespace

TEST_CASE("single Max position choosing between a coin and GOAL") {
  // Position 1 = Max {coin, GOAL}; coin worth 1/2. Max takes GOAL.
  SimpleStochasticGame g = parse_game("ssg 2 1\n1 MAX 2 0\n2 AVE 0 0\n");
  DggSolver solver(g);
  DggSolution<Rational> sol =
      solver.solve<Rational>({Rational(1, 2)}, Rational(1), Rational(0));
  CHECK(sol.value(1) == 1);
  CHECK(sol.value(2) == Rational(1, 2));
  CHECK(sol.witness[1] == 1);  // the GOAL arc
  CHECK(sol.class_values == std::vector<Rational>{1, Rational(1, 2)});
  CHECK(sol.order == std::vector<std::int32_t>{0, 1, 2});
}

TEST_CASE("two-cycle of Min positions never assigned") {
  // Each Min position can escape to GOAL but prefers the cycle.
  SimpleStochasticGame g = parse_game("ssg 2 0\n1 MIN 2 0\n2 MIN 1 0\n");
  DggSolution<Rational> sol =
      ssg::solve_dgg<Rational>(g, {}, Rational(1), Rational(0));
  CHECK_FALSE(sol.assigned(1));
  CHECK_FALSE(sol.assigned(2));
  CHECK(sol.value(1) == 0);
  CHECK(sol.value(2) == 0);
  CHECK(sol.order == std::vector<std::int32_t>{0});
}

TEST_CASE("assignment order walks a Max chain outward from GOAL") {
  SimpleStochasticGame g = parse_game(
      "ssg 4 0\n1 MAX 0 0\n2 MAX 1 1\n3 MAX 2 2\n4 MAX 3 3\n");
  DggSolution<Rational> sol =
      ssg::solve_dgg<Rational>(g, {}, Rational(1), Rational(0));
  CHECK(sol.order == std::vector<std::int32_t>{0, 1, 2, 3, 4});
  for (int pos = 0; pos <= 4; ++pos) CHECK(sol.value(pos) == 1);
}

TEST_CASE("Min joins a class only when both arcs lead into it") {
  // Min 1 -> {coin 1/4, coin 3/4}: worth 1/4. Min 2 -> {GOAL, sink}: 0.
  SimpleStochasticGame g = parse_game(
      "ssg 5 2\n1 MIN 2 3\n2 AVE 0 0\n3 AVE 0 0\n4 MIN 0 5\n5 MIN 5 5\n");
  DggSolution<Rational> sol = ssg::solve_dgg<Rational>(
      g, {Rational(1, 4), Rational(3, 4)}, Rational(1), Rational(0));
  CHECK(sol.value(1) == Rational(1, 4));
  CHECK(sol.value(4) == 0);
  CHECK(sol.value(5) == 0);
  // The witness of a Min position points into its own value class.
  CHECK(sol.witness[1] == 0);
}

TEST_CASE("coins at payoff one join the GOAL class, at zero stay out") {
  SimpleStochasticGame g = parse_game(
      "ssg 3 3\n1 AVE 0 0\n2 AVE 0 0\n3 AVE 0 0\n");
  DggSolution<Rational> sol = ssg::solve_dgg<Rational>(
      g, {Rational(1), Rational(1, 3), Rational(0)}, Rational(1),
      Rational(0));
  CHECK(sol.class_of[1] == 0);
  CHECK(sol.class_of[2] == 1);
  CHECK_FALSE(sol.assigned(3));
  CHECK(sol.class_values ==
        std::vector<Rational>{Rational(1), Rational(1, 3)});
}

TEST_CASE("parallel arcs count as two for the Min countdown") {
  // Min 1 has both arcs to coin 2 (payoff 1/2): it must be assigned 1/2.
  SimpleStochasticGame g = parse_game("ssg 2 1\n1 MIN 2 2\n2 AVE 0 0\n");
  DggSolution<Rational> sol = ssg::solve_dgg<Rational>(
      g, {Rational(1, 2)}, Rational(1), Rational(0));
  CHECK(sol.value(1) == Rational(1, 2));
}

TEST_CASE("payoff count mismatch is rejected") {
  SimpleStochasticGame g = parse_game("ssg 1 1\n1 AVE 0 0\n");
  DggSolver solver(g);
  CHECK_THROWS_AS(
      solver.solve<Rational>({}, Rational(1), Rational(0)),
      std::invalid_argument);
}

TEST_CASE("solver instance is reusable and deterministic") {
  SimpleStochasticGame g = ssg_test::random_small_game(42);
  DggSolver solver(g);
  std::vector<Rational> payoffs(g.r);
  for (int i = 0; i < g.r; ++i) payoffs[i] = Rational(i + 1, 7);
  DggSolution<Rational> a = solver.solve(payoffs, Rational(1), Rational(0));
  DggSolution<Rational> b = solver.solve(payoffs, Rational(1), Rational(0));
  CHECK(a.class_of == b.class_of);
  CHECK(a.witness == b.witness);
  CHECK(a.order == b.order);
  CHECK(a.class_values == b.class_values);
}

TEST_CASE("dyadic and rational payoffs solve identically") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SimpleStochasticGame g = ssg_test::random_small_game(seed);
    ssg::SplitMix64 rng(seed * 977);
    std::vector<ssg::Dyadic> dy;
    std::vector<Rational> ra;
    for (int i = 0; i < g.r; ++i) {
      ssg::Dyadic d(mpz_class(static_cast<unsigned long>(rng.next_below(65))),
                    6);
      dy.push_back(d);
      ra.push_back(d.to_rational());
    }
    DggSolution<ssg::Dyadic> ds =
        ssg::solve_dgg(g, dy, ssg::Dyadic::one(6), ssg::Dyadic::zero(6));
    DggSolution<Rational> rs =
        ssg::solve_dgg(g, ra, Rational(1), Rational(0));
    CHECK(ds.class_of == rs.class_of);
    CHECK(ds.witness == rs.witness);
    CHECK(ds.order == rs.order);
    for (int pos = 0; pos <= g.n; ++pos) {
      CHECK(ds.value(pos).to_rational() == rs.value(pos));
    }
  }
}

TEST_CASE("retrograde values match strategy-pair brute force") {
  const std::vector<std::vector<Rational>> palettes = {
      {Rational(1, 2), Rational(1, 4)},
      {Rational(1), Rational(0)},
      {Rational(3, 5), Rational(3, 5)},
      {Rational(1, 8), Rational(7, 8)},
  };
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 200; ++seed) {
    SimpleStochasticGame g = ssg_test::random_small_game(seed);
    if (g.count_of(PositionKind::MAX) + g.count_of(PositionKind::MIN) > 6) {
      continue;  // keep the pair enumeration tiny
    }
    ++checked;
    ssg::SplitMix64 rng(seed * 31 + 7);
    const std::vector<Rational>& palette =
        palettes[rng.next_below(palettes.size())];
    std::vector<Rational> payoffs;
    for (int i = 0; i < g.r; ++i) {
      payoffs.push_back(palette[rng.next_below(palette.size())]);
    }
    RationalVector expect = dgg_brute_force(g, payoffs);
    RationalVector got = solved_values(g, payoffs);
    CAPTURE(seed);
    CHECK(got == expect);
  }
}

TEST_CASE("structural invariants of solutions") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    SimpleStochasticGame g = ssg_test::random_small_game(seed);
    ssg::SplitMix64 rng(seed);
    std::vector<Rational> payoffs;
    for (int i = 0; i < g.r; ++i) {
      payoffs.push_back(
          ssg::make_rational(static_cast<long>(rng.next_below(9)), 8));
    }
    DggSolution<Rational> sol =
        ssg::solve_dgg(g, payoffs, Rational(1), Rational(0));

    // Class values strictly descending from 1, at most r+1 classes, and
    // every class value is an actual payoff (or 1).
    REQUIRE(!sol.class_values.empty());
    CHECK(sol.class_values[0] == 1);
    CHECK(static_cast<int>(sol.class_values.size()) <= g.r + 1);
    for (std::size_t c = 1; c < sol.class_values.size(); ++c) {
      CHECK(sol.class_values[c] < sol.class_values[c - 1]);
      CHECK(sol.class_values[c] > 0);
      bool is_payoff = false;
      for (const Rational& p : payoffs) is_payoff |= (p == sol.class_values[c]);
      CHECK(is_payoff);
    }

    // Local optimality at every player position.
    for (int pos = 1; pos <= g.n; ++pos) {
      const Rational& v = sol.value(pos);
      const Rational& a = sol.value(g.successors[pos][0]);
      const Rational& b = sol.value(g.successors[pos][1]);
      if (g.kinds[pos] == PositionKind::MAX) {
        CHECK(v == std::max(a, b));
        if (sol.witness[pos] >= 0) {
          CHECK(sol.value(g.successors[pos][sol.witness[pos]]) == v);
        } else {
          CHECK(v == 0);
        }
      } else if (g.kinds[pos] == PositionKind::MIN) {
        if (sol.assigned(pos)) {
          CHECK(v == std::min(a, b));
          CHECK(sol.value(g.successors[pos][sol.witness[pos]]) == v);
        } else {
          // Worth zero: Min can keep the play at value zero.
          CHECK(std::min(a, b) == 0);
        }
      }
    }

    // Assignment order never ascends in value.
    for (std::size_t i = 1; i < sol.order.size(); ++i) {
      CHECK(sol.value(sol.order[i - 1]) >= sol.value(sol.order[i]));
    }
  }
}
