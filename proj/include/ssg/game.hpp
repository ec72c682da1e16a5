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

#ifndef SSG_GAME_HPP_
#define SSG_GAME_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssg {

/// Index of the GOAL terminal. All other positions are numbered 1..n.
inline constexpr int kGoal = 0;

enum class PositionKind : std::uint8_t {
  GOAL = 0,  // the terminal, index 0 only
  MAX,       // player Max picks the arc
  MIN,       // player Min picks the arc
  AVE,       // coin toss: uniform over the two arcs
};

const char* kind_name(PositionKind kind);

/**
 * A simple stochastic game: a directed multigraph of Max, Min and coin
 * toss positions, each with exactly two (ordered) outgoing arcs, plus the
 * GOAL terminal at index 0. Parallel arcs and self-loops are allowed.
 * Max tries to reach GOAL, Min tries to prevent it.
 *
 * Instances are plain data; they are immutable by convention after
 * construction and safe to share between threads.
 */
struct SimpleStochasticGame {
  int n = 0;  // number of non-terminal positions (ids 1..n)
  int r = 0;  // declared number of AVE positions

  // Indexed 0..n; kinds[0] == PositionKind::GOAL.
  std::vector<PositionKind> kinds;
  // Indexed 0..n; successors[0] is unused. Slot order matters.
  std::vector<std::array<int, 2>> successors;

  int successor(int pos, int slot) const { return successors[pos][slot]; }
  PositionKind kind(int pos) const { return kinds[pos]; }

  /// Ids (ascending) of the positions of the given kind.
  std::vector<int> positions_of(PositionKind k) const;
  int count_of(PositionKind k) const;

  bool operator==(const SimpleStochasticGame&) const = default;
};

/**
 * A deterministic, history-free strategy: maps each of one player's
 * positions to an arc slot (0 = first successor, 1 = second).
 */
struct PositionalStrategy {
  std::map<int, int> choices;

  int slot(int pos) const { return choices.at(pos); }
  bool operator==(const PositionalStrategy&) const = default;
};

/// One structural violation found by validate(). position < 0 means the
/// violation concerns the game as a whole rather than a single position.
struct Violation {
  int position;
  std::string message;
};

/**
 * Checks every structural invariant: out-degree exactly two with targets
 * in 0..n, GOAL only at index 0, r matching the AVE count, n >= 1.
 * Returns an empty vector iff the game is well formed. Violations are
 * reported as data, never thrown.
 */
std::vector<Violation> validate(const SimpleStochasticGame& game);

/// Thrown by parse_game on malformed input; carries 1-based line/column.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/**
 * Parses the `.ssg` text format:
 *
 *   ssg <n> <r>
 *   <id> <MAX|MIN|AVE> <s1> <s2>     (exactly n lines, ids 1..n once each)
 *
 * `#` starts a comment running to end of line; blank lines are ignored.
 * GOAL is implicit as position 0. The returned game always passes
 * validate(); any defect raises parse_error with line/column.
 */
SimpleStochasticGame parse_game(std::istream& in);
SimpleStochasticGame parse_game(const std::string& text);

/**
 * Canonical `.ssg` text for a game: header line then one line per position
 * in id order, LF-terminated. Optional comment lines (without the leading
 * '#') are emitted first. parse_game(serialize_game(g)) == g.
 */
std::string serialize_game(const SimpleStochasticGame& game,
                           const std::vector<std::string>& comments = {});

}  // namespace ssg

#endif  // SSG_GAME_HPP_
