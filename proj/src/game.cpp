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

#include "ssg/game.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace ssg {

const char* kind_name(PositionKind kind) {
  switch (kind) {
    case PositionKind::GOAL: return "GOAL";
    case PositionKind::MAX: return "MAX";
    case PositionKind::MIN: return "MIN";
    case PositionKind::AVE: return "AVE";
  }
  return "?";
}

std::vector<int> SimpleStochasticGame::positions_of(PositionKind k) const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (kinds[i] == k) out.push_back(i);
  }
  return out;
}

int SimpleStochasticGame::count_of(PositionKind k) const {
  int c = 0;
  for (int i = 1; i <= n; ++i) c += (kinds[i] == k);
  return c;
}

std::vector<Violation> validate(const SimpleStochasticGame& game) {
  std::vector<Violation> out;
  if (game.n < 1) {
    out.push_back({-1, "n must be at least 1"});
    return out;
  }
  if (static_cast<int>(game.kinds.size()) != game.n + 1 ||
      static_cast<int>(game.successors.size()) != game.n + 1) {
    out.push_back({-1, "kind/successor arrays must have n+1 entries"});
    return out;
  }
  if (game.kinds[kGoal] != PositionKind::GOAL) {
    out.push_back({kGoal, "position 0 must be GOAL"});
  }
  int ave = 0;
  for (int i = 1; i <= game.n; ++i) {
    if (game.kinds[i] == PositionKind::GOAL) {
      out.push_back({i, "GOAL kind allowed only at index 0"});
      continue;
    }
    ave += (game.kinds[i] == PositionKind::AVE);
    for (int slot = 0; slot < 2; ++slot) {
      int s = game.successors[i][slot];
      if (s < 0 || s > game.n) {
        out.push_back({i, "successor out of range: " + std::to_string(s)});
      }
    }
  }
  if (ave != game.r) {
    out.push_back({-1, "r mismatch: declared " + std::to_string(game.r) +
                           ", found " + std::to_string(ave) +
                           " AVE positions"});
  }
  return out;
}

parse_error::parse_error(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Tokens of one line with comments stripped ('#' to end of line).
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t end = line.find('#');
  if (end == std::string::npos) end = line.size();
  std::size_t i = 0;
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < end && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const Token& tok, int line, const char* what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw parse_error(line, tok.column,
                      std::string("expected integer ") + what + ", got '" +
                          tok.text + "'");
  }
  return value;
}

}  // namespace

SimpleStochasticGame parse_game(std::istream& in) {
  SimpleStochasticGame game;
  int line_no = 0;
  int header_line = 0;
  int r_column = 1;
  bool have_header = false;
  std::vector<bool> seen;
  int positions_read = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks[0].text != "ssg") {
        throw parse_error(line_no, toks[0].column, "expected 'ssg' header");
      }
      if (toks.size() != 3) {
        throw parse_error(line_no,
                          toks.size() < 3 ? static_cast<int>(line.size()) + 1
                                          : toks[3].column,
                          "header must be 'ssg <n> <r>'");
      }
      game.n = parse_int(toks[1], line_no, "n");
      game.r = parse_int(toks[2], line_no, "r");
      if (game.n < 1) {
        throw parse_error(line_no, toks[1].column, "n must be at least 1");
      }
      if (game.r < 0 || game.r > game.n) {
        throw parse_error(line_no, toks[2].column,
                          "r must be between 0 and n");
      }
      header_line = line_no;
      r_column = toks[2].column;
      game.kinds.assign(game.n + 1, PositionKind::GOAL);
      game.successors.assign(game.n + 1, {0, 0});
      seen.assign(game.n + 1, false);
      have_header = true;
      continue;
    }

    if (positions_read == game.n) {
      throw parse_error(line_no, toks[0].column, "unexpected trailing line");
    }
    if (toks.size() != 4) {
      throw parse_error(line_no,
                        toks.size() < 4 ? static_cast<int>(line.size()) + 1
                                        : toks[4].column,
                        "position line must be '<id> <kind> <s1> <s2>'");
    }
    int id = parse_int(toks[0], line_no, "position id");
    if (id < 1 || id > game.n) {
      throw parse_error(line_no, toks[0].column,
                        "position id out of range 1..n");
    }
    if (seen[id]) {
      throw parse_error(line_no, toks[0].column,
                        "duplicate position id " + std::to_string(id));
    }
    seen[id] = true;
    PositionKind kind;
    if (toks[1].text == "MAX") {
      kind = PositionKind::MAX;
    } else if (toks[1].text == "MIN") {
      kind = PositionKind::MIN;
    } else if (toks[1].text == "AVE") {
      kind = PositionKind::AVE;
    } else {
      throw parse_error(line_no, toks[1].column,
                        "unknown position kind '" + toks[1].text + "'");
    }
    game.kinds[id] = kind;
    for (int slot = 0; slot < 2; ++slot) {
      int s = parse_int(toks[2 + slot], line_no, "successor");
      if (s < 0 || s > game.n) {
        throw parse_error(line_no, toks[2 + slot].column,
                          "successor out of range 0..n");
      }
      game.successors[id][slot] = s;
    }
    ++positions_read;
  }

  if (!have_header) {
    throw parse_error(line_no + 1, 1, "missing 'ssg <n> <r>' header");
  }
  if (positions_read != game.n) {
    throw parse_error(line_no + 1, 1,
                      "missing position lines: got " +
                          std::to_string(positions_read) + " of " +
                          std::to_string(game.n));
  }
  int ave = game.count_of(PositionKind::AVE);
  if (ave != game.r) {
    throw parse_error(header_line, r_column,
                      "declared r mismatch: header says " +
                          std::to_string(game.r) + ", found " +
                          std::to_string(ave) + " AVE positions");
  }
  return game;
}

SimpleStochasticGame parse_game(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

std::string serialize_game(const SimpleStochasticGame& game,
                           const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << "ssg " << game.n << " " << game.r << "\n";
  for (int i = 1; i <= game.n; ++i) {
    out << i << " " << kind_name(game.kinds[i]) << " "
        << game.successors[i][0] << " " << game.successors[i][1] << "\n";
  }
  return out.str();
}

}  // namespace ssg
