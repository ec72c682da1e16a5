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
//
// Command-line front end: solve, oracle, gen, timed, check, bench.
// Exit codes: 0 success, 1 invalid input, 2 resource limit exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ssg/dgg.hpp"
#include "ssg/errors.hpp"
#include "ssg/game.hpp"
#include "ssg/generators.hpp"
#include "ssg/oracle.hpp"
#include "ssg/rational.hpp"
#include "ssg/solver.hpp"

namespace {

using namespace ssg;

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kResourceLimit = 2;

/// Loads and validates a game; "-" reads standard input. On any
/// defect prints to stderr and returns nullopt.
std::optional<SimpleStochasticGame> load_game(const std::string& path) {
  SimpleStochasticGame game;
  try {
    if (path == "-") {
      game = parse_game(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return std::nullopt;
      }
      game = parse_game(in);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
  std::vector<Violation> report = validate(game);
  if (!report.empty()) {
    for (const Violation& v : report) {
      if (v.position < 0) {
        std::cerr << "error: " << path << ": game: " << v.message << "\n";
      } else {
        std::cerr << "error: " << path << ": position " << v.position << ": "
                  << v.message << "\n";
      }
    }
    return std::nullopt;
  }
  return game;
}

/// "5" -> {5}; "4..8" -> {4,...,8}; "1,10,100" -> those; combinable.
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t dots = piece.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoll(piece));
      } else {
        std::int64_t lo = std::stoll(piece.substr(0, dots));
        std::int64_t hi = std::stoll(piece.substr(dots + 2));
        if (hi < lo || hi - lo > 1000000) {
          throw std::invalid_argument("bad range");
        }
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected integer, list or range, got '" +
                                 text + "'");
    }
  }
  if (out.empty()) {
    throw CLI::ValidationError("empty integer list '" + text + "'");
  }
  return out;
}

void trace_final_dgg(const SimpleStochasticGame& game,
                     const RationalVector& values) {
  DggSolver solver(game);
  const std::vector<std::int32_t>& coins = solver.coin_positions();
  std::vector<Rational> payoffs;
  payoffs.reserve(coins.size());
  for (std::int32_t c : coins) payoffs.push_back(values[c]);
  DggSolution<Rational> sol = solver.solve(payoffs, Rational(1), Rational(0));

  std::cerr << "dgg classes " << sol.class_values.size() << "\n";
  for (std::size_t c = 0; c < sol.class_values.size(); ++c) {
    std::cerr << "dgg class " << c << " value "
              << format_rational(sol.class_values[c]) << " positions";
    for (int pos = 0; pos <= game.n; ++pos) {
      if (sol.class_of[pos] == static_cast<std::int32_t>(c)) {
        std::cerr << " " << pos;
      }
    }
    std::cerr << "\n";
  }
  std::cerr << "dgg order";
  for (std::int32_t pos : sol.order) std::cerr << " " << pos;
  std::cerr << "\n";
  std::cerr << "dgg witness";
  for (int pos = 1; pos <= game.n; ++pos) {
    if (sol.witness[pos] >= 0) {
      std::cerr << " " << pos << ":" << static_cast<int>(sol.witness[pos]);
    }
  }
  std::cerr << "\n";
}

struct SolveArgs {
  std::string path;
  std::string bound = "extremal";
  std::optional<int> precision_bits;
  int max_coins = 24;
  bool strategies = false;
  bool trace_dgg = false;
};

int run_solve(const SolveArgs& args) {
  std::optional<SimpleStochasticGame> game = load_game(args.path);
  if (!game) return kInvalidInput;
  SolveOptions opt;
  opt.mode =
      args.bound == "direct" ? BudgetMode::DIRECT : BudgetMode::EXTREMAL;
  opt.precision_bits = args.precision_bits;
  opt.max_coins = args.max_coins;
  opt.strategies = args.strategies;
  Solution sol;
  try {
    sol = solve(*game, opt);
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  }
  std::cout << format_solution(sol, args.strategies);
  if (args.trace_dgg) trace_final_dgg(*game, sol.values);
  return kOk;
}

struct OracleArgs {
  std::string path;
  int max_bits = 20;
  bool serial = false;
};

int run_oracle(const OracleArgs& args) {
  std::optional<SimpleStochasticGame> game = load_game(args.path);
  if (!game) return kInvalidInput;
  OracleLimits limits;
  limits.max_strategy_bits = args.max_bits;
  RationalVector values;
  try {
    values = args.serial ? enumerate_values_serial(*game, limits)
                         : enumerate_values(*game, limits);
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  }
  for (std::size_t pos = 0; pos < values.size(); ++pos) {
    std::cout << "value " << pos << " " << format_rational(values[pos])
              << "\n";
  }
  return kOk;
}

struct GenArgs {
  std::string family;
  int n = 0;
  int r = 0;
  int max_count = 0;
  int min_count = 0;
  std::uint64_t seed = 1;
  std::string output = "-";
};

int run_gen(const GenArgs& args) {
  SimpleStochasticGame game;
  std::ostringstream comment;
  try {
    if (args.family == "extremal") {
      game = gen_extremal(args.n, args.r);
      comment << "gen extremal n=" << args.n << " r=" << args.r;
    } else if (args.family == "chain") {
      game = gen_chain(args.n, args.r);
      comment << "gen chain n=" << args.n << " r=" << args.r;
    } else {
      game = gen_random(args.n, args.r, args.max_count, args.min_count,
                        args.seed);
      comment << "gen random n=" << args.n << " r=" << args.r
              << " max=" << args.max_count << " min=" << args.min_count
              << " seed=" << args.seed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  std::string text = serialize_game(game, {comment.str()});
  if (args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output);
    if (!out) {
      std::cerr << "error: cannot write '" << args.output << "'\n";
      return kInvalidInput;
    }
    out << text;
  }
  return kOk;
}

struct TimedArgs {
  std::string path;
  std::string t_spec;
  std::optional<int> precision_bits;
  bool exact = false;
  bool unmodified = false;
};

int run_timed(const TimedArgs& args) {
  std::optional<SimpleStochasticGame> game = load_game(args.path);
  if (!game) return kInvalidInput;
  std::vector<std::int64_t> ts = parse_int_list(args.t_spec);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.front() < 0) {
    std::cerr << "error: t must be >= 0\n";
    return kInvalidInput;
  }

  Rounding rounding =
      args.exact
          ? Rounding::exact()
          : Rounding::floor(args.precision_bits.value_or(
                default_precision_bits(game->r)));

  auto print_row = [&](std::int64_t t, int pos, const Dyadic& v) {
    std::cout << t << "," << pos << ",";
    if (args.exact) {
      std::cout << format_rational(v.to_rational());
    } else {
      std::cout << v.to_string();
    }
    std::cout << "\n";
  };

  std::cout << "t,position,value\n";
  if (args.unmodified) {
    const int p = rounding.is_exact ? 0 : rounding.bits;
    std::vector<Dyadic> v(game->n + 1, Dyadic::zero(p));
    v[kGoal] = Dyadic::one(p);
    std::int64_t cur = 0;
    for (std::int64_t t : ts) {
      for (; cur < t; ++cur) v = unmodified_vi_step(*game, v, rounding);
      for (int pos = 0; pos <= game->n; ++pos) print_row(t, pos, v[pos]);
    }
  } else {
    MviRun run(*game, rounding);
    for (std::int64_t t : ts) {
      run.advance_until(t);
      for (int pos = 0; pos <= game->n; ++pos) {
        print_row(t, pos, run.value_at(pos));
      }
    }
  }
  return kOk;
}

int run_check(const std::string& path) {
  SimpleStochasticGame game;
  try {
    if (path == "-") {
      game = parse_game(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kInvalidInput;
      }
      game = parse_game(in);
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kInvalidInput;
  }
  std::vector<Violation> report = validate(game);
  for (const Violation& v : report) {
    if (v.position < 0) {
      std::cout << "game: " << v.message << "\n";
    } else {
      std::cout << "position " << v.position << ": " << v.message << "\n";
    }
  }
  return report.empty() ? kOk : kInvalidInput;
}

struct BenchArgs {
  std::string family = "chain";
  std::string n_spec;
  std::string r_spec;
  std::string t_spec = "0..40";
};

int run_bench(const BenchArgs& args) {
  std::vector<std::int64_t> rs = parse_int_list(args.r_spec);
  try {
    if (!args.n_spec.empty()) {
      // Timing mode: wall clock of a full solve per (family, n, r).
      std::vector<std::int64_t> ns = parse_int_list(args.n_spec);
      std::cout << "family,n,r,seconds\n";
      for (std::int64_t n : ns) {
        for (std::int64_t r : rs) {
          SimpleStochasticGame game =
              args.family == "extremal"
                  ? gen_extremal(static_cast<int>(n), static_cast<int>(r))
                  : gen_chain(static_cast<int>(n), static_cast<int>(r));
          SolveOptions opt;
          opt.strategies = false;
          auto start = std::chrono::steady_clock::now();
          Solution sol = solve(game, opt);
          std::chrono::duration<double> dt =
              std::chrono::steady_clock::now() - start;
          (void)sol;
          std::cout << args.family << "," << n << "," << r << ","
                    << std::fixed << std::setprecision(6) << dt.count()
                    << "\n";
        }
      }
      return kOk;
    }
    // Gap mode: exact convergence curve of the r-coin family at the top
    // coin, with the closed form and the generic per-r-steps bound
    // (1 - 2^-r)^floor(t/r) alongside for overlay.
    std::vector<std::int64_t> ts = parse_int_list(args.t_spec);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::cout << "family,r,t,gap,closed_form,direct_bound\n";
    for (std::int64_t r : rs) {
      if (r < 1) throw std::invalid_argument("gap mode requires r >= 1");
      SimpleStochasticGame game =
          args.family == "extremal"
              ? gen_extremal(static_cast<int>(r), static_cast<int>(r))
              : gen_chain(static_cast<int>(r), static_cast<int>(r));
      mpz_class pow2r = 1;
      pow2r <<= r;
      Rational base = make_rational(pow2r - 1, pow2r);
      MviRun run(game, Rounding::exact());
      for (std::int64_t t : ts) {
        run.advance_until(t);
        Rational gap = Rational(1) - run.value_at(static_cast<int>(r))
                                         .to_rational();
        mpz_class pow2t = 1;
        mpz_pow_ui(pow2t.get_mpz_t(), mpz_class(2).get_mpz_t(),
                   static_cast<unsigned long>(t));
        Rational closed =
            make_rational(fib_r_step(t + 2, static_cast<int>(r)), pow2t);
        std::int64_t i = t / r;
        Rational bound(1);
        for (std::int64_t j = 0; j < i; ++j) bound *= base;
        std::cout << args.family << "," << r << "," << t << ","
                  << format_rational(gap) << "," << format_rational(closed)
                  << "," << format_rational(bound) << "\n";
      }
    }
    return kOk;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and toolbox for simple stochastic games"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* cmd_solve = app.add_subcommand(
      "solve", "Solve a game exactly (values and optional strategies)");
  cmd_solve->add_option("file", solve_args.path, "input .ssg file, or -")
      ->required();
  cmd_solve->add_option("--bound", solve_args.bound,
                        "iteration budget: extremal or direct")
      ->check(CLI::IsMember({"extremal", "direct"}));
  cmd_solve->add_option("--precision-bits", solve_args.precision_bits,
                        "override working precision (experts only)")
      ->check(CLI::PositiveNumber);
  cmd_solve->add_option("--max-coins", solve_args.max_coins,
                        "refuse games with more coin positions (default 24)")
      ->check(CLI::PositiveNumber);
  cmd_solve->add_flag("--strategies", solve_args.strategies,
                      "also print optimal strategies");
  cmd_solve->add_flag("--trace-dgg", solve_args.trace_dgg,
                      "dump the final retrograde class structure to stderr");

  OracleArgs oracle_args;
  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "Exact values by brute-force strategy enumeration");
  cmd_oracle->add_option("file", oracle_args.path, "input .ssg file, or -")
      ->required();
  cmd_oracle->add_option("--max-bits", oracle_args.max_bits,
                         "player-position cap (2^bits pairs, default 20)")
      ->check(CLI::PositiveNumber);
  cmd_oracle->add_flag("--serial", oracle_args.serial,
                       "force the single-threaded reference path");

  GenArgs gen_args;
  CLI::App* cmd_gen =
      app.add_subcommand("gen", "Generate a game in .ssg format");
  cmd_gen->require_subcommand(1);
  CLI::App* gen_extremal_cmd = cmd_gen->add_subcommand(
      "extremal", "slow-convergence coin chain with reset");
  CLI::App* gen_chain_cmd =
      cmd_gen->add_subcommand("chain", "deterministic chain to GOAL");
  CLI::App* gen_random_cmd =
      cmd_gen->add_subcommand("random", "seeded uniform random arcs");
  for (CLI::App* sub : {gen_extremal_cmd, gen_chain_cmd, gen_random_cmd}) {
    sub->add_option("--n", gen_args.n, "number of positions")->required();
    sub->add_option("--r", gen_args.r, "number of coin positions")
        ->required();
    sub->add_option("--output,-o", gen_args.output,
                    "output file (default stdout)");
  }
  gen_random_cmd->add_option("--max", gen_args.max_count,
                             "number of Max positions")
      ->required();
  gen_random_cmd->add_option("--min", gen_args.min_count,
                             "number of Min positions")
      ->required();
  gen_random_cmd->add_option("--seed", gen_args.seed,
                             "SplitMix64 seed (default 1)");

  TimedArgs timed_args;
  CLI::App* cmd_timed = app.add_subcommand(
      "timed", "Values of the t-toss truncated game as CSV");
  cmd_timed->add_option("file", timed_args.path, "input .ssg file, or -")
      ->required();
  cmd_timed->add_option("--t", timed_args.t_spec,
                        "toss budget: single t, list, or range a..b")
      ->required();
  cmd_timed->add_flag("--exact", timed_args.exact,
                      "exact averages (precision grows with t)");
  cmd_timed->add_option("--precision-bits", timed_args.precision_bits,
                        "fractional bits for floor rounding");
  cmd_timed->add_flag("--unmodified", timed_args.unmodified,
                      "classical value iteration instead of the "
                      "retrograde-accelerated form");

  std::string check_path;
  CLI::App* cmd_check =
      app.add_subcommand("check", "Validate a .ssg file (report to stdout)");
  cmd_check->add_option("file", check_path, "input .ssg file, or -")
      ->required();

  BenchArgs bench_args;
  CLI::App* cmd_bench = app.add_subcommand(
      "bench",
      "CSV benchmarks: wall time per solve (with --n), or exact "
      "convergence-gap curves (without --n)");
  cmd_bench->add_option("--family", bench_args.family, "chain or extremal")
      ->check(CLI::IsMember({"chain", "extremal"}));
  cmd_bench->add_option("--n", bench_args.n_spec,
                        "position counts (list/range) -> timing mode");
  cmd_bench->add_option("--r", bench_args.r_spec,
                        "coin counts (list/range)")
      ->required();
  cmd_bench->add_option("--t", bench_args.t_spec,
                        "toss budgets for gap mode (default 0..40)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*cmd_solve) return run_solve(solve_args);
    if (*cmd_oracle) return run_oracle(oracle_args);
    if (*cmd_gen) {
      gen_args.family = gen_extremal_cmd->parsed()
                            ? "extremal"
                            : (gen_chain_cmd->parsed() ? "chain" : "random");
      return run_gen(gen_args);
    }
    if (*cmd_timed) return run_timed(timed_args);
    if (*cmd_check) return run_check(check_path);
    if (*cmd_bench) return run_bench(bench_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}
