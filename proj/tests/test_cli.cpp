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
// End-to-end tests that invoke the built command-line binary (its path
// is injected at compile time as SSG_CLI_PATH).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("ssg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

/// Runs "<cli> <args>" through the shell, capturing exit code and both
/// output streams.
CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
  fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string("'") + SSG_CLI_PATH + "' " + args + " >'" +
                    out.string() + "' 2>'" + err.string() + "'";
  int status = std::system(cmd.c_str());
  int code = -1;
  if (status != -1 && WIFEXITED(status)) code = WEXITSTATUS(status);
  return CmdResult{code, slurp(out), slurp(err)};
}

const char* game_b() { return "ssg 2 1\n1 AVE 0 2\n2 MIN 2 2\n"; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve: exact output bytes for a tiny game") {
  fs::path g = write_file("b.ssg", game_b());
  CmdResult r = run_cli("solve " + g.string());
  CHECK(r.code == 0);
  CHECK(r.out == "value 0 1/1\nvalue 1 1/2\nvalue 2 0/1\n");
  CHECK(r.err.empty());

  CmdResult rs = run_cli("solve --strategies " + g.string());
  CHECK(rs.code == 0);
  CHECK(rs.out ==
        "value 0 1/1\nvalue 1 1/2\nvalue 2 0/1\nstrategy min 2 0\n");
}

TEST_CASE("solve: reads the game from standard input as '-'") {
  fs::path g = write_file("b_stdin.ssg", game_b());
  CmdResult r = run_cli("solve - < '" + g.string() + "'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "value 1 1/2\n"));
}

TEST_CASE("solve: slow-convergence family is all ones in both bound modes") {
  CmdResult gen = run_cli("gen extremal --n 5 --r 3 -o '" +
                          (scratch_dir() / "e53.ssg").string() + "'");
  CHECK(gen.code == 0);
  for (const char* bound : {"extremal", "direct"}) {
    CmdResult r = run_cli("solve --bound " + std::string(bound) + " '" +
                          (scratch_dir() / "e53.ssg").string() + "'");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "value 0 1/1\nvalue 1 1/1\nvalue 2 1/1\nvalue 3 1/1\n"
          "value 4 1/1\nvalue 5 1/1\n");
  }
}

TEST_CASE("solve and oracle print line-identical values") {
  fs::path g = write_file("cmp.ssg",
                          "ssg 4 1\n1 MAX 2 3\n2 AVE 0 4\n3 MIN 2 4\n"
                          "4 MIN 4 4\n");
  CmdResult s = run_cli("solve " + g.string());
  CmdResult o = run_cli("oracle " + g.string());
  CHECK(s.code == 0);
  CHECK(o.code == 0);
  CHECK(s.out == o.out);
}

TEST_CASE("oracle: serial flag gives the same answer") {
  fs::path g = write_file("ser.ssg",
                          "ssg 3 1\n1 MAX 2 3\n2 AVE 0 3\n3 MIN 0 2\n");
  CmdResult par = run_cli("oracle " + g.string());
  CmdResult ser = run_cli("oracle --serial " + g.string());
  CHECK(par.code == 0);
  CHECK(ser.code == 0);
  CHECK(par.out == ser.out);
}

TEST_CASE("timed: exact CSV contains the five-toss closed-form row") {
  fs::path e = scratch_dir() / "e32.ssg";
  CHECK(run_cli("gen extremal --n 3 --r 2 -o '" + e.string() + "'").code ==
        0);
  CmdResult r = run_cli("timed --exact --t 0..2 '" + e.string() + "'");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "t,position,value\n"));
  CHECK(contains(r.out, "\n0,2,0/1\n"));
  CHECK(contains(r.out, "\n2,2,1/4\n"));
}

TEST_CASE("timed: floor mode prints mantissa-precision values") {
  fs::path g = write_file("bt.ssg", game_b());
  CmdResult r = run_cli("timed --t 1 --precision-bits 3 " + g.string());
  CHECK(r.code == 0);
  CHECK(r.out == "t,position,value\n1,0,8p3\n1,1,4p3\n1,2,0p3\n");
}

TEST_CASE("timed: unmodified iteration lags the accelerated one") {
  fs::path g = write_file("bu.ssg", game_b());
  CmdResult r = run_cli("timed --exact --unmodified --t 1 " + g.string());
  CHECK(r.code == 0);
  // One synchronous backup also reaches 1/2 here.
  CHECK(contains(r.out, "1,1,1/2\n"));
}

TEST_CASE("check: quiet success, reported failure") {
  fs::path good = write_file("good.ssg", game_b());
  CmdResult ok = run_cli("check " + good.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());

  fs::path bad = write_file("bad.ssg", "ssg 2 1\n1 AVE 0 2\n");
  CmdResult fail = run_cli("check " + bad.string());
  CHECK(fail.code == 1);
  CHECK(contains(fail.err, "line"));
}

TEST_CASE("missing file and malformed input exit with code 1") {
  CmdResult missing = run_cli("solve /nonexistent/game.ssg");
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "cannot open"));

  fs::path bad = write_file("mal.ssg", "ssg two 1\n");
  CmdResult mal = run_cli("solve " + bad.string());
  CHECK(mal.code == 1);
  CHECK(contains(mal.err, "line 1"));
}

TEST_CASE("resource limits exit with code 2") {
  fs::path big = scratch_dir() / "chain26.ssg";
  CHECK(run_cli("gen chain --n 26 --r 26 -o '" + big.string() + "'").code ==
        0);
  CmdResult r = run_cli("solve '" + big.string() + "'");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "exceeds"));

  fs::path wide = scratch_dir() / "wide.ssg";
  CHECK(run_cli("gen random --n 21 --r 0 --max 21 --min 0 --seed 3 -o '" +
                wide.string() + "'")
            .code == 0);
  CmdResult o = run_cli("oracle '" + wide.string() + "'");
  CHECK(o.code == 2);

  // A tightened cap rejects games the default would accept.
  fs::path small = scratch_dir() / "chain3.ssg";
  CHECK(run_cli("gen chain --n 3 --r 3 -o '" + small.string() + "'").code ==
        0);
  CHECK(run_cli("solve '" + small.string() + "'").code == 0);
  CHECK(run_cli("solve --max-coins 2 '" + small.string() + "'").code == 2);
}

TEST_CASE("gen: deterministic output with a seed comment") {
  std::string flags = "gen random --n 9 --r 3 --max 3 --min 3 --seed 5 -o ";
  fs::path a = scratch_dir() / "ra.ssg";
  fs::path b = scratch_dir() / "rb.ssg";
  CHECK(run_cli(flags + "'" + a.string() + "'").code == 0);
  CHECK(run_cli(flags + "'" + b.string() + "'").code == 0);
  std::string ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(contains(ta, "# gen random n=9 r=3 max=3 min=3 seed=5\n"));
  CHECK(contains(ta, "ssg 9 3\n"));

  // The generated file is valid and solvable.
  CHECK(run_cli("check '" + a.string() + "'").code == 0);
  CHECK(run_cli("solve '" + a.string() + "'").code == 0);
}

TEST_CASE("gen: invalid parameters exit with code 1") {
  CmdResult r = run_cli("gen extremal --n 3 --r 0");
  CHECK(r.code == 1);
}

TEST_CASE("bench: gap curve of the slow family matches its closed form") {
  CmdResult r = run_cli("bench --family extremal --r 2,3 --t 0..6");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  CHECK(std::getline(lines, line));
  CHECK(line == "family,r,t,gap,closed_form,direct_bound");
  int rows = 0;
  while (std::getline(lines, line)) {
    // family,r,t,gap,closed_form,direct_bound
    std::istringstream cells(line);
    std::string family, rs, ts, gap, closed, bound;
    CHECK(std::getline(cells, family, ','));
    CHECK(std::getline(cells, rs, ','));
    CHECK(std::getline(cells, ts, ','));
    CHECK(std::getline(cells, gap, ','));
    CHECK(std::getline(cells, closed, ','));
    CHECK(std::getline(cells, bound, ','));
    CHECK(family == "extremal");
    CHECK(gap == closed);
    ++rows;
  }
  CHECK(rows == 14);
}

TEST_CASE("bench: timing mode emits one row per size") {
  CmdResult r = run_cli("bench --family chain --n 50,100 --r 2");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  CHECK(std::getline(lines, line));
  CHECK(line == "family,n,r,seconds");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("chain,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("trace-dgg: class structure goes to stderr") {
  fs::path g = write_file("tr.ssg", game_b());
  CmdResult r = run_cli("solve --trace-dgg " + g.string());
  CHECK(r.code == 0);
  CHECK(contains(r.err, "dgg classes"));
  CHECK(contains(r.err, "dgg order"));
  CHECK_FALSE(contains(r.out, "dgg"));
}

TEST_CASE("help exits cleanly, bad flags do not") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("solve --help").code == 0);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("timed --t nonsense - < /dev/null").code == 1);
}
