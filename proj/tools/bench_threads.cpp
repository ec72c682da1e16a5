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
// Benchmark of the brute-force oracle's parallel strategy sweep against
// its single-threaded reference. Both paths must produce identical
// values; the program aborts if they ever disagree.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ssg/generators.hpp"
#include "ssg/oracle.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2026;

#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif

  // Instance sizes chosen so the largest sweep is 2^18 chain solves.
  struct Case {
    int n, r, max_count, min_count;
  };
  const Case cases[] = {
      {13, 3, 5, 5},
      {17, 3, 7, 7},
      {20, 2, 9, 9},
  };

  std::cout << "n,r,player_bits,threads,serial_seconds,parallel_seconds,"
               "speedup\n";
  for (const Case& c : cases) {
    ssg::SimpleStochasticGame game =
        ssg::gen_random(c.n, c.r, c.max_count, c.min_count, seed);
    ssg::OracleLimits limits;

    auto t0 = std::chrono::steady_clock::now();
    ssg::RationalVector serial = ssg::enumerate_values_serial(game, limits);
    auto t1 = std::chrono::steady_clock::now();
    ssg::RationalVector parallel = ssg::enumerate_values(game, limits);
    auto t2 = std::chrono::steady_clock::now();

    if (serial != parallel) {
      std::cerr << "mismatch between serial and parallel oracle on n="
                << c.n << " seed=" << seed << "\n";
      return 1;
    }

    double ts = std::chrono::duration<double>(t1 - t0).count();
    double tp = std::chrono::duration<double>(t2 - t1).count();
    std::cout << c.n << "," << c.r << "," << (c.max_count + c.min_count)
              << "," << threads << "," << std::fixed << std::setprecision(4)
              << ts << "," << tp << "," << std::setprecision(2)
              << (tp > 0 ? ts / tp : 0.0) << "\n";
  }
  return 0;
}
