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

#include "ssg/dgg.hpp"

namespace ssg {

DggSolver::DggSolver(const SimpleStochasticGame& game)
    : n_(game.n), kinds_(game.kinds) {
  for (int i = 1; i <= n_; ++i) {
    if (kinds_[i] == PositionKind::AVE) coin_positions_.push_back(i);
  }

  // Reverse CSR over player arcs only; coin arcs never propagate value
  // backwards here because coins are frozen as terminals.
  rev_offset_.assign(n_ + 2, 0);
  for (int u = 1; u <= n_; ++u) {
    if (kinds_[u] == PositionKind::AVE) continue;
    ++rev_offset_[game.successors[u][0] + 1];
    ++rev_offset_[game.successors[u][1] + 1];
  }
  for (int v = 0; v <= n_; ++v) rev_offset_[v + 1] += rev_offset_[v];
  rev_.resize(rev_offset_[n_ + 1]);
  std::vector<std::int32_t> cursor(rev_offset_.begin(),
                                   rev_offset_.end() - 1);
  for (int u = 1; u <= n_; ++u) {
    if (kinds_[u] == PositionKind::AVE) continue;
    for (int slot = 0; slot < 2; ++slot) {
      int v = game.successors[u][slot];
      rev_[cursor[v]++] = static_cast<std::int32_t>((u << 1) | slot);
    }
  }
}

}  // namespace ssg
