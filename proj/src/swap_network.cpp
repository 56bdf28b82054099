// Copyright 2026 The qtk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtk/swap_network.hpp"

#include <numeric>

#include "qtk/errors.hpp"

namespace qtk {

SwapNetwork swap_network_linear(int n) {
  if (n < 2) throw ValidationError("swap_network_linear needs at least two qubits");
  SwapNetwork net;
  net.num_qubits = n;
  std::vector<int> position_of(n);  // logical -> position
  std::iota(position_of.begin(), position_of.end(), 0);
  std::vector<int> token_at(n);  // position -> logical
  std::iota(token_at.begin(), token_at.end(), 0);

  for (int layer = 0; layer < n; ++layer) {
    std::vector<std::pair<int, int>> swaps;
    for (int pos = layer % 2; pos + 1 < n; pos += 2) swaps.emplace_back(pos, pos + 1);
    if (swaps.empty()) continue;  // n = 2 has no odd layer
    for (const auto& [a, b] : swaps) {
      std::swap(token_at[a], token_at[b]);
      position_of[token_at[a]] = a;
      position_of[token_at[b]] = b;
    }
    net.layers.push_back(std::move(swaps));
  }
  net.final_position = position_of;
  return net;
}

}  // namespace qtk
