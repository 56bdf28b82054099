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

#pragma once

#include <utility>
#include <vector>

namespace qtk {

/// Odd-even transposition schedule on a line of n qubits. After the n layers
/// every unordered logical pair has been nearest-neighbour at least once and
/// the layout is the reversal permutation.
struct SwapNetwork {
  int num_qubits = 0;
  /// Each layer is a set of disjoint adjacent position pairs swapped together.
  std::vector<std::vector<std::pair<int, int>>> layers;
  /// final_position[logical qubit] after all layers.
  std::vector<int> final_position;
};

SwapNetwork swap_network_linear(int n);

}  // namespace qtk
