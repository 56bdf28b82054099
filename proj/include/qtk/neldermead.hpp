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

#include <functional>
#include <vector>

#include "qtk/rng.hpp"

namespace qtk {

/// Shared derivative-free minimizer for the variational solvers.
struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double tolerance = 1e-8;   // simplex f-spread + size stop
  int max_iterations = 2000;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

/// Minimizes f from a single starting point.
NelderMeadResult nelder_mead(const ObjectiveFn& f, const std::vector<double>& x0,
                             const NelderMeadOptions& opts = {});

struct MultiStartOptions {
  NelderMeadOptions local;
  int restarts = 20;
  /// Box from which restart points are drawn, per dimension.
  std::vector<double> lower;
  std::vector<double> upper;
  /// Optional explicit starting points tried before the random restarts.
  std::vector<std::vector<double>> seeds;
};

/// Best of `restarts` random starts (plus explicit seeds); never returns a
/// point worse than the best seed.
NelderMeadResult nelder_mead_multistart(const ObjectiveFn& f, int dim,
                                        const MultiStartOptions& opts, Rng& rng);

}  // namespace qtk
