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

#include "qtk/neldermead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qtk/errors.hpp"

namespace qtk {

NelderMeadResult nelder_mead(const ObjectiveFn& f, const std::vector<double>& x0,
                             const NelderMeadOptions& opts) {
  const int dim = static_cast<int>(x0.size());
  if (dim < 1) throw ValidationError("nelder_mead: empty parameter vector");

  std::vector<std::vector<double>> verts(dim + 1, x0);
  for (int i = 0; i < dim; ++i) verts[i + 1][i] += opts.initial_step;
  std::vector<double> fv(dim + 1);
  for (int i = 0; i <= dim; ++i) fv[i] = f(verts[i]);

  std::vector<int> order(dim + 1);
  NelderMeadResult result;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    const int best = order[0], worst = order[dim], second_worst = order[dim - 1];

    // Stop on combined value-spread and simplex-size criteria.
    double size = 0.0;
    for (int i = 0; i <= dim; ++i)
      for (int d = 0; d < dim; ++d)
        size = std::max(size, std::abs(verts[i][d] - verts[best][d]));
    if (std::abs(fv[worst] - fv[best]) < opts.tolerance && size < opts.tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (int i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (int d = 0; d < dim; ++d) centroid[d] += verts[i][d];
    }
    for (double& c : centroid) c /= dim;

    auto blend = [&](double coeff) {
      std::vector<double> p(dim);
      for (int d = 0; d < dim; ++d) p[d] = centroid[d] + coeff * (centroid[d] - verts[worst][d]);
      return p;
    };

    const std::vector<double> reflected = blend(opts.reflection);
    const double fr = f(reflected);
    if (fr < fv[best]) {
      const std::vector<double> expanded = blend(opts.expansion);
      const double fe = f(expanded);
      if (fe < fr) {
        verts[worst] = expanded;
        fv[worst] = fe;
      } else {
        verts[worst] = reflected;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      verts[worst] = reflected;
      fv[worst] = fr;
      continue;
    }
    const std::vector<double> contracted = blend(fr < fv[worst] ? opts.contraction
                                                                : -opts.contraction);
    const double fc = f(contracted);
    if (fc < std::min(fr, fv[worst])) {
      verts[worst] = contracted;
      fv[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (int d = 0; d < dim; ++d)
        verts[i][d] = verts[best][d] + opts.shrink * (verts[i][d] - verts[best][d]);
      fv[i] = f(verts[i]);
    }
  }

  const auto best_it = std::min_element(fv.begin(), fv.end());
  result.x = verts[best_it - fv.begin()];
  result.value = *best_it;
  result.iterations = iter;
  return result;
}

NelderMeadResult nelder_mead_multistart(const ObjectiveFn& f, int dim,
                                        const MultiStartOptions& opts, Rng& rng) {
  if (dim < 1) throw ValidationError("nelder_mead_multistart: dimension must be >= 1");
  if (opts.lower.size() != static_cast<std::size_t>(dim) ||
      opts.upper.size() != static_cast<std::size_t>(dim))
    throw ValidationError("nelder_mead_multistart: bounds must match the dimension");

  NelderMeadResult best;
  bool have_best = false;
  auto consider = [&](const std::vector<double>& x0) {
    const NelderMeadResult r = nelder_mead(f, x0, opts.local);
    // The simplex keeps its start point, so r.value <= f(x0) always.
    if (!have_best || r.value < best.value) {
      best = r;
      have_best = true;
    }
  };

  for (const auto& seed : opts.seeds) {
    if (seed.size() != static_cast<std::size_t>(dim))
      throw ValidationError("nelder_mead_multistart: seed dimension mismatch");
    consider(seed);
  }
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> x0(dim);
    for (int d = 0; d < dim; ++d)
      x0[d] = opts.lower[d] + random_unit(rng) * (opts.upper[d] - opts.lower[d]);
    consider(x0);
  }
  return best;
}

}  // namespace qtk
