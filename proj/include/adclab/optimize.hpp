// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "adclab/errors.hpp"

namespace adclab {

struct OptimizerResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Maximizes a scalar objective on [lo, hi]: a 64-point uniform scan picks
/// the bracket (so mildly multimodal objectives are handled), golden-section
/// shrinks it to width tol. Deterministic.
OptimizerResult maximize_scalar(const std::function<double(double)>& objective, double lo, double hi,
                                double tol = 1e-6);

/// Nelder-Mead maximization with deterministic seeded restarts. Restart 0
/// starts from x0, later restarts from seeded perturbations; the best result
/// across restarts wins. Angles are reported reduced to (-pi, pi] and
/// best_value is re-evaluated at the reduced point.
OptimizerResult maximize_simplex(const std::function<double(const std::vector<double>&)>& objective,
                                 const std::vector<double>& x0, int restarts = 8, double tol = 1e-7,
                                 unsigned seed = 0);

}  // namespace adclab
