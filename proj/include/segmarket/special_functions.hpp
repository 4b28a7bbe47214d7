#pragma once

#include "segmarket/types.hpp"

namespace segmarket {

/// Principal-branch Lambert W on x >= 0: the w >= 0 with w * exp(w) = x.
/// Guarantees |w * exp(w) - x| <= residual_tol * max(1, x).
double lambert_w(double x, const SolverConfig& config = {});
ScalarSolveReport lambert_w_report(double x, const SolverConfig& config = {});

/// The market-share response V on x > 0: the v in (0, 1) with
/// v * exp(v / (1 - v)) = x. Strictly increasing and concave; plays the
/// role Lambert W plays for Cournot, but for the Bertrand fixed point.
/// Guarantees |v * exp(v / (1 - v)) - x| <= residual_tol * max(1, x).
double lambert_v(double x, const SolverConfig& config = {});
ScalarSolveReport lambert_v_report(double x, const SolverConfig& config = {});

/// dV/dx by implicit differentiation: 1 / (x * (1/V + 1/(1-V)^2)).
double lambert_v_derivative(double x, const SolverConfig& config = {});

}  // namespace segmarket
