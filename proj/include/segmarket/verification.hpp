#pragma once

#include <array>

#include "segmarket/types.hpp"

namespace segmarket::verification {

/// Grid-based check of a continuous-domain claim: deterministic for a given
/// instance and grid size. `points` holds the evaluated (abscissa, value)
/// pairs; on failure `violated_at` is the first offending abscissa.
struct ScanReport {
    std::string instance;
    std::vector<std::array<double, 2>> points;
    bool holds = true;
    double violated_at = 0.0;
};

/// The increasing sigmoidal map (1 - (1-q)^2) / ((1-q)^2 / q + 1) on (0,1).
/// Satisfies the reflection identity f(q) + f(1-q) = 1 and f(q) <= q below
/// one half.
double share_sigmoid(double q);

/// (1/q^2 - 2/(1-q)^3) / (1/q + 1/(1-q)^2)^2 on (0,1); the curvature factor
/// of the share response. Decreases from 1 at q -> 0 to -1/3 at q = 1/2.
double curvature_ratio(double q);

/// Checks that equilibrium welfare, written as a function of the outside
/// share q0 with the displayed set held fixed, has negative finite-difference
/// slope across the whole q0 interval reachable by adding one more product.
ScanReport welfare_slope_scan(const ProductCatalog& catalog, const DisplaySet& display,
                              const SolverConfig& config = {}, std::size_t grid_size = 200);

/// Checks the no-interior-maximum consequence of quasi-convexity for the
/// equilibrium revenue as a function of q0 over the same interval: the grid
/// maximum may not beat both endpoints. Requires at least one unselected
/// product.
ScanReport revenue_quasiconvexity_scan(const ProductCatalog& catalog,
                                       const DisplaySet& selected,
                                       const SolverConfig& config = {},
                                       std::size_t grid_size = 200);

/// Checks W(x) >= 2x / (e + x) on a grid over [1/e, 2 e^2].
ScanReport lambert_bound_scan(const SolverConfig& config = {}, std::size_t grid_size = 10000);

}  // namespace segmarket::verification
