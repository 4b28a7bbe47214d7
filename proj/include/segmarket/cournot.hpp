#pragma once

#include "segmarket/types.hpp"

namespace segmarket::cournot {

struct Equilibrium {
    DisplaySet display;
    std::vector<double> w_values;  // W(exp(theta_i - 1)) per displayed product
    PriceVector prices;
    DemandVector demands;
    double welfare = 0.0;
    double revenue = 0.0;
};

/// Unique quantity-competition Nash equilibrium, in closed form:
/// w_i = W(exp(theta_i - 1)), q_i = w_i / (1 + sum w_j), p_i = 1 + w_i.
/// An empty display set yields the zero outcome.
Equilibrium solve(const ProductCatalog& catalog, const DisplaySet& display,
                  const SolverConfig& config = {});

/// log(1 + sum w_i) + sum (w_i^2 + w_i) / (1 + sum w_i).
double equilibrium_welfare(const Equilibrium& eq);

/// sum (w_i^2 + w_i) / (1 + sum w_i).
double equilibrium_revenue(const Equilibrium& eq);

}  // namespace segmarket::cournot
