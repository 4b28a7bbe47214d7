#pragma once

#include "segmarket/types.hpp"

namespace segmarket {

/// MNL purchase probabilities at the given prices:
/// q_i = exp(theta_i - p_i) / (1 + sum_j exp(theta_j - p_j)), with the
/// outside option taking the remaining share.
DemandVector mnl_demand(const ProductCatalog& catalog, const DisplaySet& display,
                        const PriceVector& prices);

/// Inverse of mnl_demand: p_i = theta_i + log(1 - sum_j q_j) - log(q_i).
PriceVector price_from_demand(const ProductCatalog& catalog, const DisplaySet& display,
                              const DemandVector& demands);

/// Expected utility of the representative buyer, log(1 + sum_j exp(theta_j - p_j)).
double buyer_utility(const ProductCatalog& catalog, const DisplaySet& display,
                     const PriceVector& prices);

/// Buyer utility plus total seller revenue.
double social_welfare(const ProductCatalog& catalog, const DisplaySet& display,
                      const PriceVector& prices);

double total_revenue(const ProductCatalog& catalog, const DisplaySet& display,
                     const PriceVector& prices);

/// Revenue p_i * q_i of the seller at the given catalog rank (must be displayed).
double seller_revenue(const ProductCatalog& catalog, const DisplaySet& display,
                      const PriceVector& prices, std::size_t rank);

/// True when the implied prices are non-negative, i.e. q_i <= exp(theta_i) * q_0
/// for every displayed product (within tol). Equivalent to membership in the
/// feasible demand region: each per-product bound implies the corresponding
/// subset-sum constraint.
bool demands_feasible(const ProductCatalog& catalog, const DisplaySet& display,
                      const DemandVector& demands, double tol = 1e-12);

}  // namespace segmarket
