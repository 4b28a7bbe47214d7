#include "segmarket/market.hpp"

#include <algorithm>
#include <cmath>

namespace segmarket {

namespace {

// exp(theta - p) with theta <= 300 and p >= 0 cannot overflow, but malformed
// callers could still pass exponents that would; 500 rejects those while
// leaving every representable market state reachable.
constexpr double kMaxExponent = 500.0;

void check_prices(const ProductCatalog& catalog, const DisplaySet& display,
                  const PriceVector& prices) {
    if (prices.size() != display.size()) {
        throw std::invalid_argument("prices: length must match display set");
    }
    for (std::size_t m = 0; m < prices.size(); ++m) {
        if (!std::isfinite(prices[m]) || prices[m] < 0.0) {
            throw std::invalid_argument("prices: entries must be finite and non-negative");
        }
        if (catalog.quality(display.ranks()[m]) - prices[m] > kMaxExponent) {
            throw std::domain_error("prices: exponent theta - p too large to normalize");
        }
    }
}

// 1 + sum of attraction weights exp(theta_i - p_i).
double attraction_denominator(const ProductCatalog& catalog, const DisplaySet& display,
                              const PriceVector& prices) {
    double sum = 0.0;
    for (std::size_t m = 0; m < prices.size(); ++m) {
        sum += std::exp(catalog.quality(display.ranks()[m]) - prices[m]);
    }
    return 1.0 + sum;
}

}  // namespace

DemandVector mnl_demand(const ProductCatalog& catalog, const DisplaySet& display,
                        const PriceVector& prices) {
    check_prices(catalog, display, prices);
    const double denom = attraction_denominator(catalog, display, prices);
    DemandVector result;
    result.demands.resize(prices.size());
    for (std::size_t m = 0; m < prices.size(); ++m) {
        result.demands[m] = std::exp(catalog.quality(display.ranks()[m]) - prices[m]) / denom;
    }
    result.outside_share = 1.0 / denom;
    return result;
}

PriceVector price_from_demand(const ProductCatalog& catalog, const DisplaySet& display,
                              const DemandVector& demands) {
    if (demands.demands.size() != display.size()) {
        throw std::invalid_argument("demands: length must match display set");
    }
    double total = 0.0;
    for (double q : demands.demands) {
        if (!std::isfinite(q) || q <= 0.0) {
            throw std::domain_error("demands: shares must be positive");
        }
        total += q;
    }
    if (total >= 1.0) {
        throw std::domain_error("demands: shares must sum to less than 1");
    }
    const double log_outside = std::log(1.0 - total);
    PriceVector prices(demands.demands.size());
    for (std::size_t m = 0; m < prices.size(); ++m) {
        prices[m] =
            catalog.quality(display.ranks()[m]) + log_outside - std::log(demands.demands[m]);
    }
    return prices;
}

double buyer_utility(const ProductCatalog& catalog, const DisplaySet& display,
                     const PriceVector& prices) {
    check_prices(catalog, display, prices);
    return std::log(attraction_denominator(catalog, display, prices));
}

double social_welfare(const ProductCatalog& catalog, const DisplaySet& display,
                      const PriceVector& prices) {
    return buyer_utility(catalog, display, prices) + total_revenue(catalog, display, prices);
}

double total_revenue(const ProductCatalog& catalog, const DisplaySet& display,
                     const PriceVector& prices) {
    const DemandVector demands = mnl_demand(catalog, display, prices);
    double revenue = 0.0;
    for (std::size_t m = 0; m < prices.size(); ++m) {
        revenue += prices[m] * demands.demands[m];
    }
    return revenue;
}

double seller_revenue(const ProductCatalog& catalog, const DisplaySet& display,
                      const PriceVector& prices, std::size_t rank) {
    const auto& ranks = display.ranks();
    const auto it = std::find(ranks.begin(), ranks.end(), rank);
    if (it == ranks.end()) {
        throw std::invalid_argument("seller_revenue: rank not displayed");
    }
    const std::size_t m = static_cast<std::size_t>(it - ranks.begin());
    return prices[m] * mnl_demand(catalog, display, prices).demands[m];
}

bool demands_feasible(const ProductCatalog& catalog, const DisplaySet& display,
                      const DemandVector& demands, double tol) {
    if (demands.demands.size() != display.size()) {
        throw std::invalid_argument("demands: length must match display set");
    }
    for (std::size_t m = 0; m < demands.demands.size(); ++m) {
        const double cap = std::exp(catalog.quality(display.ranks()[m])) * demands.outside_share;
        if (demands.demands[m] > cap * (1.0 + tol) + tol) {
            return false;
        }
    }
    return true;
}

}  // namespace segmarket
