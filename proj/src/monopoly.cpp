#include "segmarket/monopoly.hpp"

#include <cmath>

#include "segmarket/special_functions.hpp"

namespace segmarket::monopoly {

Outcome welfare_optimal(const ProductCatalog& catalog, const DisplaySet& display) {
    if (display.empty()) {
        throw std::invalid_argument("monopoly: display set must be non-empty");
    }
    const auto& ranks = display.ranks();
    Outcome outcome;
    outcome.objective = Objective::welfare;
    outcome.prices.assign(ranks.size(), 0.0);

    double attraction = 0.0;
    for (std::size_t rank : ranks) {
        attraction += std::exp(catalog.quality(rank));
    }
    outcome.demands.demands.resize(ranks.size());
    outcome.demands.outside_share = 1.0 / (1.0 + attraction);
    for (std::size_t m = 0; m < ranks.size(); ++m) {
        outcome.demands.demands[m] = std::exp(catalog.quality(ranks[m])) / (1.0 + attraction);
    }
    outcome.value = std::log1p(attraction);
    return outcome;
}

Outcome revenue_optimal(const ProductCatalog& catalog, const DisplaySet& display,
                        const SolverConfig& config) {
    if (display.empty()) {
        throw std::invalid_argument("monopoly: display set must be non-empty");
    }
    const auto& ranks = display.ranks();
    double shifted = 0.0;  // sum exp(theta_i - 1)
    for (std::size_t rank : ranks) {
        shifted += std::exp(catalog.quality(rank) - 1.0);
    }
    const double omega = lambert_w(shifted, config);

    Outcome outcome;
    outcome.objective = Objective::revenue;
    outcome.prices.assign(ranks.size(), 1.0 + omega);
    outcome.demands.demands.resize(ranks.size());
    outcome.demands.outside_share = 1.0 / (1.0 + omega);
    for (std::size_t m = 0; m < ranks.size(); ++m) {
        outcome.demands.demands[m] =
            std::exp(catalog.quality(ranks[m]) - 1.0 - omega) / (1.0 + omega);
    }
    outcome.value = omega;
    return outcome;
}

}  // namespace segmarket::monopoly
