#include "segmarket/cournot.hpp"

#include <cmath>

#include "segmarket/special_functions.hpp"

namespace segmarket::cournot {

namespace {

double objective_sum(const std::vector<double>& w_values) {
    double sum = 0.0;
    for (double w : w_values) {
        sum += w * w + w;
    }
    return sum;
}

}  // namespace

Equilibrium solve(const ProductCatalog& catalog, const DisplaySet& display,
                  const SolverConfig& config) {
    config.validate();

    Equilibrium eq;
    eq.display = display;
    if (display.empty()) {
        return eq;  // nothing displayed: q0 = 1, zero welfare and revenue
    }

    const auto& ranks = display.ranks();
    const std::size_t n = ranks.size();
    eq.w_values.resize(n);
    double w_sum = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        eq.w_values[m] = lambert_w(std::exp(catalog.quality(ranks[m]) - 1.0), config);
        w_sum += eq.w_values[m];
    }

    eq.prices.resize(n);
    eq.demands.demands.resize(n);
    eq.demands.outside_share = 1.0 / (1.0 + w_sum);
    for (std::size_t m = 0; m < n; ++m) {
        eq.prices[m] = 1.0 + eq.w_values[m];
        eq.demands.demands[m] = eq.w_values[m] / (1.0 + w_sum);
    }
    eq.revenue = objective_sum(eq.w_values) / (1.0 + w_sum);
    eq.welfare = std::log1p(w_sum) + eq.revenue;

    // First-order stationarity: theta_i - 1 - w_i - log(w_i) = 0. A failure
    // here means the Lambert solve regressed, not that the input is bad.
    for (std::size_t m = 0; m < n; ++m) {
        const double w = eq.w_values[m];
        const double foc = catalog.quality(ranks[m]) - 1.0 - w - std::log(w);
        if (std::abs(foc) > 1e-8) {
            throw ConvergenceError("cournot: first-order condition check failed",
                                   {w, foc, 0});
        }
    }
    return eq;
}

double equilibrium_welfare(const Equilibrium& eq) {
    if (eq.w_values.empty()) {
        return 0.0;
    }
    double w_sum = 0.0;
    for (double w : eq.w_values) {
        w_sum += w;
    }
    return std::log1p(w_sum) + objective_sum(eq.w_values) / (1.0 + w_sum);
}

double equilibrium_revenue(const Equilibrium& eq) {
    if (eq.w_values.empty()) {
        return 0.0;
    }
    double w_sum = 0.0;
    for (double w : eq.w_values) {
        w_sum += w;
    }
    return objective_sum(eq.w_values) / (1.0 + w_sum);
}

}  // namespace segmarket::cournot
