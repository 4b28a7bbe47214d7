#include "segmarket/bertrand.hpp"

#include <cmath>

#include "segmarket/market.hpp"
#include "segmarket/special_functions.hpp"

namespace segmarket::bertrand {

namespace {

constexpr double kMaxExponent = 500.0;

double markup_sum(const std::vector<double>& shares) {
    double sum = 0.0;
    for (double q : shares) {
        sum += q / (1.0 - q);
    }
    return sum;
}

}  // namespace

Equilibrium solve(const ProductCatalog& catalog, const DisplaySet& display,
                  const SolverConfig& config) {
    config.validate();
    if (display.empty()) {
        throw std::invalid_argument("bertrand: display set must be non-empty");
    }

    const auto& ranks = display.ranks();
    const std::size_t n = ranks.size();
    std::vector<double> growth(n);  // exp(theta_i - 1)
    for (std::size_t m = 0; m < n; ++m) {
        growth[m] = std::exp(catalog.quality(ranks[m]) - 1.0);
    }

    std::vector<double> shares(n);
    auto excess = [&](double q0) {
        double sum = q0 - 1.0;
        for (std::size_t m = 0; m < n; ++m) {
            shares[m] = lambert_v(q0 * growth[m], config);
            sum += shares[m];
        }
        return sum;
    };

    // F is strictly increasing with F(0+) = -1 and F(1) > 0. The root can be
    // astronomically small for high-quality catalogs (q0 ~ exp(-theta)), so
    // the bracket starts at 1e-300 and bisection proceeds geometrically until
    // the endpoints are within a factor of a few.
    double lo = 1e-300;
    double hi = 1.0 - 1e-15;
    int iters = 0;
    while (hi - lo > 1e-3 * hi && iters < config.max_scalar_iters) {
        const double mid = hi / lo > 4.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
        ++iters;
    }

    double q0 = 0.5 * (lo + hi);
    double f = excess(q0);
    while (std::abs(f) > 0.5 * config.residual_tol && iters < config.max_scalar_iters) {
        (f < 0.0 ? lo : hi) = q0;
        // F'(q0) = 1 + sum_i exp(theta_i - 1) V'(q0 exp(theta_i - 1)),
        // expressed through the shares already solved at q0.
        double slope = 1.0;
        for (double q : shares) {
            const double one_minus = 1.0 - q;
            slope += 1.0 / (q0 * (1.0 / q + 1.0 / (one_minus * one_minus)));
        }
        double next = q0 - f / slope;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double moved = std::abs(next - q0);
        q0 = next;
        f = excess(q0);
        ++iters;
        if (moved <= config.step_tol * q0 && std::abs(f) <= config.residual_tol) {
            break;
        }
    }
    if (!(std::abs(f) <= config.residual_tol)) {
        throw ConvergenceError("bertrand: outside-share equation did not converge",
                               {q0, f, iters});
    }

    Equilibrium eq;
    eq.display = display;
    eq.demands.demands = shares;
    eq.demands.outside_share = q0;
    eq.prices.resize(n);
    const double log_q0 = std::log(q0);
    for (std::size_t m = 0; m < n; ++m) {
        eq.prices[m] = 1.0 / (1.0 - shares[m]);
        // Both price routes must agree: 1/(1-q_i) and the inverse demand
        // theta_i + log(q0) - log(q_i).
        const double via_demand = catalog.quality(ranks[m]) + log_q0 - std::log(shares[m]);
        if (std::abs(eq.prices[m] - via_demand) > 1e-8) {
            throw ConvergenceError("bertrand: price consistency check failed",
                                   {q0, eq.prices[m] - via_demand, iters});
        }
    }
    eq.revenue = markup_sum(shares);
    eq.welfare = -log_q0 + eq.revenue;
    eq.solve_report = {q0, f, iters};
    return eq;
}

double equilibrium_welfare(const Equilibrium& eq) {
    return -std::log(eq.demands.outside_share) + markup_sum(eq.demands.demands);
}

double equilibrium_revenue(const Equilibrium& eq) {
    return markup_sum(eq.demands.demands);
}

double best_response(const ProductCatalog& catalog, const DisplaySet& display,
                     const PriceVector& prices, std::size_t member, const SolverConfig& config) {
    if (prices.size() != display.size()) {
        throw std::invalid_argument("best_response: prices must match display set");
    }
    if (member >= display.size()) {
        throw std::invalid_argument("best_response: member index out of range");
    }
    double others = 1.0;
    for (std::size_t m = 0; m < prices.size(); ++m) {
        if (m == member) {
            continue;
        }
        if (!std::isfinite(prices[m]) || prices[m] < 0.0) {
            throw std::invalid_argument("best_response: rival prices must be finite and >= 0");
        }
        const double exponent = catalog.quality(display.ranks()[m]) - prices[m];
        if (exponent > kMaxExponent) {
            throw std::domain_error("best_response: rival attraction weight overflows");
        }
        others += std::exp(exponent);
    }
    const double theta = catalog.quality(display.ranks()[member]);
    const double w = lambert_w(std::exp(theta - 1.0) / others, config);
    return theta - std::log(others * w);
}

double potential(const ProductCatalog& catalog, const DisplaySet& display,
                 const PriceVector& prices) {
    if (prices.size() != display.size()) {
        throw std::invalid_argument("potential: prices must match display set");
    }
    double log_numerator = 0.0;
    double attraction = 0.0;
    for (std::size_t m = 0; m < prices.size(); ++m) {
        const double p = prices[m];
        if (!std::isfinite(p) || p < 0.0) {
            throw std::domain_error("potential: prices must be finite and non-negative");
        }
        if (p == 0.0) {
            return 0.0;  // boundary of the domain; the product vanishes
        }
        const double exponent = catalog.quality(display.ranks()[m]) - p;
        if (exponent > kMaxExponent) {
            throw std::domain_error("potential: attraction weight overflows");
        }
        log_numerator += std::log(p) + exponent;
        attraction += std::exp(exponent);
    }
    return std::exp(log_numerator - std::log1p(attraction));
}

DynamicsResult best_response_dynamics(const ProductCatalog& catalog, const DisplaySet& display,
                                      PriceVector initial, const SolverConfig& config) {
    config.validate();
    if (display.empty()) {
        throw std::invalid_argument("dynamics: display set must be non-empty");
    }
    if (initial.size() != display.size()) {
        throw std::invalid_argument("dynamics: initial prices must match display set");
    }
    for (double p : initial) {
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("dynamics: initial prices must be finite and >= 0");
        }
    }

    PriceVector prices = std::move(initial);
    DynamicsTrace trace;
    for (int round = 1; round <= config.max_dynamics_rounds; ++round) {
        double max_delta = 0.0;
        for (std::size_t m = 0; m < prices.size(); ++m) {
            const double updated = best_response(catalog, display, prices, m, config);
            max_delta = std::max(max_delta, std::abs(updated - prices[m]));
            prices[m] = updated;
            trace.entries.push_back(
                {round, display.ranks()[m], updated, potential(catalog, display, prices),
                 max_delta});
        }
        if (max_delta <= config.dynamics_tol) {
            Equilibrium eq;
            eq.display = display;
            eq.prices = prices;
            eq.demands = mnl_demand(catalog, display, prices);
            eq.welfare = social_welfare(catalog, display, prices);
            eq.revenue = total_revenue(catalog, display, prices);
            eq.solve_report = {eq.demands.outside_share, max_delta, round};
            return {std::move(eq), std::move(trace), round};
        }
    }
    throw DynamicsDivergence("dynamics: round cap reached without convergence",
                             {0.0, 0.0, config.max_dynamics_rounds}, std::move(trace));
}

}  // namespace segmarket::bertrand
