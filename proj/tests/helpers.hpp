#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "segmarket/types.hpp"

namespace test_helpers {

inline segmarket::ProductCatalog make_catalog(const std::vector<double>& qualities) {
    std::vector<segmarket::Product> entries;
    for (std::size_t i = 0; i < qualities.size(); ++i) {
        entries.push_back({"p" + std::to_string(i + 1), qualities[i]});
    }
    return segmarket::ProductCatalog(std::move(entries));
}

inline segmarket::ProductCatalog random_catalog(std::mt19937& rng, std::size_t n,
                                                double quality_max = 10.0) {
    std::uniform_real_distribution<double> quality(0.0, quality_max);
    std::vector<double> qualities(n);
    for (auto& q : qualities) {
        q = quality(rng);
    }
    return make_catalog(qualities);
}

// Independent scalar oracles: plain bisection on the defining equations in
// direct space, no Newton, no transforms. Slow but trustworthy.

inline double naive_lambert_w(double x) {
    double lo = 0.0;
    double hi = std::max(1.0, std::log(std::max(x, 1.0))) + 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * std::exp(mid) - x < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

inline double naive_lambert_v(double x) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * std::exp(mid / (1.0 - mid)) - x < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Bisection on the equilibrium constraint q0 - 1 + sum_i V(q0 e^{theta_i - 1}),
// built on the naive V above.
inline double naive_bertrand_q0(const std::vector<double>& qualities) {
    auto excess = [&qualities](double q0) {
        double sum = q0 - 1.0;
        for (double theta : qualities) {
            sum += naive_lambert_v(q0 * std::exp(theta - 1.0));
        }
        return sum;
    };
    double lo = 1e-12;
    double hi = 1.0 - 1e-12;
    for (int i = 0; i < 120; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace test_helpers
