#include "segmarket/special_functions.hpp"

#include <cmath>
#include <limits>

namespace segmarket {

namespace {

constexpr double kE = 2.718281828459045235360287471;
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

ScalarSolveReport lambert_w_report(double x, const SolverConfig& config) {
    config.validate();
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("lambert_w: argument must be finite and non-negative");
    }
    if (x == 0.0) {
        return {0.0, 0.0, 0};
    }

    const double tol = config.residual_tol * std::max(1.0, x);
    auto residual = [x](double w) { return w * std::exp(w) - x; };

    // f(w) = w e^w - x is strictly increasing; f(0) = -x < 0 and the upper
    // end satisfies f >= 0: w = 1 covers x <= e, w = log x covers the rest.
    double lo = 0.0;
    double hi = x <= kE ? 1.0 : std::log(x);
    int iters = 0;
    while (hi - lo > 1e-3 * std::max(1.0, hi) && iters < config.max_scalar_iters) {
        const double mid = 0.5 * (lo + hi);
        (residual(mid) < 0.0 ? lo : hi) = mid;
        ++iters;
    }

    // Newton polish; the bracket stays current so a wild step degrades to
    // one bisection instead of leaving the domain.
    double w = 0.5 * (lo + hi);
    double r = residual(w);
    while (!(std::abs(r) <= 0.5 * tol) && iters < config.max_scalar_iters) {
        (r < 0.0 ? lo : hi) = w;
        double next = w - r / (std::exp(w) * (1.0 + w));
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (next == w) {
            break;  // sub-ulp step: w already is the machine root
        }
        w = next;
        r = residual(w);
        ++iters;
    }

    if (!(std::abs(r) <= tol)) {
        throw ConvergenceError("lambert_w: no convergence at x = " + std::to_string(x),
                               {w, r, iters});
    }
    return {w, r, iters};
}

double lambert_w(double x, const SolverConfig& config) {
    return lambert_w_report(x, config).value;
}

ScalarSolveReport lambert_v_report(double x, const SolverConfig& config) {
    config.validate();
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::domain_error("lambert_v: argument must be finite and positive");
    }

    // Iterate on the monotone transform phi(v) = log v + v/(1-v) - log x,
    // which stays well scaled both for v -> 0 and v -> 1, where the direct
    // form would lose precision or overflow. The direct residual relates to
    // it by r = x (e^phi - 1), so |phi| <= residual_tol/2 lands inside the
    // residual contract with room to spare.
    const double log_x = std::log(x);
    auto phi = [log_x](double v) { return std::log(v) + v / (1.0 - v) - log_x; };
    // phi cannot be resolved below its evaluation noise plus the change one
    // ulp of v induces (the latter dominates near v -> 1); demanding less
    // would spin forever on huge arguments
    auto phi_noise = [log_x](double v) {
        const double one_minus = 1.0 - v;
        const double per_ulp = (1.0 / v + 1.0 / (one_minus * one_minus)) * v;
        return kEps * (4.0 * (std::abs(std::log(v)) + v / one_minus + std::abs(log_x) + 1.0) +
                       2.0 * per_ulp);
    };

    // The root satisfies v = x e^{-v/(1-v)}, so for x < 1 it lies in
    // [x e^{-x/(1-x)}, x]; for larger x fall back to [0.25, 1) since
    // V(0.75) > 0.25 already.
    double lo, hi;
    if (x < 0.75) {
        hi = x;
        lo = x * std::exp(-x / (1.0 - x));
    } else {
        lo = 0.25;
        hi = 1.0;
    }

    int iters = 0;
    while (hi - lo > 1e-2 * hi && iters < config.max_scalar_iters) {
        const double mid = 0.5 * (lo + hi);
        (phi(mid) < 0.0 ? lo : hi) = mid;
        ++iters;
    }

    double v = 0.5 * (lo + hi);
    double p = phi(v);
    const double goal = 0.5 * config.residual_tol;
    while (!(std::abs(p) <= std::max(goal, phi_noise(v))) &&
           iters < config.max_scalar_iters) {
        (p < 0.0 ? lo : hi) = v;
        const double one_minus = 1.0 - v;
        double next = v - p / (1.0 / v + 1.0 / (one_minus * one_minus));
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (next == v) {
            break;  // sub-ulp step: v already is the machine root
        }
        v = next;
        p = phi(v);
        ++iters;
    }

    const double tol = config.residual_tol * std::max(1.0, x);
    const double r = v * std::exp(v / (1.0 - v)) - x;
    if (!(std::abs(r) <= tol) && !(std::abs(p) <= phi_noise(v))) {
        throw ConvergenceError("lambert_v: no convergence at x = " + std::to_string(x),
                               {v, r, iters});
    }
    return {v, r, iters};
}

double lambert_v(double x, const SolverConfig& config) {
    return lambert_v_report(x, config).value;
}

double lambert_v_derivative(double x, const SolverConfig& config) {
    const double v = lambert_v(x, config);
    const double one_minus = 1.0 - v;
    return 1.0 / (x * (1.0 / v + 1.0 / (one_minus * one_minus)));
}

}  // namespace segmarket
