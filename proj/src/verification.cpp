#include "segmarket/verification.hpp"

#include <cmath>
#include <sstream>

#include "segmarket/bertrand.hpp"
#include "segmarket/special_functions.hpp"

namespace segmarket::verification {

namespace {

constexpr double kE = 2.718281828459045235360287471;

double outside_share_of(const ProductCatalog& catalog, const DisplaySet& display,
                        const SolverConfig& config) {
    if (display.empty()) {
        return 1.0;
    }
    return bertrand::solve(catalog, display, config).demands.outside_share;
}

/// Smallest rank (hence highest quality) not in the display set, or the
/// catalog size when everything is selected.
std::size_t best_remaining(const ProductCatalog& catalog, const DisplaySet& display) {
    for (std::size_t rank = 0; rank < catalog.size(); ++rank) {
        if (!display.contains(rank)) {
            return rank;
        }
    }
    return catalog.size();
}

struct FixedSetCurves {
    const ProductCatalog& catalog;
    const DisplaySet& display;
    const SolverConfig& config;

    // Shares of the fixed set at a hypothetical outside share q0.
    double markup_and_sum(double q0, double& share_sum) const {
        double markups = 0.0;
        share_sum = 0.0;
        for (std::size_t rank : display.ranks()) {
            const double v =
                lambert_v(q0 * std::exp(catalog.quality(rank) - 1.0), config);
            markups += v / (1.0 - v);
            share_sum += v;
        }
        return markups;
    }

    double welfare(double q0) const {
        double share_sum = 0.0;
        const double markups = markup_and_sum(q0, share_sum);
        const double occupied = q0 + share_sum;
        return -std::log(q0) + markups + (1.0 - occupied) / occupied;
    }

    double revenue(double q0) const {
        double share_sum = 0.0;
        const double markups = markup_and_sum(q0, share_sum);
        return markups + 1.0 / (q0 + share_sum) - 1.0;
    }
};

}  // namespace

double share_sigmoid(double q) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("share_sigmoid: argument must lie in (0, 1)");
    }
    const double rest = (1.0 - q) * (1.0 - q);
    return (1.0 - rest) / (rest / q + 1.0);
}

double curvature_ratio(double q) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("curvature_ratio: argument must lie in (0, 1)");
    }
    const double one_minus = 1.0 - q;
    const double numerator = 1.0 / (q * q) - 2.0 / (one_minus * one_minus * one_minus);
    const double scale = 1.0 / q + 1.0 / (one_minus * one_minus);
    return numerator / (scale * scale);
}

ScanReport welfare_slope_scan(const ProductCatalog& catalog, const DisplaySet& display,
                              const SolverConfig& config, std::size_t grid_size) {
    config.validate();
    if (grid_size < 2) {
        throw std::invalid_argument("scan: grid size must be at least 2");
    }

    ScanReport report;
    const std::size_t candidate = best_remaining(catalog, display);
    if (candidate == catalog.size()) {
        report.instance = "welfare slope: all products already displayed, nothing to add";
        return report;
    }

    const double q0_max = outside_share_of(catalog, display, config);
    const double q0_min =
        outside_share_of(catalog, display.with(catalog, candidate), config);

    std::ostringstream label;
    label << "welfare slope: |S|=" << display.size() << " of n=" << catalog.size()
          << ", q0 in [" << q0_min << ", " << q0_max << "]";
    report.instance = label.str();

    const FixedSetCurves curves{catalog, display, config};
    report.points.reserve(grid_size);
    for (std::size_t j = 0; j < grid_size; ++j) {
        const double q0 =
            q0_min + (q0_max - q0_min) * static_cast<double>(j) / (grid_size - 1);
        report.points.push_back({q0, curves.welfare(q0)});
        const double h = 1e-6 * q0;
        const double slope = (curves.welfare(q0 + h) - curves.welfare(q0 - h)) / (2.0 * h);
        if (report.holds && !(slope < 0.0)) {
            report.holds = false;
            report.violated_at = q0;
        }
    }
    return report;
}

ScanReport revenue_quasiconvexity_scan(const ProductCatalog& catalog,
                                       const DisplaySet& selected, const SolverConfig& config,
                                       std::size_t grid_size) {
    config.validate();
    if (grid_size < 2) {
        throw std::invalid_argument("scan: grid size must be at least 2");
    }
    const std::size_t candidate = best_remaining(catalog, selected);
    if (candidate == catalog.size()) {
        throw std::invalid_argument("scan: need at least one unselected product");
    }

    const double q0_max = outside_share_of(catalog, selected, config);
    const double q0_min =
        outside_share_of(catalog, selected.with(catalog, candidate), config);

    ScanReport report;
    std::ostringstream label;
    label << "revenue quasi-convexity: |S|=" << selected.size() << " of n=" << catalog.size()
          << ", q0 in [" << q0_min << ", " << q0_max << "]";
    report.instance = label.str();

    const FixedSetCurves curves{catalog, selected, config};
    report.points.reserve(grid_size);
    double interior_max = -std::numeric_limits<double>::infinity();
    double interior_arg = q0_min;
    for (std::size_t j = 0; j < grid_size; ++j) {
        const double q0 =
            q0_min + (q0_max - q0_min) * static_cast<double>(j) / (grid_size - 1);
        const double value = curves.revenue(q0);
        report.points.push_back({q0, value});
        if (value > interior_max) {
            interior_max = value;
            interior_arg = q0;
        }
    }
    const double at_ends =
        std::max(report.points.front()[1], report.points.back()[1]);
    if (interior_max > at_ends + 1e-9) {
        report.holds = false;
        report.violated_at = interior_arg;
    }
    return report;
}

ScanReport lambert_bound_scan(const SolverConfig& config, std::size_t grid_size) {
    config.validate();
    if (grid_size < 2) {
        throw std::invalid_argument("scan: grid size must be at least 2");
    }
    const double lo = 1.0 / kE;
    const double hi = 2.0 * kE * kE;

    ScanReport report;
    report.instance = "lambert bound: W(x) >= 2x/(e+x) on [1/e, 2e^2]";
    report.points.reserve(grid_size);
    for (std::size_t j = 0; j < grid_size; ++j) {
        const double x = lo + (hi - lo) * static_cast<double>(j) / (grid_size - 1);
        const double margin = lambert_w(x, config) - 2.0 * x / (kE + x);
        report.points.push_back({x, margin});
        if (report.holds && !(margin >= 0.0)) {
            report.holds = false;
            report.violated_at = x;
        }
    }
    return report;
}

}  // namespace segmarket::verification
