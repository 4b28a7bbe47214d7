#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace segmarket {

enum class Game { bertrand, cournot };
enum class Objective { welfare, revenue };

std::string to_string(Game game);
std::string to_string(Objective objective);

struct Product {
    std::string id;
    double quality = 0.0;
};

/// Immutable catalog of products held in canonical order: non-increasing
/// quality, ties kept in original input order. Qualities must be finite,
/// in [0, 300]; ids must be unique. The cap keeps exp(quality) representable
/// so all welfare formulas can be evaluated in direct space.
class ProductCatalog {
public:
    static constexpr double kMaxQuality = 300.0;

    ProductCatalog() = default;
    explicit ProductCatalog(std::vector<Product> entries);

    std::size_t size() const noexcept { return products_.size(); }
    bool empty() const noexcept { return products_.empty(); }

    /// Product at canonical rank (0 = highest quality).
    const Product& product(std::size_t rank) const { return products_.at(rank); }
    double quality(std::size_t rank) const { return products_.at(rank).quality; }
    const std::string& id(std::size_t rank) const { return products_.at(rank).id; }

    /// Canonical rank -> position in the original input list.
    const std::vector<std::size_t>& input_positions() const noexcept { return input_positions_; }

private:
    std::vector<Product> products_;
    std::vector<std::size_t> input_positions_;
};

/// Subset of catalog products selected for display, stored as sorted
/// canonical ranks. May be empty ("display nothing").
class DisplaySet {
public:
    DisplaySet() = default;

    static DisplaySet all(const ProductCatalog& catalog);
    static DisplaySet top(const ProductCatalog& catalog, std::size_t k);
    static DisplaySet of(const ProductCatalog& catalog, std::vector<std::size_t> ranks);

    std::size_t size() const noexcept { return ranks_.size(); }
    bool empty() const noexcept { return ranks_.empty(); }
    bool contains(std::size_t rank) const;

    /// Member ranks, ascending (i.e. best quality first).
    const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }

    DisplaySet with(const ProductCatalog& catalog, std::size_t extra_rank) const;
    DisplaySet without(const ProductCatalog& catalog, std::size_t rank) const;

private:
    std::vector<std::size_t> ranks_;
};

/// Prices aligned with DisplaySet::ranks().
using PriceVector = std::vector<double>;

/// Demand shares aligned with DisplaySet::ranks(), plus the outside option.
struct DemandVector {
    std::vector<double> demands;
    double outside_share = 1.0;
};

struct SolverConfig {
    double residual_tol = 1e-12;
    double step_tol = 1e-13;
    int max_scalar_iters = 200;
    int max_dynamics_rounds = 10000;
    double dynamics_tol = 1e-10;
    std::size_t oracle_max_products = 18;

    void validate() const;
};

struct ScalarSolveReport {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Thrown when an iterative solve fails to reach its tolerance. Carries the
/// last iterate so callers can report where the solve stalled.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, ScalarSolveReport report)
        : std::runtime_error(what), report_(report) {}

    const ScalarSolveReport& report() const noexcept { return report_; }

private:
    ScalarSolveReport report_;
};

}  // namespace segmarket
