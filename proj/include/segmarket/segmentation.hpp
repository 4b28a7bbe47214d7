#pragma once

#include "segmarket/types.hpp"

namespace segmarket::segmentation {

struct Result {
    Game game = Game::bertrand;
    Objective objective = Objective::welfare;
    DisplaySet chosen;
    std::size_t k_star = 0;
    double objective_value = 0.0;
    std::vector<double> curve;  // curve[k] = objective of the top-k prefix, k = 0..n
};

struct OracleResult {
    DisplaySet chosen;
    double value = 0.0;
};

/// Equilibrium welfare or revenue of one game on one display set; an empty
/// display set yields 0.
double outcome_value(const ProductCatalog& catalog, const DisplaySet& display, Game game,
                     Objective objective, const SolverConfig& config = {});

/// Objective of every top-k prefix, k = 0..n (one equilibrium solve per k).
std::vector<double> objective_curve(const ProductCatalog& catalog, Game game,
                                    Objective objective, const SolverConfig& config = {});

/// Optimal display set for the given game and objective. Price competition
/// with the welfare objective always displays everything; the other three
/// combinations pick the smallest k maximizing the top-k prefix value.
Result optimize(const ProductCatalog& catalog, Game game, Objective objective,
                const SolverConfig& config = {});

/// Ground-truth optimum by enumerating all 2^n - 1 non-empty subsets.
/// Ties break toward smaller cardinality, then lexicographically smaller
/// ranks, so the result is identical for any thread count (0 = use all
/// hardware threads). Refuses catalogs larger than config.oracle_max_products.
OracleResult brute_force_optimize(const ProductCatalog& catalog, Game game, Objective objective,
                                  const SolverConfig& config = {}, unsigned threads = 0);

}  // namespace segmarket::segmentation
