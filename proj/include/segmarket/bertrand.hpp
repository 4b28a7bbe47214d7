#pragma once

#include "segmarket/types.hpp"

namespace segmarket::bertrand {

struct Equilibrium {
    DisplaySet display;
    PriceVector prices;
    DemandVector demands;
    double welfare = 0.0;
    double revenue = 0.0;
    ScalarSolveReport solve_report;
};

struct TraceEntry {
    int round = 0;
    std::size_t rank = 0;      // catalog rank of the updated seller
    double price = 0.0;        // that seller's new price
    double potential = 0.0;    // ordinal potential after the update
    double max_delta = 0.0;    // largest price move seen so far this round
};

struct DynamicsTrace {
    std::vector<TraceEntry> entries;
};

class DynamicsDivergence : public ConvergenceError {
public:
    DynamicsDivergence(const std::string& what, ScalarSolveReport report, DynamicsTrace trace)
        : ConvergenceError(what, report), trace_(std::move(trace)) {}

    const DynamicsTrace& trace() const noexcept { return trace_; }

private:
    DynamicsTrace trace_;
};

struct DynamicsResult {
    Equilibrium equilibrium;
    DynamicsTrace trace;
    int rounds = 0;
};

/// Unique price-competition Nash equilibrium on a non-empty display set.
/// Finds the root of F(q0) = q0 - 1 + sum_i V(q0 exp(theta_i - 1)), then
/// q_i = V(q0 exp(theta_i - 1)) and p_i = 1 / (1 - q_i).
Equilibrium solve(const ProductCatalog& catalog, const DisplaySet& display,
                  const SolverConfig& config = {});

/// -log(q0) + sum q_i / (1 - q_i), recomputed from the equilibrium shares.
double equilibrium_welfare(const Equilibrium& eq);

/// sum q_i / (1 - q_i).
double equilibrium_revenue(const Equilibrium& eq);

/// Revenue-maximizing price of the displayed seller at position `member`
/// (index into display.ranks()) against the other entries of `prices`;
/// the seller's own entry is ignored. Always at least 1.
double best_response(const ProductCatalog& catalog, const DisplaySet& display,
                     const PriceVector& prices, std::size_t member,
                     const SolverConfig& config = {});

/// Ordinal potential of the price game: (prod_i p_i a_i) / (1 + sum_j a_j)
/// with a_i = exp(theta_i - p_i). Zero if any price is zero; a unilateral
/// deviation raises a seller's revenue exactly when it raises this value.
double potential(const ProductCatalog& catalog, const DisplaySet& display,
                 const PriceVector& prices);

/// Round-robin best-response updates in canonical rank order, from the given
/// starting prices, until the largest price change in a full round drops to
/// config.dynamics_tol. Throws DynamicsDivergence (trace attached) when the
/// round cap is exceeded.
DynamicsResult best_response_dynamics(const ProductCatalog& catalog, const DisplaySet& display,
                                      PriceVector initial, const SolverConfig& config = {});

}  // namespace segmarket::bertrand
