#pragma once

#include "segmarket/types.hpp"

namespace segmarket::monopoly {

struct Outcome {
    Objective objective = Objective::welfare;
    PriceVector prices;
    DemandVector demands;
    double value = 0.0;
};

/// Welfare-optimal prices under full platform control: everything free,
/// value log(1 + sum exp(theta_i)). Display set must be non-empty.
Outcome welfare_optimal(const ProductCatalog& catalog, const DisplaySet& display);

/// Revenue-optimal prices under full platform control: a uniform price
/// 1 + omega with omega = W(sum exp(theta_i - 1)), value omega.
Outcome revenue_optimal(const ProductCatalog& catalog, const DisplaySet& display,
                        const SolverConfig& config = {});

}  // namespace segmarket::monopoly
