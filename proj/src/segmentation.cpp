#include "segmarket/segmentation.hpp"

#include <exception>
#include <thread>

#include "segmarket/bertrand.hpp"
#include "segmarket/cournot.hpp"

namespace segmarket::segmentation {

namespace {

struct Candidate {
    double value = -1.0;
    std::vector<std::size_t> ranks;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) {
        return a.value > b.value;
    }
    if (a.ranks.size() != b.ranks.size()) {
        return a.ranks.size() < b.ranks.size();
    }
    return a.ranks < b.ranks;
}

std::vector<std::size_t> ranks_of_mask(std::uint64_t mask) {
    std::vector<std::size_t> ranks;
    for (std::size_t bit = 0; mask != 0; ++bit, mask >>= 1) {
        if (mask & 1u) {
            ranks.push_back(bit);
        }
    }
    return ranks;
}

}  // namespace

double outcome_value(const ProductCatalog& catalog, const DisplaySet& display, Game game,
                     Objective objective, const SolverConfig& config) {
    if (display.empty()) {
        return 0.0;
    }
    if (game == Game::bertrand) {
        const auto eq = bertrand::solve(catalog, display, config);
        return objective == Objective::welfare ? eq.welfare : eq.revenue;
    }
    const auto eq = cournot::solve(catalog, display, config);
    return objective == Objective::welfare ? eq.welfare : eq.revenue;
}

std::vector<double> objective_curve(const ProductCatalog& catalog, Game game,
                                    Objective objective, const SolverConfig& config) {
    config.validate();
    if (catalog.empty()) {
        throw std::invalid_argument("segmentation: catalog must be non-empty");
    }
    std::vector<double> curve(catalog.size() + 1, 0.0);
    for (std::size_t k = 1; k <= catalog.size(); ++k) {
        try {
            curve[k] =
                outcome_value(catalog, DisplaySet::top(catalog, k), game, objective, config);
        } catch (const ConvergenceError& err) {
            throw ConvergenceError(
                std::string(err.what()) + " (top-" + std::to_string(k) + " prefix)",
                err.report());
        }
    }
    return curve;
}

Result optimize(const ProductCatalog& catalog, Game game, Objective objective,
                const SolverConfig& config) {
    Result result;
    result.game = game;
    result.objective = objective;
    result.curve = objective_curve(catalog, game, objective, config);

    if (game == Game::bertrand && objective == Objective::welfare) {
        // Adding any product raises equilibrium welfare, so the full catalog
        // is optimal without consulting the scan.
        result.k_star = catalog.size();
    } else {
        std::size_t best = 0;
        for (std::size_t k = 1; k < result.curve.size(); ++k) {
            if (result.curve[k] > result.curve[best]) {
                best = k;
            }
        }
        result.k_star = best;
    }
    result.chosen = DisplaySet::top(catalog, result.k_star);
    result.objective_value = result.curve[result.k_star];
    return result;
}

OracleResult brute_force_optimize(const ProductCatalog& catalog, Game game, Objective objective,
                                  const SolverConfig& config, unsigned threads) {
    config.validate();
    if (catalog.empty()) {
        throw std::invalid_argument("oracle: catalog must be non-empty");
    }
    if (catalog.size() > config.oracle_max_products) {
        throw std::invalid_argument("oracle: catalog exceeds oracle_max_products (" +
                                    std::to_string(config.oracle_max_products) + ")");
    }

    const std::uint64_t total = (std::uint64_t{1} << catalog.size()) - 1;
    auto evaluate_range = [&](std::uint64_t first, std::uint64_t last, Candidate& best) {
        for (std::uint64_t mask = first; mask <= last; ++mask) {
            Candidate candidate{0.0, ranks_of_mask(mask)};
            const auto display = DisplaySet::of(catalog, candidate.ranks);
            candidate.value = outcome_value(catalog, display, game, objective, config);
            if (better(candidate, best)) {
                best = std::move(candidate);
            }
        }
    };

    unsigned requested = threads != 0 ? threads : std::thread::hardware_concurrency();
    requested = std::max(1u, requested);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(requested, total));

    std::vector<Candidate> bests(workers);
    if (workers == 1) {
        evaluate_range(1, total, bests[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> failures(workers);
        const std::uint64_t chunk = total / workers;
        for (unsigned t = 0; t < workers; ++t) {
            const std::uint64_t first = 1 + t * chunk;
            const std::uint64_t last = t + 1 == workers ? total : first + chunk - 1;
            pool.emplace_back([&, t, first, last] {
                try {
                    evaluate_range(first, last, bests[t]);
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) {
            worker.join();
        }
        for (const auto& failure : failures) {
            if (failure) {
                std::rethrow_exception(failure);
            }
        }
    }

    // The comparator is a strict total order over distinct subsets, so the
    // merged winner does not depend on how the masks were partitioned.
    Candidate winner = bests[0];
    for (unsigned t = 1; t < workers; ++t) {
        if (!bests[t].ranks.empty() && better(bests[t], winner)) {
            winner = bests[t];
        }
    }
    return {DisplaySet::of(catalog, winner.ranks), winner.value};
}

}  // namespace segmarket::segmentation
