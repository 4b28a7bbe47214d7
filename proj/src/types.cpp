#include "segmarket/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace segmarket {

std::string to_string(Game game) {
    return game == Game::bertrand ? "bertrand" : "cournot";
}

std::string to_string(Objective objective) {
    return objective == Objective::welfare ? "welfare" : "revenue";
}

ProductCatalog::ProductCatalog(std::vector<Product> entries) {
    std::unordered_set<std::string> seen;
    for (const auto& entry : entries) {
        if (!std::isfinite(entry.quality)) {
            throw std::invalid_argument("catalog: quality of '" + entry.id + "' is not finite");
        }
        if (entry.quality < 0.0) {
            throw std::invalid_argument("catalog: quality of '" + entry.id + "' is negative");
        }
        if (entry.quality > kMaxQuality) {
            throw std::invalid_argument("catalog: quality of '" + entry.id +
                                        "' exceeds the cap of 300");
        }
        if (!seen.insert(entry.id).second) {
            throw std::invalid_argument("catalog: duplicate id '" + entry.id + "'");
        }
    }

    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&entries](std::size_t a, std::size_t b) {
        return entries[a].quality > entries[b].quality;
    });

    products_.reserve(entries.size());
    input_positions_ = order;
    for (std::size_t pos : order) {
        products_.push_back(std::move(entries[pos]));
    }
}

DisplaySet DisplaySet::all(const ProductCatalog& catalog) {
    DisplaySet set;
    set.ranks_.resize(catalog.size());
    std::iota(set.ranks_.begin(), set.ranks_.end(), std::size_t{0});
    return set;
}

DisplaySet DisplaySet::top(const ProductCatalog& catalog, std::size_t k) {
    if (k > catalog.size()) {
        throw std::invalid_argument("display set: top-k exceeds catalog size");
    }
    DisplaySet set;
    set.ranks_.resize(k);
    std::iota(set.ranks_.begin(), set.ranks_.end(), std::size_t{0});
    return set;
}

DisplaySet DisplaySet::of(const ProductCatalog& catalog, std::vector<std::size_t> ranks) {
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end()) {
        throw std::invalid_argument("display set: duplicate rank");
    }
    if (!ranks.empty() && ranks.back() >= catalog.size()) {
        throw std::invalid_argument("display set: rank out of range");
    }
    DisplaySet set;
    set.ranks_ = std::move(ranks);
    return set;
}

bool DisplaySet::contains(std::size_t rank) const {
    return std::binary_search(ranks_.begin(), ranks_.end(), rank);
}

DisplaySet DisplaySet::with(const ProductCatalog& catalog, std::size_t extra_rank) const {
    auto ranks = ranks_;
    ranks.push_back(extra_rank);
    return of(catalog, std::move(ranks));
}

DisplaySet DisplaySet::without(const ProductCatalog& catalog, std::size_t rank) const {
    auto ranks = ranks_;
    ranks.erase(std::remove(ranks.begin(), ranks.end(), rank), ranks.end());
    return of(catalog, std::move(ranks));
}

void SolverConfig::validate() const {
    if (!(residual_tol > 0.0) || !(step_tol > 0.0) || !(dynamics_tol > 0.0)) {
        throw std::invalid_argument("solver config: tolerances must be positive");
    }
    if (max_scalar_iters < 1 || max_dynamics_rounds < 1 || oracle_max_products < 1) {
        throw std::invalid_argument("solver config: iteration caps must be at least 1");
    }
}

}  // namespace segmarket
