#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "segmarket/market.hpp"

using namespace segmarket;
using test_helpers::make_catalog;
using test_helpers::random_catalog;

TEST_CASE("catalog canonical order is non-increasing with stable ties") {
    const ProductCatalog catalog({{"a", 1.0}, {"b", 3.0}, {"c", 3.0}, {"d", 0.0}});
    CHECK(catalog.id(0) == "b");
    CHECK(catalog.id(1) == "c");
    CHECK(catalog.id(2) == "a");
    CHECK(catalog.id(3) == "d");
    CHECK(catalog.input_positions() == std::vector<std::size_t>{1, 2, 0, 3});
}

TEST_CASE("catalog validation") {
    CHECK_THROWS_AS(ProductCatalog({{"a", -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(ProductCatalog({{"a", 301.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ProductCatalog({{"a", std::nan("")}}), std::invalid_argument);
    CHECK_THROWS_AS(ProductCatalog({{"a", 1.0}, {"a", 2.0}}), std::invalid_argument);
    CHECK_NOTHROW(ProductCatalog({{"a", 300.0}, {"b", 0.0}}));
}

TEST_CASE("display set validation") {
    const auto catalog = make_catalog({2.0, 1.0});
    CHECK_THROWS_AS(DisplaySet::of(catalog, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DisplaySet::of(catalog, {2}), std::invalid_argument);
    CHECK(DisplaySet::all(catalog).size() == 2);
    CHECK(DisplaySet::top(catalog, 1).ranks() == std::vector<std::size_t>{0});
}

TEST_CASE("mnl demand examples") {
    SUBCASE("single product, everything zero") {
        const auto catalog = make_catalog({0.0});
        const auto d = mnl_demand(catalog, DisplaySet::all(catalog), {0.0});
        CHECK(d.demands[0] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(d.outside_share == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("two symmetric products") {
        const auto catalog = make_catalog({0.0, 0.0});
        const auto d = mnl_demand(catalog, DisplaySet::all(catalog), {0.0, 0.0});
        CHECK(d.demands[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(d.demands[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(d.outside_share == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("quality offsets price") {
        const auto catalog = make_catalog({1.0});
        const auto d = mnl_demand(catalog, DisplaySet::all(catalog), {1.0});
        CHECK(d.demands[0] == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("empty display") {
        const auto catalog = make_catalog({1.0});
        const auto d = mnl_demand(catalog, DisplaySet(), {});
        CHECK(d.demands.empty());
        CHECK(d.outside_share == 1.0);
    }
}

TEST_CASE("price_from_demand examples and errors") {
    const auto catalog = make_catalog({0.0});
    SUBCASE("inverse of the half split") {
        const auto p = price_from_demand(catalog, DisplaySet::all(catalog), {{0.5}, 0.5});
        CHECK(p[0] == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("quality one") {
        const auto one = make_catalog({1.0});
        const auto p = price_from_demand(one, DisplaySet::all(one), {{0.5}, 0.5});
        CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("round trip at fixed prices") {
        const auto two = make_catalog({2.0, 1.0});
        const PriceVector prices{1.3, 0.7};
        const auto d = mnl_demand(two, DisplaySet::all(two), prices);
        const auto p = price_from_demand(two, DisplaySet::all(two), d);
        CHECK(p[0] == doctest::Approx(1.3).epsilon(1e-11));
        CHECK(p[1] == doctest::Approx(0.7).epsilon(1e-11));
    }
    SUBCASE("rejects non-positive shares and oversubscription") {
        CHECK_THROWS_AS(price_from_demand(catalog, DisplaySet::all(catalog), {{0.0}, 1.0}),
                        std::domain_error);
        CHECK_THROWS_AS(price_from_demand(catalog, DisplaySet::all(catalog), {{1.0}, 0.0}),
                        std::domain_error);
    }
}

TEST_CASE("welfare and revenue examples") {
    SUBCASE("buyer utility") {
        const auto catalog = make_catalog({0.0});
        CHECK(buyer_utility(catalog, DisplaySet(), {}) == 0.0);
        CHECK(buyer_utility(catalog, DisplaySet::all(catalog), {0.0}) ==
              doctest::Approx(std::log(2.0)).epsilon(1e-14));
        const auto two = make_catalog({1.0, 1.0});
        CHECK(buyer_utility(two, DisplaySet::all(two), {1.0, 1.0}) ==
              doctest::Approx(std::log(3.0)).epsilon(1e-14));
    }
    SUBCASE("welfare at zero prices equals buyer utility") {
        const auto catalog = make_catalog({2.0, 0.5, 1.0});
        const auto all = DisplaySet::all(catalog);
        const PriceVector free(3, 0.0);
        CHECK(social_welfare(catalog, all, free) ==
              doctest::Approx(buyer_utility(catalog, all, free)).epsilon(1e-14));
        CHECK(total_revenue(catalog, all, free) == 0.0);
        CHECK(social_welfare(catalog, DisplaySet(), {}) == 0.0);
    }
    SUBCASE("single product direct evaluation") {
        const auto catalog = make_catalog({1.0});
        const auto all = DisplaySet::all(catalog);
        CHECK(social_welfare(catalog, all, {1.0}) ==
              doctest::Approx(std::log(2.0) + 0.5).epsilon(1e-14));
        CHECK(total_revenue(catalog, all, {1.0}) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(seller_revenue(catalog, all, {1.0}, 0) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("two flat products, direct evaluation") {
        const auto catalog = make_catalog({0.0, 0.0});
        const auto all = DisplaySet::all(catalog);
        const double re = total_revenue(catalog, all, {1.0, 2.0});
        // (e^-1 + 2 e^-2) / (1 + e^-1 + e^-2)
        CHECK(re == doctest::Approx(0.42478961739555857).epsilon(1e-13));
        const double sw = social_welfare(catalog, all, {1.0, 2.0});
        const double u = buyer_utility(catalog, all, {1.0, 2.0});
        CHECK(sw - u == doctest::Approx(re).epsilon(1e-13));
    }
    SUBCASE("seller_revenue wants a displayed rank") {
        const auto catalog = make_catalog({1.0, 2.0});
        CHECK_THROWS_AS(seller_revenue(catalog, DisplaySet::top(catalog, 1), {1.0}, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("core model properties on random instances") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> price(0.0, 6.0);
    std::uniform_int_distribution<std::size_t> size(1, 7);

    for (int trial = 0; trial < 40; ++trial) {
        const auto catalog = random_catalog(rng, size(rng));
        const auto display = DisplaySet::all(catalog);
        PriceVector prices(catalog.size());
        for (auto& p : prices) {
            p = price(rng);
        }

        const auto d = mnl_demand(catalog, display, prices);
        double total = d.outside_share;
        for (double q : d.demands) {
            CHECK(q > 0.0);
            total += q;
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(demands_feasible(catalog, display, d));

        // duality, both directions
        const auto back = price_from_demand(catalog, display, d);
        for (std::size_t m = 0; m < prices.size(); ++m) {
            CHECK(std::abs(back[m] - prices[m]) <= 1e-10);
        }
        const auto forward = mnl_demand(catalog, display, back);
        for (std::size_t m = 0; m < prices.size(); ++m) {
            CHECK(std::abs(forward.demands[m] - d.demands[m]) <= 1e-10);
        }

        // accounting identity
        const double sw = social_welfare(catalog, display, prices);
        const double u = buyer_utility(catalog, display, prices);
        const double re = total_revenue(catalog, display, prices);
        CHECK(std::abs(sw - (u + re)) <= 1e-12);
    }
}

TEST_CASE("raising one price shifts demand away from it") {
    const auto catalog = make_catalog({2.0, 1.0, 0.5});
    const auto display = DisplaySet::all(catalog);
    const PriceVector base{1.0, 1.5, 0.25};
    const auto before = mnl_demand(catalog, display, base);
    for (std::size_t i = 0; i < base.size(); ++i) {
        PriceVector bumped = base;
        bumped[i] += 0.1;
        const auto after = mnl_demand(catalog, display, bumped);
        CHECK(after.demands[i] < before.demands[i]);
        CHECK(after.outside_share > before.outside_share);
        for (std::size_t j = 0; j < base.size(); ++j) {
            if (j != i) {
                CHECK(after.demands[j] > before.demands[j]);
            }
        }
    }
}

TEST_CASE("infeasible demands are detected") {
    const auto catalog = make_catalog({0.0});
    CHECK_FALSE(demands_feasible(catalog, DisplaySet::all(catalog), {{0.9}, 0.1}));
}

TEST_CASE("price vector validation") {
    const auto catalog = make_catalog({1.0, 2.0});
    const auto display = DisplaySet::all(catalog);
    CHECK_THROWS_AS(mnl_demand(catalog, display, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mnl_demand(catalog, display, {-0.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mnl_demand(catalog, display, {std::nan(""), 1.0}), std::invalid_argument);
}
