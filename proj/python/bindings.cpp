#include <optional>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "segmarket/bertrand.hpp"
#include "segmarket/cournot.hpp"
#include "segmarket/io.hpp"
#include "segmarket/market.hpp"
#include "segmarket/monopoly.hpp"
#include "segmarket/segmentation.hpp"
#include "segmarket/special_functions.hpp"
#include "segmarket/verification.hpp"

namespace py = pybind11;
using namespace segmarket;

namespace {

Game game_from(const std::string& text) {
    if (text == "bertrand") {
        return Game::bertrand;
    }
    if (text == "cournot") {
        return Game::cournot;
    }
    throw std::invalid_argument("game must be 'bertrand' or 'cournot'");
}

Objective objective_from(const std::string& text) {
    if (text == "welfare") {
        return Objective::welfare;
    }
    if (text == "revenue") {
        return Objective::revenue;
    }
    throw std::invalid_argument("objective must be 'welfare' or 'revenue'");
}

ProductCatalog catalog_from(const std::vector<std::pair<std::string, double>>& entries) {
    std::vector<Product> products;
    products.reserve(entries.size());
    for (const auto& [id, quality] : entries) {
        products.push_back({id, quality});
    }
    return ProductCatalog(std::move(products));
}

using MaybeRanks = std::optional<std::vector<std::size_t>>;

DisplaySet display_from(const ProductCatalog& catalog, const MaybeRanks& ranks) {
    return ranks ? DisplaySet::of(catalog, *ranks) : DisplaySet::all(catalog);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Logit-demand market equilibria and display-set optimization";

    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<ProductCatalog>(m, "Catalog")
        .def(py::init(&catalog_from), py::arg("entries"),
             "Build a catalog from (id, quality) pairs; products are kept in "
             "non-increasing quality order with stable ties.")
        .def("__len__", &ProductCatalog::size)
        .def_property_readonly("ids",
                               [](const ProductCatalog& c) {
                                   std::vector<std::string> ids;
                                   for (std::size_t r = 0; r < c.size(); ++r) {
                                       ids.push_back(c.id(r));
                                   }
                                   return ids;
                               })
        .def_property_readonly("qualities",
                               [](const ProductCatalog& c) {
                                   std::vector<double> qs;
                                   for (std::size_t r = 0; r < c.size(); ++r) {
                                       qs.push_back(c.quality(r));
                                   }
                                   return qs;
                               })
        .def_property_readonly("input_positions", &ProductCatalog::input_positions);

    py::class_<DisplaySet>(m, "DisplaySet")
        .def_property_readonly("ranks", &DisplaySet::ranks)
        .def("__len__", &DisplaySet::size);

    py::class_<DemandVector>(m, "DemandVector")
        .def_readonly("demands", &DemandVector::demands)
        .def_readonly("outside_share", &DemandVector::outside_share);

    py::class_<ScalarSolveReport>(m, "SolveReport")
        .def_readonly("value", &ScalarSolveReport::value)
        .def_readonly("residual", &ScalarSolveReport::residual)
        .def_readonly("iterations", &ScalarSolveReport::iterations);

    py::class_<bertrand::Equilibrium>(m, "BertrandEquilibrium")
        .def_readonly("display", &bertrand::Equilibrium::display)
        .def_readonly("prices", &bertrand::Equilibrium::prices)
        .def_readonly("demands", &bertrand::Equilibrium::demands)
        .def_readonly("welfare", &bertrand::Equilibrium::welfare)
        .def_readonly("revenue", &bertrand::Equilibrium::revenue)
        .def_readonly("solve_report", &bertrand::Equilibrium::solve_report);

    py::class_<bertrand::TraceEntry>(m, "TraceEntry")
        .def_readonly("round", &bertrand::TraceEntry::round)
        .def_readonly("rank", &bertrand::TraceEntry::rank)
        .def_readonly("price", &bertrand::TraceEntry::price)
        .def_readonly("potential", &bertrand::TraceEntry::potential)
        .def_readonly("max_delta", &bertrand::TraceEntry::max_delta);

    py::class_<cournot::Equilibrium>(m, "CournotEquilibrium")
        .def_readonly("display", &cournot::Equilibrium::display)
        .def_readonly("w_values", &cournot::Equilibrium::w_values)
        .def_readonly("prices", &cournot::Equilibrium::prices)
        .def_readonly("demands", &cournot::Equilibrium::demands)
        .def_readonly("welfare", &cournot::Equilibrium::welfare)
        .def_readonly("revenue", &cournot::Equilibrium::revenue);

    py::class_<monopoly::Outcome>(m, "MonopolyOutcome")
        .def_readonly("prices", &monopoly::Outcome::prices)
        .def_readonly("demands", &monopoly::Outcome::demands)
        .def_readonly("value", &monopoly::Outcome::value);

    py::class_<segmentation::Result>(m, "SegmentationResult")
        .def_readonly("chosen", &segmentation::Result::chosen)
        .def_readonly("k_star", &segmentation::Result::k_star)
        .def_readonly("objective_value", &segmentation::Result::objective_value)
        .def_readonly("curve", &segmentation::Result::curve);

    py::class_<segmentation::OracleResult>(m, "OracleResult")
        .def_readonly("chosen", &segmentation::OracleResult::chosen)
        .def_readonly("value", &segmentation::OracleResult::value);

    py::class_<verification::ScanReport>(m, "ScanReport")
        .def_readonly("instance", &verification::ScanReport::instance)
        .def_readonly("points", &verification::ScanReport::points)
        .def_readonly("holds", &verification::ScanReport::holds)
        .def_readonly("violated_at", &verification::ScanReport::violated_at);

    m.def("lambert_w", [](double x) { return lambert_w(x); }, py::arg("x"));
    m.def("lambert_v", [](double x) { return lambert_v(x); }, py::arg("x"));
    m.def("lambert_v_derivative", [](double x) { return lambert_v_derivative(x); },
          py::arg("x"));

    m.def(
        "mnl_demand",
        [](const ProductCatalog& c, const PriceVector& prices, const MaybeRanks& display) {
            return mnl_demand(c, display_from(c, display), prices);
        },
        py::arg("catalog"), py::arg("prices"), py::arg("display") = py::none());
    m.def(
        "price_from_demand",
        [](const ProductCatalog& c, const std::vector<double>& demands, double outside,
           const MaybeRanks& display) {
            return price_from_demand(c, display_from(c, display), {demands, outside});
        },
        py::arg("catalog"), py::arg("demands"), py::arg("outside_share"),
        py::arg("display") = py::none());
    m.def(
        "buyer_utility",
        [](const ProductCatalog& c, const PriceVector& prices, const MaybeRanks& display) {
            return buyer_utility(c, display_from(c, display), prices);
        },
        py::arg("catalog"), py::arg("prices"), py::arg("display") = py::none());
    m.def(
        "social_welfare",
        [](const ProductCatalog& c, const PriceVector& prices, const MaybeRanks& display) {
            return social_welfare(c, display_from(c, display), prices);
        },
        py::arg("catalog"), py::arg("prices"), py::arg("display") = py::none());
    m.def(
        "total_revenue",
        [](const ProductCatalog& c, const PriceVector& prices, const MaybeRanks& display) {
            return total_revenue(c, display_from(c, display), prices);
        },
        py::arg("catalog"), py::arg("prices"), py::arg("display") = py::none());

    m.def(
        "bertrand_solve",
        [](const ProductCatalog& c, const MaybeRanks& display) {
            return bertrand::solve(c, display_from(c, display));
        },
        py::arg("catalog"), py::arg("display") = py::none());
    m.def(
        "best_response",
        [](const ProductCatalog& c, const PriceVector& prices, std::size_t member,
           const MaybeRanks& display) {
            return bertrand::best_response(c, display_from(c, display), prices, member);
        },
        py::arg("catalog"), py::arg("prices"), py::arg("member"),
        py::arg("display") = py::none());
    m.def(
        "potential",
        [](const ProductCatalog& c, const PriceVector& prices, const MaybeRanks& display) {
            return bertrand::potential(c, display_from(c, display), prices);
        },
        py::arg("catalog"), py::arg("prices"), py::arg("display") = py::none());
    m.def(
        "best_response_dynamics",
        [](const ProductCatalog& c, const PriceVector& initial, const MaybeRanks& display,
           int max_rounds, double tol) {
            SolverConfig config;
            if (max_rounds > 0) {
                config.max_dynamics_rounds = max_rounds;
            }
            if (tol > 0.0) {
                config.dynamics_tol = tol;
            }
            auto result =
                bertrand::best_response_dynamics(c, display_from(c, display), initial, config);
            return py::make_tuple(result.equilibrium, result.trace.entries, result.rounds);
        },
        py::arg("catalog"), py::arg("initial"), py::arg("display") = py::none(),
        py::arg("max_rounds") = 0, py::arg("tol") = 0.0);

    m.def(
        "cournot_solve",
        [](const ProductCatalog& c, const MaybeRanks& display) {
            return cournot::solve(c, display_from(c, display));
        },
        py::arg("catalog"), py::arg("display") = py::none());

    m.def(
        "monopoly_welfare_optimal",
        [](const ProductCatalog& c, const MaybeRanks& display) {
            return monopoly::welfare_optimal(c, display_from(c, display));
        },
        py::arg("catalog"), py::arg("display") = py::none());
    m.def(
        "monopoly_revenue_optimal",
        [](const ProductCatalog& c, const MaybeRanks& display) {
            return monopoly::revenue_optimal(c, display_from(c, display));
        },
        py::arg("catalog"), py::arg("display") = py::none());

    m.def(
        "optimize",
        [](const ProductCatalog& c, const std::string& game, const std::string& objective) {
            return segmentation::optimize(c, game_from(game), objective_from(objective));
        },
        py::arg("catalog"), py::arg("game"), py::arg("objective"));
    m.def(
        "objective_curve",
        [](const ProductCatalog& c, const std::string& game, const std::string& objective) {
            return segmentation::objective_curve(c, game_from(game), objective_from(objective));
        },
        py::arg("catalog"), py::arg("game"), py::arg("objective"));
    m.def(
        "brute_force_optimize",
        [](const ProductCatalog& c, const std::string& game, const std::string& objective,
           std::size_t max_products, unsigned threads) {
            SolverConfig config;
            if (max_products > 0) {
                config.oracle_max_products = max_products;
            }
            return segmentation::brute_force_optimize(c, game_from(game),
                                                      objective_from(objective), config,
                                                      threads);
        },
        py::arg("catalog"), py::arg("game"), py::arg("objective"),
        py::arg("max_products") = 0, py::arg("threads") = 0);

    m.def("share_sigmoid", &verification::share_sigmoid, py::arg("q"));
    m.def("curvature_ratio", &verification::curvature_ratio, py::arg("q"));
    m.def(
        "welfare_slope_scan",
        [](const ProductCatalog& c, const MaybeRanks& display, std::size_t grid) {
            return verification::welfare_slope_scan(
                c, display ? DisplaySet::of(c, *display) : DisplaySet(), {}, grid);
        },
        py::arg("catalog"), py::arg("display") = py::none(), py::arg("grid") = 200);
    m.def(
        "revenue_quasiconvexity_scan",
        [](const ProductCatalog& c, const MaybeRanks& selected, std::size_t grid) {
            return verification::revenue_quasiconvexity_scan(
                c, selected ? DisplaySet::of(c, *selected) : DisplaySet(), {}, grid);
        },
        py::arg("catalog"), py::arg("selected") = py::none(), py::arg("grid") = 200);
    m.def(
        "lambert_bound_scan",
        [](std::size_t grid) { return verification::lambert_bound_scan({}, grid); },
        py::arg("grid") = 10000);

    m.def("catalog_digest", &io::catalog_digest, py::arg("catalog"));
    m.def("read_catalog", &io::read_catalog_file, py::arg("path"));
}
