#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "segmarket/bertrand.hpp"
#include "segmarket/cournot.hpp"
#include "segmarket/io.hpp"
#include "segmarket/market.hpp"
#include "segmarket/monopoly.hpp"
#include "segmarket/segmentation.hpp"
#include "segmarket/types.hpp"

namespace {

using namespace segmarket;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr std::size_t kOracleHardCap = 22;

Game parse_game(const std::string& text) {
    if (text == "bertrand") {
        return Game::bertrand;
    }
    if (text == "cournot") {
        return Game::cournot;
    }
    throw io::ParseError("unknown game: " + text);
}

Objective parse_objective(const std::string& text) {
    if (text == "welfare") {
        return Objective::welfare;
    }
    if (text == "revenue") {
        return Objective::revenue;
    }
    throw io::ParseError("unknown objective: " + text);
}

DisplaySet resolve_display(const ProductCatalog& catalog, const std::string& csv) {
    if (csv.empty()) {
        return DisplaySet::all(catalog);
    }
    std::vector<std::size_t> ranks;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string id =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        bool found = false;
        for (std::size_t rank = 0; rank < catalog.size(); ++rank) {
            if (catalog.id(rank) == id) {
                ranks.push_back(rank);
                found = true;
                break;
            }
        }
        if (!found) {
            throw io::ParseError("display: unknown product id '" + id + "'");
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return DisplaySet::of(catalog, std::move(ranks));
}

void emit(const std::string& document, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << document << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw io::ParseError("cannot open output file: " + out_path);
    }
    out << document << "\n";
}

void write_ids(io::JsonWriter& w, const ProductCatalog& catalog, const DisplaySet& display) {
    w.begin_array();
    for (std::size_t rank : display.ranks()) {
        w.value(catalog.id(rank));
    }
    w.end_array();
}

void write_state(io::JsonWriter& w, const ProductCatalog& catalog, const DisplaySet& display,
                 const PriceVector& prices, const DemandVector& demands, double welfare,
                 double revenue) {
    w.begin_object();
    w.key("q0").value(demands.outside_share);
    w.key("welfare").value(welfare);
    w.key("revenue").value(revenue);
    w.key("products").begin_object();
    for (std::size_t m = 0; m < display.size(); ++m) {
        w.key(catalog.id(display.ranks()[m])).begin_object();
        w.key("price").value(prices[m]);
        w.key("demand").value(demands.demands[m]);
        w.end_object();
    }
    w.end_object();
    w.end_object();
}

void write_solver(io::JsonWriter& w, const ScalarSolveReport& report) {
    w.begin_object();
    w.key("iterations").value(static_cast<long long>(report.iterations));
    w.key("residual").value(report.residual);
    w.end_object();
}

struct EquilibriumArgs {
    std::string game;
    std::string catalog_path;
    std::string display_csv;
    std::string out_path;
};

int run_equilibrium(const EquilibriumArgs& args) {
    const Game game = parse_game(args.game);
    const ProductCatalog catalog = io::read_catalog_file(args.catalog_path);
    const DisplaySet display = resolve_display(catalog, args.display_csv);

    io::JsonWriter w;
    w.begin_object();
    w.key("command").value("equilibrium");
    w.key("game").value(to_string(game));
    w.key("objective").null();
    w.key("catalog_digest").value(io::catalog_digest(catalog));
    w.key("chosen_ids");
    write_ids(w, catalog, display);
    w.key("k_star").null();
    w.key("value").null();
    w.key("curve").null();
    w.key("equilibrium");
    ScalarSolveReport report;
    if (game == Game::bertrand) {
        const auto eq = bertrand::solve(catalog, display);
        write_state(w, catalog, display, eq.prices, eq.demands, eq.welfare, eq.revenue);
        report = eq.solve_report;
    } else {
        const auto eq = cournot::solve(catalog, display);
        write_state(w, catalog, display, eq.prices, eq.demands, eq.welfare, eq.revenue);
        report = {eq.demands.outside_share, 0.0, 0};
    }
    w.key("solver");
    write_solver(w, report);
    w.end_object();

    emit(w.str(), args.out_path);
    return kExitOk;
}

struct SegmentArgs {
    std::string game;
    std::string objective;
    std::string catalog_path;
    std::string out_path;
    bool with_curve = false;
};

int run_segment(const SegmentArgs& args) {
    const Game game = parse_game(args.game);
    const Objective objective = parse_objective(args.objective);
    const ProductCatalog catalog = io::read_catalog_file(args.catalog_path);

    const auto result = segmentation::optimize(catalog, game, objective);

    io::JsonWriter w;
    w.begin_object();
    w.key("command").value("segment");
    w.key("game").value(to_string(game));
    w.key("objective").value(to_string(objective));
    w.key("catalog_digest").value(io::catalog_digest(catalog));
    w.key("chosen_ids");
    write_ids(w, catalog, result.chosen);
    w.key("k_star").value(result.k_star);
    w.key("value").value(result.objective_value);
    w.key("curve");
    if (args.with_curve) {
        w.begin_array();
        for (std::size_t k = 0; k < result.curve.size(); ++k) {
            w.begin_array().value(k).value(result.curve[k]).end_array();
        }
        w.end_array();
    } else {
        w.null();
    }
    w.key("equilibrium");
    ScalarSolveReport report;
    if (game == Game::bertrand) {
        const auto eq = bertrand::solve(catalog, result.chosen);
        write_state(w, catalog, result.chosen, eq.prices, eq.demands, eq.welfare, eq.revenue);
        report = eq.solve_report;
    } else {
        const auto eq = cournot::solve(catalog, result.chosen);
        write_state(w, catalog, result.chosen, eq.prices, eq.demands, eq.welfare, eq.revenue);
        report = {eq.demands.outside_share, 0.0, 0};
    }
    w.key("solver");
    write_solver(w, report);
    w.end_object();

    emit(w.str(), args.out_path);
    return kExitOk;
}

struct DynamicsArgs {
    std::string catalog_path;
    std::string display_csv;
    std::string init;
    std::string trace_path;
    std::string out_path;
    int max_rounds = 0;     // 0 = config default
    double tol = 0.0;       // 0 = config default
};

PriceVector resolve_initial_prices(const std::string& init, const ProductCatalog& catalog,
                                   const DisplaySet& display) {
    const std::string prefix = "uniform:";
    if (init.rfind(prefix, 0) == 0) {
        const std::string number = init.substr(prefix.size());
        char* end = nullptr;
        const double price = std::strtod(number.c_str(), &end);
        if (number.empty() || end != number.c_str() + number.size()) {
            throw io::ParseError("init: cannot parse uniform price '" + number + "'");
        }
        if (!std::isfinite(price) || price < 0.0) {
            throw io::ParseError("init: uniform price must be finite and >= 0");
        }
        return PriceVector(display.size(), price);
    }
    return io::read_price_file(init, catalog, display);
}

void write_trace_file(const std::string& path, const ProductCatalog& catalog,
                      const bertrand::DynamicsTrace& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io::ParseError("cannot open trace file: " + path);
    }
    out << io::trace_to_csv(catalog, trace);
}

int run_dynamics(const DynamicsArgs& args) {
    const ProductCatalog catalog = io::read_catalog_file(args.catalog_path);
    const DisplaySet display = resolve_display(catalog, args.display_csv);
    const PriceVector initial = resolve_initial_prices(args.init, catalog, display);

    SolverConfig config;
    if (args.max_rounds > 0) {
        config.max_dynamics_rounds = args.max_rounds;
    }
    if (args.tol > 0.0) {
        config.dynamics_tol = args.tol;
    }

    bertrand::DynamicsResult result;
    try {
        result = bertrand::best_response_dynamics(catalog, display, initial, config);
    } catch (const bertrand::DynamicsDivergence& err) {
        write_trace_file(args.trace_path, catalog, err.trace());
        throw;
    }
    write_trace_file(args.trace_path, catalog, result.trace);

    io::JsonWriter w;
    w.begin_object();
    w.key("command").value("dynamics");
    w.key("game").value("bertrand");
    w.key("objective").null();
    w.key("catalog_digest").value(io::catalog_digest(catalog));
    w.key("chosen_ids");
    write_ids(w, catalog, display);
    w.key("k_star").null();
    w.key("value").null();
    w.key("curve").null();
    w.key("equilibrium");
    const auto& eq = result.equilibrium;
    write_state(w, catalog, display, eq.prices, eq.demands, eq.welfare, eq.revenue);
    w.key("solver");
    w.begin_object();
    w.key("iterations").value(static_cast<long long>(result.rounds));
    w.key("residual").value(eq.solve_report.residual);
    w.end_object();
    w.end_object();

    emit(w.str(), args.out_path);
    return kExitOk;
}

struct OracleArgs {
    std::string game;
    std::string objective;
    std::string catalog_path;
    std::string out_path;
    std::size_t max_products = 0;  // 0 = config default
};

unsigned oracle_threads_from_env() {
    const char* raw = std::getenv("SEGMENTER_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;  // machine parallelism
    }
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (*end != '\0' || value == 0 || value > 1024) {
        throw io::ParseError(std::string("SEGMENTER_THREADS: invalid value '") + raw + "'");
    }
    return static_cast<unsigned>(value);
}

int run_oracle(const OracleArgs& args) {
    const Game game = parse_game(args.game);
    const Objective objective = parse_objective(args.objective);
    const ProductCatalog catalog = io::read_catalog_file(args.catalog_path);

    SolverConfig config;
    if (args.max_products > 0) {
        if (args.max_products > kOracleHardCap) {
            throw io::ParseError("oracle: --max-products cannot exceed 22");
        }
        config.oracle_max_products = args.max_products;
    }

    const auto oracle =
        segmentation::brute_force_optimize(catalog, game, objective, config,
                                           oracle_threads_from_env());
    const auto mechanism = segmentation::optimize(catalog, game, objective, config);
    const bool agrees = std::abs(oracle.value - mechanism.objective_value) <= 1e-9;

    io::JsonWriter w;
    w.begin_object();
    w.key("command").value("oracle");
    w.key("game").value(to_string(game));
    w.key("objective").value(to_string(objective));
    w.key("catalog_digest").value(io::catalog_digest(catalog));
    w.key("chosen_ids");
    write_ids(w, catalog, oracle.chosen);
    w.key("k_star").null();
    w.key("value");
    w.begin_object();
    w.key("oracle").value(oracle.value);
    w.key("mechanism").value(mechanism.objective_value);
    w.key("agrees").value(agrees);
    w.end_object();
    w.key("curve").null();
    w.key("equilibrium").null();
    w.key("solver").null();
    w.end_object();

    emit(w.str(), args.out_path);
    return kExitOk;
}

struct BenchmarkArgs {
    std::string catalog_path;
    std::string out_path;
};

int run_benchmark(const BenchmarkArgs& args) {
    const ProductCatalog catalog = io::read_catalog_file(args.catalog_path);
    const DisplaySet all = DisplaySet::all(catalog);

    const auto mono_welfare = monopoly::welfare_optimal(catalog, all);
    const auto mono_revenue = monopoly::revenue_optimal(catalog, all);
    const auto eq_bertrand = bertrand::solve(catalog, all);
    const auto eq_cournot = cournot::solve(catalog, all);

    io::JsonWriter w;
    w.begin_object();
    w.key("command").value("benchmark");
    w.key("game").null();
    w.key("objective").null();
    w.key("catalog_digest").value(io::catalog_digest(catalog));
    w.key("chosen_ids");
    write_ids(w, catalog, all);
    w.key("k_star").null();
    w.key("value");
    w.begin_object();
    w.key("monopoly_welfare").value(mono_welfare.value);
    w.key("monopoly_revenue").value(mono_revenue.value);
    w.key("bertrand_welfare").value(eq_bertrand.welfare);
    w.key("bertrand_revenue").value(eq_bertrand.revenue);
    w.key("cournot_welfare").value(eq_cournot.welfare);
    w.key("cournot_revenue").value(eq_cournot.revenue);
    w.key("welfare_ratio_bertrand").value(mono_welfare.value / eq_bertrand.welfare);
    w.key("welfare_ratio_cournot").value(mono_welfare.value / eq_cournot.welfare);
    w.key("revenue_ratio_bertrand").value(mono_revenue.value / eq_bertrand.revenue);
    w.key("revenue_ratio_cournot").value(mono_revenue.value / eq_cournot.revenue);
    w.end_object();
    w.key("curve").null();
    w.key("equilibrium").null();
    w.key("solver").null();
    w.end_object();

    emit(w.str(), args.out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibria and display-set optimization for logit-demand markets"};
    app.require_subcommand(1);

    EquilibriumArgs eq_args;
    auto* eq_cmd = app.add_subcommand("equilibrium", "Solve one game on a display set");
    eq_cmd->add_option("--game", eq_args.game, "bertrand or cournot")->required();
    eq_cmd->add_option("--catalog", eq_args.catalog_path, "catalog CSV or JSON")->required();
    eq_cmd->add_option("--display", eq_args.display_csv, "comma-separated ids (default: all)");
    eq_cmd->add_option("--out", eq_args.out_path, "write the result document here");

    SegmentArgs seg_args;
    auto* seg_cmd = app.add_subcommand("segment", "Pick the optimal display set");
    seg_cmd->add_option("--game", seg_args.game, "bertrand or cournot")->required();
    seg_cmd->add_option("--objective", seg_args.objective, "welfare or revenue")->required();
    seg_cmd->add_option("--catalog", seg_args.catalog_path)->required();
    seg_cmd->add_flag("--curve", seg_args.with_curve, "include the per-k objective curve");
    seg_cmd->add_option("--out", seg_args.out_path);

    DynamicsArgs dyn_args;
    auto* dyn_cmd = app.add_subcommand("dynamics", "Run best-response price dynamics");
    dyn_cmd->add_option("--catalog", dyn_args.catalog_path)->required();
    dyn_cmd->add_option("--display", dyn_args.display_csv);
    dyn_cmd->add_option("--init", dyn_args.init, "uniform:<p> or a price CSV path")->required();
    dyn_cmd->add_option("--max-rounds", dyn_args.max_rounds)->check(CLI::PositiveNumber);
    dyn_cmd->add_option("--tol", dyn_args.tol)->check(CLI::PositiveNumber);
    dyn_cmd->add_option("--trace", dyn_args.trace_path, "per-update CSV trace")->required();
    dyn_cmd->add_option("--out", dyn_args.out_path);

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force the optimal display set");
    oracle_cmd->add_option("--game", oracle_args.game)->required();
    oracle_cmd->add_option("--objective", oracle_args.objective)->required();
    oracle_cmd->add_option("--catalog", oracle_args.catalog_path)->required();
    oracle_cmd->add_option("--max-products", oracle_args.max_products,
                           "raise the enumeration cap (at most 22)")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--out", oracle_args.out_path);

    BenchmarkArgs bench_args;
    auto* bench_cmd = app.add_subcommand("benchmark", "Full-control optima vs equilibria");
    bench_cmd->add_option("--catalog", bench_args.catalog_path)->required();
    bench_cmd->add_option("--out", bench_args.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err, std::cout, std::cerr);
        return kExitInput;
    }

    try {
        if (*eq_cmd) {
            return run_equilibrium(eq_args);
        }
        if (*seg_cmd) {
            return run_segment(seg_args);
        }
        if (*dyn_cmd) {
            return run_dynamics(dyn_args);
        }
        if (*oracle_cmd) {
            return run_oracle(oracle_args);
        }
        if (*bench_cmd) {
            return run_benchmark(bench_args);
        }
    } catch (const ConvergenceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitNoConvergence;
    } catch (const io::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}
