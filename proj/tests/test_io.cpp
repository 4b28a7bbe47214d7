#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "segmarket/io.hpp"

using namespace segmarket;
using test_helpers::make_catalog;

TEST_CASE("csv catalogs parse into canonical order") {
    const auto catalog = io::parse_catalog_csv("id,quality\na,1.0\nb,2.5\n");
    REQUIRE(catalog.size() == 2);
    CHECK(catalog.id(0) == "b");
    CHECK(catalog.quality(0) == 2.5);
    CHECK(catalog.id(1) == "a");
}

TEST_CASE("csv rejects malformed input") {
    CHECK_THROWS_AS(io::parse_catalog_csv(""), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_csv("id\na\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\na\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\na,zero\n"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\na,1\na,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\na,-1\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\na,301\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_catalog_csv("id,quality\na,nan\n"), std::invalid_argument);
}

TEST_CASE("json catalogs") {
    const auto catalog =
        io::parse_catalog_json(R"([{"id":"x","quality":3},{"id":"y","quality":0.5}])");
    REQUIRE(catalog.size() == 2);
    CHECK(catalog.id(0) == "x");

    CHECK_THROWS_AS(io::parse_catalog_json("[]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_json("{}"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_json(R"([{"id":"x"}])"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_json(R"([{"id":1,"quality":1}])"), io::ParseError);
    CHECK_THROWS_AS(io::parse_catalog_json("[{"), io::ParseError);
}

TEST_CASE("digest depends on content, not input order") {
    const ProductCatalog forward({{"a", 1.0}, {"b", 2.0}});
    const ProductCatalog backward({{"b", 2.0}, {"a", 1.0}});
    const ProductCatalog changed({{"a", 1.0}, {"b", 2.125}});
    CHECK(io::catalog_digest(forward) == io::catalog_digest(backward));
    CHECK(io::catalog_digest(forward) != io::catalog_digest(changed));
    CHECK(io::catalog_digest(forward).rfind("fnv1a:", 0) == 0);
}

TEST_CASE("doubles render with 12 significant digits") {
    CHECK(io::format_double(0.5671432904097838) == "0.56714329041");
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(-0.0) == "0");
    CHECK(io::format_double(1e-7) == "1e-07");
}

TEST_CASE("json writer emits stable documents") {
    io::JsonWriter w;
    w.begin_object();
    w.key("name").value("a\"b");
    w.key("items").begin_array().value(1.5).value(true).null().end_array();
    w.key("nested").begin_object().key("k").value(2LL).end_object();
    w.end_object();
    CHECK(w.str() == R"({"name":"a\"b","items":[1.5,true,null],"nested":{"k":2}})");
}

TEST_CASE("scan reports serialize like result documents") {
    segmarket::verification::ScanReport report;
    report.instance = "demo";
    report.points = {{0.25, 1.5}, {0.5, 2.0}};
    CHECK(io::scan_report_to_json(report) ==
          R"({"instance":"demo","holds":true,"violated_at":null,"points":[[0.25,1.5],[0.5,2]]})");

    report.holds = false;
    report.violated_at = 0.5;
    CHECK(io::scan_report_to_json(report).find("\"violated_at\":0.5") != std::string::npos);
}

TEST_CASE("trace csv carries one row per update") {
    const auto catalog = make_catalog({1.0, 2.0});
    bertrand::DynamicsTrace trace;
    trace.entries.push_back({1, 0, 1.5, 0.25, 0.5});
    trace.entries.push_back({1, 1, 1.25, 0.5, 0.5});
    const auto csv = io::trace_to_csv(catalog, trace);
    CHECK(csv == "round,seller_id,price,potential,max_delta\n"
                 "1,p2,1.5,0.25,0.5\n"
                 "1,p1,1.25,0.5,0.5\n");
}
