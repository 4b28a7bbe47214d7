#pragma once

#include <string>
#include <string_view>

#include "segmarket/bertrand.hpp"
#include "segmarket/types.hpp"
#include "segmarket/verification.hpp"

namespace segmarket::io {

/// Malformed catalog or price file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a catalog from CSV (header `id,quality`) or a JSON array of
/// {"id": ..., "quality": ...} objects; the format is sniffed from the
/// first non-space character.
ProductCatalog read_catalog_file(const std::string& path);
ProductCatalog parse_catalog_csv(std::string_view text);
ProductCatalog parse_catalog_json(std::string_view text);

/// Content hash of the canonicalized catalog, stable across runs.
std::string catalog_digest(const ProductCatalog& catalog);

/// Reads a CSV price file (header `id,price`) covering exactly the given
/// display set; returns prices aligned with display.ranks().
PriceVector read_price_file(const std::string& path, const ProductCatalog& catalog,
                            const DisplaySet& display);

/// Renders a double with 12 significant digits (the result-document float
/// format); integers and bools render as themselves.
std::string format_double(double value);

/// Minimal streaming JSON writer with insertion-ordered keys and
/// format_double float rendering, so equal inputs serialize byte-identically.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(std::string_view text);
    JsonWriter& value(const char* text) { return value(std::string_view(text)); }
    JsonWriter& value(double number);
    JsonWriter& value(long long number);
    JsonWriter& value(std::size_t number) { return value(static_cast<long long>(number)); }
    JsonWriter& value(int number) { return value(static_cast<long long>(number)); }
    JsonWriter& value(bool flag);
    JsonWriter& null();

    const std::string& str() const noexcept { return out_; }

private:
    void separate();

    std::string out_;
    std::vector<bool> needs_comma_;
    bool pending_key_ = false;
};

/// Per-update dynamics trace as CSV: round,seller_id,price,potential,max_delta.
std::string trace_to_csv(const ProductCatalog& catalog, const bertrand::DynamicsTrace& trace);

/// Scan report in the result-document JSON conventions (fixed key order,
/// 12-digit floats): instance, holds, violated_at, points.
std::string scan_report_to_json(const verification::ScanReport& report);

}  // namespace segmarket::io
