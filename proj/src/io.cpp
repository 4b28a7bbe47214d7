#include "segmarket/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace segmarket::io {

namespace {

std::string trim(std::string_view text) {
    std::size_t first = 0;
    std::size_t last = text.size();
    while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) {
        ++first;
    }
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) {
        --last;
    }
    return std::string(text.substr(first, last - first));
}

double parse_number(const std::string& field, const std::string& what) {
    if (field.empty()) {
        throw ParseError(what + ": empty numeric field");
    }
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
        throw ParseError(what + ": cannot parse number '" + field + "'");
    }
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Rows of a two-column CSV with the given exact header.
std::vector<std::pair<std::string, double>> parse_two_column_csv(std::string_view text,
                                                                 const std::string& header,
                                                                 const std::string& what) {
    std::istringstream stream{std::string(text)};
    std::string line;
    bool header_seen = false;
    std::vector<std::pair<std::string, double>> rows;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        if (!header_seen) {
            if (trim(line) != header) {
                throw ParseError(what + ": expected header '" + header + "', got '" +
                                 trim(line) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            throw ParseError(what + ": expected 2 fields, got " +
                             std::to_string(fields.size()) + " in '" + line + "'");
        }
        if (fields[0].empty()) {
            throw ParseError(what + ": empty id");
        }
        rows.emplace_back(fields[0], parse_number(fields[1], what));
    }
    if (!header_seen) {
        throw ParseError(what + ": empty file");
    }
    if (rows.empty()) {
        throw ParseError(what + ": no data rows");
    }
    return rows;
}

}  // namespace

ProductCatalog parse_catalog_csv(std::string_view text) {
    std::vector<Product> entries;
    for (auto& [id, quality] : parse_two_column_csv(text, "id,quality", "catalog csv")) {
        entries.push_back({std::move(id), quality});
    }
    return ProductCatalog(std::move(entries));
}

ProductCatalog parse_catalog_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("catalog json: ") + err.what());
    }
    if (!doc.is_array()) {
        throw ParseError("catalog json: expected a top-level array");
    }
    if (doc.empty()) {
        throw ParseError("catalog json: no products");
    }
    std::vector<Product> entries;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("id") || !item.contains("quality")) {
            throw ParseError("catalog json: each entry needs 'id' and 'quality'");
        }
        if (!item["id"].is_string() || !item["quality"].is_number()) {
            throw ParseError("catalog json: 'id' must be a string, 'quality' a number");
        }
        entries.push_back({item["id"].get<std::string>(), item["quality"].get<double>()});
    }
    return ProductCatalog(std::move(entries));
}

ProductCatalog read_catalog_file(const std::string& path) {
    const std::string text = read_file(path);
    const std::string lead = trim(text);
    if (lead.empty()) {
        throw ParseError("catalog: empty file " + path);
    }
    return lead.front() == '[' ? parse_catalog_json(text) : parse_catalog_csv(text);
}

std::string catalog_digest(const ProductCatalog& catalog) {
    std::uint64_t hash = 1469598103934665603ull;  // FNV-1a 64
    auto mix = [&hash](std::string_view bytes) {
        for (unsigned char byte : bytes) {
            hash ^= byte;
            hash *= 1099511628211ull;
        }
    };
    char buffer[40];
    for (std::size_t rank = 0; rank < catalog.size(); ++rank) {
        mix(catalog.id(rank));
        mix("\x1f");
        std::snprintf(buffer, sizeof(buffer), "%.17g", catalog.quality(rank));
        mix(buffer);
        mix("\x1e");
    }
    std::snprintf(buffer, sizeof(buffer), "fnv1a:%016llx",
                  static_cast<unsigned long long>(hash));
    return buffer;
}

PriceVector read_price_file(const std::string& path, const ProductCatalog& catalog,
                            const DisplaySet& display) {
    const auto rows = parse_two_column_csv(read_file(path), "id,price", "price csv");
    std::unordered_map<std::string, double> by_id;
    for (const auto& [id, price] : rows) {
        if (!by_id.emplace(id, price).second) {
            throw ParseError("price csv: duplicate id '" + id + "'");
        }
    }
    PriceVector prices(display.size());
    for (std::size_t m = 0; m < display.size(); ++m) {
        const auto& id = catalog.id(display.ranks()[m]);
        const auto found = by_id.find(id);
        if (found == by_id.end()) {
            throw ParseError("price csv: missing price for displayed product '" + id + "'");
        }
        prices[m] = found->second;
        by_id.erase(found);
    }
    if (!by_id.empty()) {
        throw ParseError("price csv: price given for product outside the display set: '" +
                         by_id.begin()->first + "'");
    }
    return prices;
}

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    if (value == 0.0) {
        value = 0.0;  // collapse negative zero
    }
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

void JsonWriter::separate() {
    if (!needs_comma_.empty()) {
        if (needs_comma_.back() && !pending_key_) {
            out_ += ',';
        }
        if (!pending_key_) {
            needs_comma_.back() = true;
        }
    }
    pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ += '{';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ += '[';
    needs_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    needs_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    separate();
    out_ += '"';
    out_ += name;  // keys are fixed identifiers, never need escaping
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view text) {
    separate();
    out_ += '"';
    for (char c : text) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\r': out_ += "\\r"; break;
            case '\t': out_ += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x",
                                  static_cast<unsigned>(static_cast<unsigned char>(c)));
                    out_ += buffer;
                } else {
                    out_ += c;
                }
        }
    }
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(double number) {
    separate();
    out_ += format_double(number);
    return *this;
}

JsonWriter& JsonWriter::value(long long number) {
    separate();
    out_ += std::to_string(number);
    return *this;
}

JsonWriter& JsonWriter::value(bool flag) {
    separate();
    out_ += flag ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::null() {
    separate();
    out_ += "null";
    return *this;
}

std::string scan_report_to_json(const verification::ScanReport& report) {
    JsonWriter w;
    w.begin_object();
    w.key("instance").value(report.instance);
    w.key("holds").value(report.holds);
    w.key("violated_at");
    if (report.holds) {
        w.null();
    } else {
        w.value(report.violated_at);
    }
    w.key("points").begin_array();
    for (const auto& point : report.points) {
        w.begin_array().value(point[0]).value(point[1]).end_array();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string trace_to_csv(const ProductCatalog& catalog, const bertrand::DynamicsTrace& trace) {
    std::string out = "round,seller_id,price,potential,max_delta\n";
    for (const auto& entry : trace.entries) {
        out += std::to_string(entry.round);
        out += ',';
        out += catalog.id(entry.rank);
        out += ',';
        out += format_double(entry.price);
        out += ',';
        out += format_double(entry.potential);
        out += ',';
        out += format_double(entry.max_delta);
        out += '\n';
    }
    return out;
}

}  // namespace segmarket::io
