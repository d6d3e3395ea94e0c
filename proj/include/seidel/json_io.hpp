#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "seidel/report.hpp"
#include "seidel/series.hpp"
#include "seidel/tableau.hpp"

namespace seidel {

// insertion-ordered so that rendered output is stable byte for byte
using Json = nlohmann::ordered_json;

inline Json to_json(const Series& s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json to_json(const IdentityReport& r) {
    Json j;
    j["identity"] = r.id;
    j["variant"] = r.variant;
    Json domain = Json::object();
    for (const auto& range : r.domain) domain[range.name] = Json::array({range.lo, range.hi});
    j["params_domain"] = std::move(domain);
    j["order"] = r.order;
    j["tested"] = r.tested;
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json params = Json::object();
        for (const auto& [name, value] : f.params) params[name] = value;
        failures.push_back(Json{{"params", std::move(params)}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    j["failures"] = std::move(failures);
    j["failure_count"] = r.failure_count;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline Json to_json(const std::vector<IdentityReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

// flat map "id/variant" -> verdict, the golden-file format
inline Json verdict_map(const std::vector<IdentityReport>& reports) {
    Json j = Json::object();
    for (const auto& r : reports) j[r.id + "/" + r.variant] = to_string(r.verdict);
    return j;
}

/**
 * Seed document {"row_seed": ["p/q", ...], "col_seed": ["p/q", ...]}. The
 * vectors must cover the requested extent; the corner consistency check is
 * SeedPair's.
 */
inline SeedPair seed_pair_from_json(const Json& doc, std::size_t need_row, std::size_t need_col) {
    auto read = [](const Json& arr, const char* key) {
        std::vector<Rational> values;
        for (const auto& item : arr.at(key)) {
            values.push_back(Rational::from_string(item.get<std::string>()));
        }
        return values;
    };
    std::vector<Rational> row = read(doc, "row_seed");
    std::vector<Rational> col = read(doc, "col_seed");
    if (row.size() < need_row || col.size() < need_col) {
        throw std::invalid_argument("seed document shorter than the requested extent");
    }
    return SeedPair::from_vectors(std::move(row), std::move(col));
}

}  // namespace seidel
