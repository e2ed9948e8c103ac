#include "netgof/table.hpp"

#include "netgof/error.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace netgof {

namespace {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    if (v != 0.0 && std::abs(v) < 1e-4)
        std::snprintf(buf, sizeof buf, "%.6e", v);
    else
        std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

TableFormat parse_table_format(std::string_view text) {
    if (text == "csv") return TableFormat::Csv;
    if (text == "json") return TableFormat::Json;
    throw InvalidArgument("unknown table format '" + std::string(text) + "' (expected csv or json)");
}

void emit(const ResultTable& table, TableFormat format, std::ostream& out) {
    if (format == TableFormat::Csv) {
        out << "setting,metric,estimate,stderr,reps,excluded\n";
        for (const auto& r : table.rows)
            out << csv_field(r.setting) << ',' << csv_field(r.metric) << ',' << format_number(r.estimate) << ','
                << format_number(r.std_error) << ',' << r.replications << ',' << r.excluded << '\n';
        return;
    }
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["setting"] = r.setting;
        row["metric"] = r.metric;
        row["estimate"] = r.estimate;
        row["stderr"] = r.std_error;
        row["reps"] = r.replications;
        row["excluded"] = r.excluded;
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

void emit_file(const ResultTable& table, TableFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    emit(table, format, out);
    out.flush();
    if (!out) throw Error("write to '" + path + "' failed");
}

ResultTable parse_json_table(std::string_view json) {
    ResultTable table;
    try {
        const auto doc = nlohmann::json::parse(json);
        if (!doc.is_array()) throw ParseError("result table must be a JSON array", 0);
        auto number = [](const nlohmann::json& v) {
            return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
        };
        for (const auto& row : doc) {
            ResultRow r;
            r.setting = row.at("setting").get<std::string>();
            r.metric = row.at("metric").get<std::string>();
            r.estimate = number(row.at("estimate"));
            r.std_error = number(row.at("stderr"));
            r.replications = row.at("reps").get<std::int64_t>();
            r.excluded = row.at("excluded").get<std::int64_t>();
            table.rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("malformed result table: ") + err.what(), 0);
    }
    return table;
}

}  // namespace netgof
