#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace netgof {

struct ResultRow {
    std::string setting;  // "key=value;key=value"
    std::string metric;
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t replications = 0;
    std::int64_t excluded = 0;

    bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    bool operator==(const ResultTable&) const = default;
};

enum class TableFormat { Csv, Json };

TableFormat parse_table_format(std::string_view text);

/// Column order is fixed: setting, metric, estimate, stderr, reps, excluded.
/// CSV numbers use six decimals (scientific below 1e-4); JSON numbers use
/// the shortest round-trip representation.
void emit(const ResultTable& table, TableFormat format, std::ostream& out);
void emit_file(const ResultTable& table, TableFormat format, const std::string& path);

ResultTable parse_json_table(std::string_view json);

}  // namespace netgof
