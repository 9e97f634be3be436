#pragma once

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace settop::cli {

enum class Format { Csv, Tsv, Json };

std::optional<Format> parse_format(const std::string& name);

using Value = nlohmann::ordered_json;

/// Result of one command. Serialization is deterministic: parameters and
/// summary keep insertion order, rows keep their order.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, Value>> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
    std::vector<std::pair<std::string, Value>> summary;
    /// When set, JSON output carries this object under `keyed_name` instead of
    /// a row array (the table command keys its rows by n).
    std::optional<Value> keyed;
    std::string keyed_name;
};

/// CSV/TSV: header, rows, then one `# key=value` line per summary entry.
/// Array cells are space-joined.
void write(const OutputRecord& record, Format format, std::ostream& out);

} // namespace settop::cli
