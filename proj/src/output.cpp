#include "settop/output.hpp"

#include <ostream>

namespace settop::cli {

std::optional<Format> parse_format(const std::string& name) {
    if (name == "csv")
        return Format::Csv;
    if (name == "tsv")
        return Format::Tsv;
    if (name == "json")
        return Format::Json;
    return std::nullopt;
}

namespace {

std::string cell_text(const Value& v) {
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& item : v) {
            if (!out.empty())
                out += ' ';
            out += cell_text(item);
        }
        return out;
    }
    return v.dump();
}

void write_delimited(const OutputRecord& r, char sep, std::ostream& out) {
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        out << (i ? std::string(1, sep) : "") << r.columns[i];
    out << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? std::string(1, sep) : "") << cell_text(row[i]);
        out << '\n';
    }
    for (const auto& [key, value] : r.summary)
        out << "# " << key << '=' << cell_text(value) << '\n';
}

} // namespace

void write(const OutputRecord& r, Format format, std::ostream& out) {
    switch (format) {
    case Format::Csv:
        write_delimited(r, ',', out);
        return;
    case Format::Tsv:
        write_delimited(r, '\t', out);
        return;
    case Format::Json: {
        Value doc = Value::object();
        doc["command"] = r.command;
        Value params = Value::object();
        for (const auto& [k, v] : r.parameters)
            params[k] = v;
        doc["parameters"] = params;
        if (r.keyed) {
            doc[r.keyed_name] = *r.keyed;
        } else {
            Value rows = Value::array();
            for (const auto& row : r.rows) {
                Value obj = Value::object();
                for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i)
                    obj[r.columns[i]] = row[i];
                rows.push_back(obj);
            }
            doc["rows"] = rows;
        }
        if (!r.summary.empty()) {
            Value summary = Value::object();
            for (const auto& [k, v] : r.summary)
                summary[k] = v;
            doc["summary"] = summary;
        }
        out << doc.dump(2) << '\n';
        return;
    }
    }
}

} // namespace settop::cli
