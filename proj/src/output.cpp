#include "korselt/output.hpp"

#include <algorithm>
#include <sstream>

namespace korselt::cli {

namespace {

std::string scalar_str(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

std::string object_str(const Json& v) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) {
        if (!s.empty()) s += ", ";
        s += it.key();
        s += '=';
        s += scalar_str(it.value());
    }
    return s;
}

std::string table_value(const Json& v) {
    if (v.is_object()) return object_str(v);
    if (!v.is_array()) return scalar_str(v);
    std::string s = "{";
    bool first = true;
    for (const Json& item : v) {
        if (!first) s += ", ";
        first = false;
        s += item.is_object() ? "(" + object_str(item) + ")" : scalar_str(item);
    }
    s += "}";
    return s;
}

std::string format_timing(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

std::string emit_table(const std::vector<OutputRecord>& records) {
    std::string out;
    bool first_record = true;
    for (const OutputRecord& rec : records) {
        if (!first_record) out += '\n';
        first_record = false;

        std::vector<std::pair<std::string, std::string>> rows;
        rows.emplace_back("command", rec.command);
        for (auto it = rec.inputs.begin(); it != rec.inputs.end(); ++it)
            rows.emplace_back(it.key(), scalar_str(it.value()));
        rows.emplace_back("result", table_value(rec.result));
        if (!rec.note.empty()) rows.emplace_back("note", rec.note);
        rows.emplace_back("provenance", rec.provenance);
        rows.emplace_back("timing_ms", format_timing(rec.timing_ms));

        std::size_t width = 0;
        for (const auto& [key, value] : rows) width = std::max(width, key.size());
        for (const auto& [key, value] : rows) {
            out += key;
            out.append(width - key.size() + 2, ' ');
            out += value;
            out += '\n';
        }
    }
    return out;
}

std::string emit_json_lines(const std::vector<OutputRecord>& records) {
    std::string out;
    for (const OutputRecord& rec : records) {
        Json j;
        j["command"] = rec.command;
        j["inputs"] = rec.inputs;
        j["result"] = rec.result;
        if (!rec.note.empty()) j["note"] = rec.note;
        j["provenance"] = rec.provenance;
        j["timing_ms"] = rec.timing_ms;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// The csv form carries the result only: one row per set member or list
// element, a single row for scalars and flat objects.
std::vector<std::string> csv_columns(const Json& result) {
    const Json* shape = &result;
    if (result.is_array()) {
        if (result.empty() || !result.front().is_object()) return {"value"};
        shape = &result.front();
    }
    if (shape->is_object()) {
        std::vector<std::string> cols;
        for (auto it = shape->begin(); it != shape->end(); ++it) cols.push_back(it.key());
        return cols;
    }
    return {"value"};
}

void csv_row(std::string& out, const std::vector<std::string>& cols, const Json& item) {
    bool first = true;
    for (const std::string& col : cols) {
        if (!first) out += ',';
        first = false;
        if (item.is_object()) {
            out += csv_field(item.contains(col) ? scalar_str(item.at(col)) : "");
        } else {
            out += csv_field(scalar_str(item));
        }
    }
    out += '\n';
}

std::string emit_csv(const std::vector<OutputRecord>& records) {
    std::string out;
    std::vector<std::string> current_header;
    for (const OutputRecord& rec : records) {
        const std::vector<std::string> cols = csv_columns(rec.result);
        if (cols != current_header) {
            current_header = cols;
            bool first = true;
            for (const std::string& col : cols) {
                if (!first) out += ',';
                first = false;
                out += csv_field(col);
            }
            out += '\n';
        }
        if (rec.result.is_array()) {
            for (const Json& item : rec.result) csv_row(out, cols, item);
        } else {
            csv_row(out, cols, rec.result);
        }
    }
    return out;
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") return Format::table;
    if (name == "json-lines") return Format::json_lines;
    if (name == "csv") return Format::csv;
    return std::nullopt;
}

std::string emit(const std::vector<OutputRecord>& records, Format format) {
    switch (format) {
    case Format::table: return emit_table(records);
    case Format::json_lines: return emit_json_lines(records);
    case Format::csv: return emit_csv(records);
    }
    return {};
}

} // namespace korselt::cli
