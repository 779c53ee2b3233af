#pragma once

// Report emission: stable field order, 12 significant digits for floats,
// RFC 4180 escaping for CSV.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace znt::cli {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string num(long long v) { return std::to_string(v); }

// a cell that is already rendered; `raw` marks JSON literals (numbers,
// booleans, nested arrays) that must not be quoted
struct Cell {
    std::string text;
    bool raw = false;
};

inline Cell jnum(double v) { return {num(v), true}; }
inline Cell jint(long long v) { return {std::to_string(v), true}; }
inline Cell jbool(bool v) { return {v ? "true" : "false", true}; }
inline Cell jstr(const std::string& s) { return {s, false}; }
inline Cell jraw(const std::string& s) { return {s, true}; }

using Fields = std::vector<std::pair<std::string, Cell>>;

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string to_json(const Fields& f, int indent = 0) {
    std::string pad(indent, ' ');
    std::string out = "{\n";
    for (size_t i = 0; i < f.size(); ++i) {
        out += pad + "  \"" + json_escape(f[i].first) + "\": ";
        if (f[i].second.raw)
            out += f[i].second.text;
        else
            out += "\"" + json_escape(f[i].second.text) + "\"";
        if (i + 1 < f.size()) out += ",";
        out += "\n";
    }
    out += pad + "}";
    return out;
}

inline std::string to_json_array(const std::vector<Fields>& rows, int indent = 0) {
    std::string pad(indent, ' ');
    if (rows.empty()) return "[]";
    std::string out = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        out += pad + "  " + to_json(rows[i], indent + 2);
        if (i + 1 < rows.size()) out += ",";
        out += "\n";
    }
    out += pad + "]";
    return out;
}

inline std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

// header from the first row's keys; an explicit header covers empty tables
inline std::string to_csv(const std::vector<Fields>& rows,
                          const std::vector<std::string>& header = {}) {
    std::string out;
    std::vector<std::string> cols = header;
    if (cols.empty() && !rows.empty())
        for (const auto& kv : rows.front()) cols.push_back(kv.first);
    for (size_t i = 0; i < cols.size(); ++i)
        out += (i ? "," : "") + csv_escape(cols[i]);
    out += "\r\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + csv_escape(row[i].second.text);
        out += "\r\n";
    }
    return out;
}

} // namespace znt::cli
