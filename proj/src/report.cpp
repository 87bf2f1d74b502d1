#include "ctnorm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ctnorm/errors.hpp"

namespace ctnorm::report {
namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string plain(const Value& v) {
    if (std::holds_alternative<std::monostate>(v)) return "";
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    return std::get<bool>(v) ? "true" : "false";
}

std::string json_value(const Value& v) {
    if (std::holds_alternative<std::monostate>(v)) return "null";
    if (const auto* s = std::get_if<std::string>(&v)) return "\"" + json_escape(*s) + "\"";
    if (const auto* d = std::get_if<double>(&v); d && !std::isfinite(*d))
        return "\"" + plain(v) + "\"";  // JSON has no inf/nan literals
    return plain(v);  // finite numbers and booleans keep their plain spelling
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw DomainError("unknown format '" + name + "' (expected text, csv or json)");
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const Report& r) {
    std::string out;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        if (c) out += ',';
        out += csv_escape(r.columns[c]);
    }
    out += '\n';
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += csv_escape(plain(row[c]));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Report& r) {
    std::string out = "[";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        out += i ? ",\n " : "\n ";
        out += '{';
        for (std::size_t c = 0; c < r.rows[i].size(); ++c) {
            if (c) out += ", ";
            out += "\"" + json_escape(r.columns[c]) + "\": " + json_value(r.rows[i][c]);
        }
        out += '}';
    }
    out += r.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string to_text(const Report& r) {
    std::vector<std::size_t> width(r.columns.size(), 0);
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(r.rows.size());
    for (const auto& row : r.rows) {
        std::vector<std::string> line;
        line.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(plain(row[c]));
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }

    std::string out;
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) out += "  ";
            out += line[c];
            if (c + 1 < line.size()) out.append(width[c] - line[c].size(), ' ');
        }
        out += '\n';
    };
    emit(r.columns);
    for (const auto& line : cells) emit(line);
    return out;
}

std::string render(const Report& r, Format format) {
    switch (format) {
        case Format::csv: return to_csv(r);
        case Format::json: return to_json(r);
        default: return to_text(r);
    }
}

}  // namespace ctnorm::report
