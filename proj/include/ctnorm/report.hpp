#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ctnorm::report {

/// One table cell. monostate renders as an empty CSV field / JSON null.
using Value = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

enum class Format { text, csv, json };

/// Parses "text" / "csv" / "json"; throws DomainError otherwise.
Format parse_format(const std::string& name);

/// Doubles are printed with 12 significant digits in every format.
std::string format_number(double v);

/// CSV: UTF-8, header row, LF line endings, RFC-style quoting.
std::string to_csv(const Report& r);

/// JSON: array of flat objects with the column names as keys.
std::string to_json(const Report& r);

/// Column-aligned plain text for terminals.
std::string to_text(const Report& r);

std::string render(const Report& r, Format format);

}  // namespace ctnorm::report
