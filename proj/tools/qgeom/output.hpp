#ifndef QGEOM_TOOLS_OUTPUT_HPP
#define QGEOM_TOOLS_OUTPUT_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qgeom_cli {

/// One table cell: number, string, integer, or null (unavailable).
using Cell = nlohmann::ordered_json;

/// Tabular command result plus the ordered metadata header that is
/// echoed into every output format.
struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 17-significant-digit rendering; round-trip safe for doubles.
std::string format_number(double v);

/// CSV with `# key=value` metadata comments and a header row.
std::string render_csv(const Report& r);

/// JSON object with `meta` and `data` keys.
std::string render_json(const Report& r);

/// Renders in `format` ("csv" or "json") and writes to `path`
/// (empty: stdout).  Returns 0, or 2 if the file cannot be opened.
int write_report(const Report& r, const std::string& format,
                 const std::string& path);

} // namespace qgeom_cli

#endif
