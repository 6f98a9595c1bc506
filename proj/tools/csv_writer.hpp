#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace srrel::cli {

/// Fixed 12-significant-digit rendering used for every CSV number.
std::string format_number(double value);

/// Writes a `#` metadata line, a header row and numeric rows.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    /// `fields` are rendered as `key=value` pairs after the tool name and version.
    void metadata(std::string_view command,
                  std::initializer_list<std::pair<std::string_view, std::string>> fields);
    void header(std::initializer_list<std::string_view> columns);
    void row(std::initializer_list<double> values);

private:
    std::ostream& out_;
};

}  // namespace srrel::cli
