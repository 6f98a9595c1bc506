#include "csv_writer.hpp"

#include <cstdio>

namespace srrel::cli {

std::string format_number(double value)
{
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void CsvWriter::metadata(std::string_view command,
                         std::initializer_list<std::pair<std::string_view, std::string>> fields)
{
    out_ << "# srrel " << SRREL_VERSION << " command=" << command;
    for (const auto& [key, value] : fields) out_ << ' ' << key << '=' << value;
    out_ << '\n';
}

void CsvWriter::header(std::initializer_list<std::string_view> columns)
{
    bool first = true;
    for (auto c : columns) {
        if (!first) out_ << ',';
        out_ << c;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values)
{
    bool first = true;
    for (double v : values) {
        if (!first) out_ << ',';
        out_ << format_number(v);
        first = false;
    }
    out_ << '\n';
}

}  // namespace srrel::cli
