#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace notikit::csv {

// Minimal delimited-text support: comma separator, double-quote escaping,
// leading '#' lines treated as comments and preserved separately.
struct Table {
    std::vector<std::string> comments;  // verbatim, without trailing newline
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based line number in the source file for each row (diagnostics)
    std::vector<std::size_t> line_numbers;

    // Header lookup; -1 when the column is absent.
    int column(std::string_view name) const;
};

std::vector<std::string> split_line(std::string_view line);
std::string join_line(const std::vector<std::string>& fields);

Table read_file(const std::string& path);
Table read_string(std::string_view text, const std::string& origin = "<string>");
void write_file(const std::string& path, const Table& table);
std::string to_string(const Table& table);

// Raw line reader used by the physio files (no header/quoting semantics).
std::vector<std::string> read_lines(const std::string& path);

}  // namespace notikit::csv
