#include "notikit/csv.hpp"

#include <fstream>
#include <sstream>

#include "notikit/common.hpp"

namespace notikit::csv {

int Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // tolerate CRLF
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string join_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n") != std::string::npos) {
            out.push_back('"');
            for (char c : f) {
                if (c == '"') out.push_back('"');
                out.push_back(c);
            }
            out.push_back('"');
        } else {
            out += f;
        }
    }
    return out;
}

static Table parse_stream(std::istream& in, const std::string& origin) {
    Table table;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            table.comments.push_back(line);
            continue;
        }
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
        } else {
            if (fields.size() != table.header.size())
                fail(ErrorCode::SchemaError,
                     origin + ":" + std::to_string(lineno) + ": expected " +
                         std::to_string(table.header.size()) + " fields, got " +
                         std::to_string(fields.size()));
            table.rows.push_back(std::move(fields));
            table.line_numbers.push_back(lineno);
        }
    }
    return table;
}

Table read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::MissingFile, path);
    return parse_stream(in, path);
}

Table read_string(std::string_view text, const std::string& origin) {
    std::istringstream in{std::string(text)};
    return parse_stream(in, origin);
}

std::string to_string(const Table& table) {
    std::string out;
    for (const auto& c : table.comments) {
        out += c;
        out.push_back('\n');
    }
    out += join_line(table.header);
    out.push_back('\n');
    for (const auto& row : table.rows) {
        out += join_line(row);
        out.push_back('\n');
    }
    return out;
}

void write_file(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::MissingFile, "cannot open for writing: " + path);
    out << to_string(table);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::MissingFile, path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

}  // namespace notikit::csv
