#ifndef ROUGHPHISH_CORE_CSV_HPP
#define ROUGHPHISH_CORE_CSV_HPP

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "roughphish/core/decision_table.hpp"

namespace rough {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string::size_type start = 0;
    while (true) {
        auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

} // namespace detail

/**
 * Reads a decision table: header row first, the last column is the decision
 * attribute, every cell is a raw token (no quoting). Blank lines are skipped;
 * a trailing '\r' is stripped so CRLF files load unchanged.
 */
inline DecisionTable read_decision_table_csv(std::istream& in) {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.erase(0, 3);
        if (line.empty())
            continue;
        auto cells = detail::split_csv_line(line);
        if (!have_header) {
            if (cells.size() < 2)
                throw TableFormatError("header needs at least one condition and one decision column",
                                       line_no);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].empty())
                    throw TableFormatError("empty attribute name", line_no, c + 1);
                for (std::size_t d = 0; d < c; ++d)
                    if (cells[d] == cells[c])
                        throw TableFormatError("duplicate attribute name '" + cells[c] + "'",
                                               line_no, c + 1);
            }
            header = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != header.size())
            throw TableFormatError("expected " + std::to_string(header.size()) + " cells, found " +
                                       std::to_string(cells.size()),
                                   line_no, std::min(cells.size(), header.size()) + 1);
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].empty())
                throw TableFormatError("empty cell", line_no, c + 1);
        rows.push_back(std::move(cells));
    }
    if (!have_header)
        throw TableFormatError("missing header row");
    std::string decision = header.back();
    header.pop_back();
    return DecisionTable(std::move(header), std::move(decision), std::move(rows));
}

inline DecisionTable read_decision_table_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TableFormatError("cannot open '" + path.string() + "'");
    return read_decision_table_csv(in);
}

inline DecisionTable parse_decision_table_csv(const std::string& text) {
    std::istringstream in(text);
    return read_decision_table_csv(in);
}

inline std::string to_csv(const DecisionTable& table) {
    std::string out;
    for (const auto& name : table.condition_attributes())
        out += name + ",";
    out += table.decision_attribute() + "\n";
    for (const auto& row : table.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0)
                out += ",";
            out += row[c];
        }
        out += "\n";
    }
    return out;
}

} // namespace rough

#endif
