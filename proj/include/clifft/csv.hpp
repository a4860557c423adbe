#ifndef CLIFFT_CSV_HPP
#define CLIFFT_CSV_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clifft {

struct CsvError : std::runtime_error {
    int line;
    CsvError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_)
    {
    }
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// 17 significant digits: doubles round-trip exactly.
inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline CsvTable read_csv(std::istream& is)
{
    CsvTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_csv_line(line);
        if (t.header.empty()) {
            t.header = cells;
            continue;
        }
        if (cells.size() != t.header.size())
            throw CsvError(lineno, "expected " + std::to_string(t.header.size()) + " fields, got " +
                                       std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            try {
                std::size_t pos = 0;
                row.push_back(std::stod(c, &pos));
                if (pos != c.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw CsvError(lineno, "bad number '" + c + "'");
            }
        }
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty()) throw CsvError(lineno, "empty file");
    return t;
}

inline CsvTable read_csv_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_csv(f);
}

inline void write_csv_row(std::ostream& os, const std::vector<double>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << format_double(row[i]);
    }
    os << '\n';
}

} // namespace clifft

#endif
