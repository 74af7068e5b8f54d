#include "apriori/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apriori {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool NormSeries::has_column(const std::string& name) const {
    return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::size_t NormSeries::column_index(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end())
        throw std::runtime_error("series is missing column '" + name + "'");
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> NormSeries::column(const std::string& name) const {
    std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[idx]);
    return out;
}

void NormSeries::append(const std::vector<double>& row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("NormSeries::append: row width mismatch");
    for (double v : row)
        if (!std::isfinite(v)) throw std::runtime_error("NormSeries::append: non-finite entry");
    if (!rows.empty() && row[0] <= rows.back()[0])
        throw std::invalid_argument("NormSeries::append: t must be strictly increasing");
    rows.push_back(row);
}

NormSeries NormSeries::subsample(int stride) const {
    if (stride < 1) throw std::invalid_argument("NormSeries::subsample: stride must be >= 1");
    NormSeries out;
    out.columns = columns;
    for (std::size_t i = 0; i < rows.size(); i += static_cast<std::size_t>(stride))
        out.rows.push_back(rows[i]);
    return out;
}

void NormSeries::write_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t c = 0; c < columns.size(); ++c)
        f << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c)
            f << format_g17(r[c]) << (c + 1 < r.size() ? "," : "\n");
    }
}

NormSeries NormSeries::read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    NormSeries out;
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty CSV: " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) out.columns.push_back(cell);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != out.columns.size())
            throw std::runtime_error("ragged CSV row in " + path);
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace apriori
