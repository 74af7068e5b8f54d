#pragma once

#include <string>
#include <vector>

namespace apriori {

/// Time-indexed table of tracked norms (first column is always "t").
/// Rows are strictly increasing in t and finite throughout.
struct NormSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t size() const { return rows.size(); }
    bool has_column(const std::string& name) const;
    std::size_t column_index(const std::string& name) const;  // throws when missing
    std::vector<double> column(const std::string& name) const;
    std::vector<double> times() const { return column("t"); }

    void append(const std::vector<double>& row);

    /// Keep every stride-th sample (always keeps the first row).
    NormSeries subsample(int stride) const;

    /// CSV with 17 significant digits, one row per sample.
    void write_csv(const std::string& path) const;
    static NormSeries read_csv(const std::string& path);
};

std::string format_g17(double v);

}  // namespace apriori
