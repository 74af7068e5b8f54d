#pragma once

#include <vector>

namespace apriori {

/// Cumulative composite trapezoid of y over nodes x (same length).
std::vector<double> cumulative_trapezoid(const std::vector<double>& y,
                                         const std::vector<double>& x);

/// Cumulative 4th-order Newton-Cotes increments on a uniform grid.
std::vector<double> cumulative_quartic(const std::vector<double>& y, double h);

/// Cumulative 4th-order rule on arbitrary nodes: each interval integrates the
/// Lagrange cubic through the nearest four nodes.
std::vector<double> cumulative_cubic(const std::vector<double>& y, const std::vector<double>& x);

double trapezoid(const std::vector<double>& y, const std::vector<double>& x);

/// Composite Simpson on possibly non-uniform nodes (4th order for smooth
/// spacing); falls back to a fitted quadratic on an odd trailing interval.
double simpson_nonuniform(const std::vector<double>& y, const std::vector<double>& x);

}  // namespace apriori
