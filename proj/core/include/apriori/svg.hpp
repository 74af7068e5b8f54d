#pragma once

#include <string>
#include <vector>

namespace apriori {

struct SvgSeries {
    std::string name;
    std::vector<double> x, y;
};

/// Static SVG line chart with auto-scaled axes and a small legend.
void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<SvgSeries>& series);

}  // namespace apriori
