#include "apriori/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace apriori {

Grid::Grid(int dims, int n) : dims_(dims), n_(n) {
    if (dims != 2 && dims != 3)
        throw std::invalid_argument("Grid: dims must be 2 or 3, got " + std::to_string(dims));
    if (n < 16 || n % 2 != 0)
        throw std::invalid_argument("Grid: n must be even and >= 16, got " + std::to_string(n));
    size_ = 1;
    for (int d = 0; d < dims; ++d) size_ *= static_cast<std::size_t>(n);
    weight_ = std::pow(2.0 * std::numbers::pi / n, dims);
}

}  // namespace apriori
