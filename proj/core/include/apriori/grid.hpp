#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace apriori {

/// Uniform periodic grid on [0, 2*pi)^dims with n points per axis.
/// Wavevectors live on the integer lattice [-n/2, n/2)^dims.
class Grid {
  public:
    Grid(int dims, int n);

    int dims() const { return dims_; }
    int n() const { return n_; }
    std::size_t size() const { return size_; }

    /// Quadrature weight of one grid point, (2*pi/n)^dims. Exact for
    /// trigonometric polynomials resolvable on the grid.
    double quad_weight() const { return weight_; }

    /// Axis index -> signed wavenumber in [-n/2, n/2).
    int wavenumber(int axis_index) const {
        return axis_index < n_ / 2 ? axis_index : axis_index - n_;
    }

    /// Flat row-major index -> wavevector (unused trailing axes are zero).
    std::array<int, 3> wavevector(std::size_t flat) const {
        std::array<int, 3> xi{0, 0, 0};
        for (int d = dims_ - 1; d >= 0; --d) {
            xi[d] = wavenumber(static_cast<int>(flat % n_));
            flat /= n_;
        }
        return xi;
    }

    /// 2/3-rule cutoff: modes with any |xi_j| > cutoff are dropped from
    /// nonlinear products.
    int dealias_cutoff() const { return n_ / 3; }

    bool operator==(const Grid& o) const { return dims_ == o.dims_ && n_ == o.n_; }

  private:
    int dims_;
    int n_;
    std::size_t size_;
    double weight_;
};

}  // namespace apriori
