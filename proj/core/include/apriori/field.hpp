#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "apriori/grid.hpp"

namespace apriori {

/// Real scalar or vector field on a periodic grid, stored as complex Fourier
/// coefficients with Hermitian symmetry (coef(-xi) = conj(coef(xi))).
class SpectralField {
  public:
    SpectralField(const Grid& grid, int components);

    static SpectralField from_real(const Grid& grid, const std::vector<std::vector<double>>& samples);
    static SpectralField from_real_scalar(const Grid& grid, const std::vector<double>& samples);

    const Grid& grid() const { return grid_; }
    int components() const { return components_; }
    bool zero_mean() const { return zero_mean_; }

    std::vector<std::complex<double>>& coef(int c) { return coef_[c]; }
    const std::vector<std::complex<double>>& coef(int c) const { return coef_[c]; }

    std::vector<double> to_real(int c) const;
    /// Samples of all components, indexed [component][point].
    std::vector<std::vector<double>> to_real_all() const;

    /// Zero the mean mode of every component and set the zero-mean flag.
    void make_zero_mean();
    /// Re-check coefficient(0) against the field magnitude and update the flag.
    void refresh_zero_mean_flag();

    /// Throws std::invalid_argument when the mean mode is not negligible.
    void require_zero_mean(const char* op) const;

    /// Apply a Fourier multiplier m(xi) to every component in place.
    void apply_multiplier(const std::function<std::complex<double>(const std::array<int, 3>&)>& m);

    /// Max |coef| over all modes and components.
    double max_coef_abs() const;

    bool same_shape(const SpectralField& other) const {
        return grid_ == other.grid_ && components_ == other.components_;
    }

  private:
    Grid grid_;
    int components_;
    bool zero_mean_ = false;
    std::vector<std::vector<std::complex<double>>> coef_;
};

}  // namespace apriori
