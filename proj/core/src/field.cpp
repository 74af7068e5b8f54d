#include "apriori/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "apriori/fft.hpp"

namespace apriori {

SpectralField::SpectralField(const Grid& grid, int components)
    : grid_(grid), components_(components) {
    // 1 for scalars, dims for vectors; gradients of vectors carry dims*dims.
    if (components < 1 || components > grid.dims() * grid.dims())
        throw std::invalid_argument("SpectralField: bad component count");
    coef_.assign(components, std::vector<std::complex<double>>(grid.size()));
}

SpectralField SpectralField::from_real(const Grid& grid,
                                       const std::vector<std::vector<double>>& samples) {
    SpectralField f(grid, static_cast<int>(samples.size()));
    for (int c = 0; c < f.components_; ++c) {
        if (samples[c].size() != grid.size())
            throw std::invalid_argument("from_real: sample count does not match grid");
        f.coef_[c] = fft_forward(grid, samples[c]);
    }
    f.refresh_zero_mean_flag();
    return f;
}

SpectralField SpectralField::from_real_scalar(const Grid& grid, const std::vector<double>& samples) {
    return from_real(grid, {samples});
}

std::vector<double> SpectralField::to_real(int c) const { return fft_inverse(grid_, coef_[c]); }

std::vector<std::vector<double>> SpectralField::to_real_all() const {
    std::vector<std::vector<double>> out;
    out.reserve(components_);
    for (int c = 0; c < components_; ++c) out.push_back(to_real(c));
    return out;
}

void SpectralField::make_zero_mean() {
    for (auto& comp : coef_) comp[0] = 0.0;
    zero_mean_ = true;
}

void SpectralField::refresh_zero_mean_flag() {
    double mean = 0.0;
    for (const auto& comp : coef_) mean = std::max(mean, std::abs(comp[0]));
    zero_mean_ = mean <= 1e-13 * std::max(1.0, max_coef_abs());
}

void SpectralField::require_zero_mean(const char* op) const {
    double mean = 0.0;
    for (const auto& comp : coef_) mean = std::max(mean, std::abs(comp[0]));
    if (mean > 1e-10 * std::max(1.0, max_coef_abs()))
        throw std::invalid_argument(std::string(op) + ": field must be zero-mean");
}

void SpectralField::apply_multiplier(
    const std::function<std::complex<double>(const std::array<int, 3>&)>& m) {
    for (auto& comp : coef_) {
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] *= m(grid_.wavevector(i));
    }
}

double SpectralField::max_coef_abs() const {
    double mx = 0.0;
    for (const auto& comp : coef_)
        for (const auto& c : comp) mx = std::max(mx, std::abs(c));
    return mx;
}

}  // namespace apriori
