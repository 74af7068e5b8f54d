#include "apriori/random_fields.hpp"

#include <cmath>

namespace apriori {

SpectralField random_band_limited(const Grid& grid, int kmax, double slope, std::mt19937_64& rng,
                                  int components, bool zero_mean) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> samples(components, std::vector<double>(grid.size()));
    for (auto& comp : samples)
        for (auto& v : comp) v = gauss(rng);
    SpectralField f = SpectralField::from_real(grid, samples);
    f.apply_multiplier([&](const std::array<int, 3>& xi) -> std::complex<double> {
        double r2 = double(xi[0]) * xi[0] + double(xi[1]) * xi[1] + double(xi[2]) * xi[2];
        if (r2 == 0.0) return zero_mean ? 0.0 : 1.0;
        for (int d = 0; d < grid.dims(); ++d)
            if (std::abs(xi[d]) > kmax) return 0.0;
        return std::pow(r2, -slope / 2.0);
    });
    if (zero_mean) f.make_zero_mean();
    return f;
}

SpectralField random_band_limited(const Grid& grid, int kmax, double slope, std::uint64_t seed,
                                  int components, bool zero_mean) {
    std::mt19937_64 rng(seed);
    return random_band_limited(grid, kmax, slope, rng, components, zero_mean);
}

}  // namespace apriori
