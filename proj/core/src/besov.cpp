#include "apriori/besov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "apriori/fft.hpp"
#include "apriori/ops.hpp"

namespace apriori {

namespace {
double smooth_step(double x) {
    // exp(-1/x) cutoff piece; 0 for x <= 0
    return x > 0.0 ? std::exp(-1.0 / x) : 0.0;
}

// chi = 1 on [0,1], 0 on [2,inf), smooth in between
double chi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    double a = smooth_step(2.0 - r);
    double b = smooth_step(r - 1.0);
    return a / (a + b);
}
}  // namespace

double BesovPartition::mother_profile(double r) { return chi(r) - chi(2.0 * r); }

BesovPartition::BesovPartition(const Grid& grid, int j_min, int j_max)
    : grid_(grid), j_min_(j_min), j_max_(j_max) {
    if (j_max < j_min) throw std::invalid_argument("BesovPartition: empty shell range");
    profiles_.reserve(shells());
    for (int j = j_min; j <= j_max; ++j) {
        std::vector<double> prof(grid.size());
        const double scale = std::pow(2.0, -j);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            auto xi = grid.wavevector(i);
            double r = std::sqrt(double(xi[0]) * xi[0] + double(xi[1]) * xi[1] +
                                 double(xi[2]) * xi[2]);
            prof[i] = r == 0.0 ? 0.0 : mother_profile(scale * r);
        }
        profiles_.push_back(std::move(prof));
    }
}

BesovPartition BesovPartition::for_grid(const Grid& grid) {
    double rmax = std::sqrt(double(grid.dims())) * (grid.n() / 2);
    int j_max = static_cast<int>(std::ceil(std::log2(rmax)));
    return BesovPartition(grid, 0, j_max);
}

BesovPartition BesovPartition::for_grid(const Grid& grid, int j_min, int j_max) {
    return BesovPartition(grid, j_min, j_max);
}

double BesovPartition::partition_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        auto xi = grid_.wavevector(i);
        if (xi[0] == 0 && xi[1] == 0 && xi[2] == 0) continue;
        double r = std::sqrt(double(xi[0]) * xi[0] + double(xi[1]) * xi[1] +
                             double(xi[2]) * xi[2]);
        if (r > coverage_radius() || r < std::pow(2.0, j_min_ - 1)) continue;
        double s = 0.0;
        for (const auto& prof : profiles_) s += prof[i];
        worst = std::max(worst, std::abs(1.0 - s));
    }
    return worst;
}

double besov_b0inf1(const SpectralField& f, const BesovPartition& partition) {
    if (!(f.grid() == partition.grid()))
        throw std::invalid_argument("besov_b0inf1: partition built for a different grid");
    f.require_zero_mean("besov_b0inf1");
    const Grid& g = f.grid();
    // every active mode must fall inside the shell range
    const double tol = 1e-13 * std::max(1.0, f.max_coef_abs());
    double lo = std::pow(2.0, partition.j_min() - 1);
    double hi = partition.coverage_radius();
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto xi = g.wavevector(i);
        double r = std::sqrt(double(xi[0]) * xi[0] + double(xi[1]) * xi[1] +
                             double(xi[2]) * xi[2]);
        if (r == 0.0 || (r >= lo && r <= hi)) continue;
        for (int c = 0; c < f.components(); ++c) {
            if (std::abs(f.coef(c)[i]) > tol)
                throw std::runtime_error("besov_b0inf1: active mode |xi| = " + std::to_string(r) +
                                         " not covered by shell range");
        }
    }
    double total = 0.0;
    std::vector<std::vector<double>> block(f.components());
    for (int j = partition.j_min(); j <= partition.j_max(); ++j) {
        const auto& prof = partition.profile(j);
        for (int c = 0; c < f.components(); ++c) {
            std::vector<std::complex<double>> coef = f.coef(c);
            for (std::size_t i = 0; i < coef.size(); ++i) coef[i] *= prof[i];
            block[c] = fft_inverse(g, coef);
        }
        double mx = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            double m2 = 0.0;
            for (const auto& comp : block) m2 += comp[i] * comp[i];
            mx = std::max(mx, m2);
        }
        total += std::sqrt(mx);
    }
    return total;
}

double besov_grad(const SpectralField& f, const BesovPartition& partition) {
    SpectralField df = gradient(f);
    df.make_zero_mean();
    return besov_b0inf1(df, partition);
}

}  // namespace apriori
