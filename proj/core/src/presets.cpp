#include "apriori/presets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "apriori/ops.hpp"
#include "apriori/random_fields.hpp"

namespace apriori {

namespace {

std::vector<double> sample_scalar(const Grid& g, const std::function<double(double, double, double)>& fn) {
    std::vector<double> out(g.size());
    const int n = g.n();
    const double h = 2.0 * std::numbers::pi / n;
    if (g.dims() == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[std::size_t(i) * n + j] = fn(i * h, j * h, 0.0);
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    out[(std::size_t(i) * n + j) * n + k] = fn(i * h, j * h, k * h);
    }
    return out;
}

}  // namespace

SpectralField init_preset(const std::string& name, double amplitude, std::uint64_t seed,
                          const Grid& grid) {
    if (name == "taylor-green") {
        if (grid.dims() != 3) throw std::invalid_argument("taylor-green preset needs dims = 3");
        auto vx = sample_scalar(grid, [&](double x, double y, double z) {
            return amplitude * std::sin(x) * std::cos(y) * std::cos(z);
        });
        auto vy = sample_scalar(grid, [&](double x, double y, double z) {
            return -amplitude * std::cos(x) * std::sin(y) * std::cos(z);
        });
        std::vector<double> vz(grid.size(), 0.0);
        return SpectralField::from_real(grid, {vx, vy, vz});
    }
    if (name == "qg-taylor-green") {
        if (grid.dims() != 2) throw std::invalid_argument("qg-taylor-green preset needs dims = 2");
        auto th = sample_scalar(grid, [&](double x, double y, double) {
            return amplitude * std::sin(x) * std::sin(y);
        });
        SpectralField f = SpectralField::from_real_scalar(grid, th);
        f.make_zero_mean();
        return f;
    }
    if (name == "qg-orthogonal") {
        if (grid.dims() != 2) throw std::invalid_argument("qg-orthogonal preset needs dims = 2");
        auto th = sample_scalar(grid, [&](double x, double y, double) {
            return amplitude * (std::sin(x) * std::sin(y) + std::cos(x));
        });
        SpectralField f = SpectralField::from_real_scalar(grid, th);
        f.make_zero_mean();
        return f;
    }
    if (name == "random") {
        int kmax = std::max(2, grid.n() / 12);
        if (grid.dims() == 2) {
            SpectralField f = random_band_limited(grid, kmax, 2.0, seed);
            // normalize so amplitude sets the L^inf scale
            auto vals = f.to_real(0);
            double mx = 0.0;
            for (double v : vals) mx = std::max(mx, std::abs(v));
            if (mx > 0.0)
                for (auto& c : f.coef(0)) c *= amplitude / mx;
            return f;
        }
        SpectralField u = random_band_limited(grid, kmax, 2.0, seed, 3);
        u = leray_project(u);
        double mx = 0.0;
        auto vals = u.to_real_all();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double m2 = 0.0;
            for (const auto& comp : vals) m2 += comp[i] * comp[i];
            mx = std::max(mx, m2);
        }
        mx = std::sqrt(mx);
        if (mx > 0.0)
            for (int c = 0; c < 3; ++c)
                for (auto& v : u.coef(c)) v *= amplitude / mx;
        return u;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace apriori
