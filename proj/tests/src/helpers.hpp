#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "apriori/field.hpp"
#include "apriori/norms.hpp"

namespace testutil {

/// Sample an analytic function on the grid (z ignored in 2D).
inline std::vector<double> sample(const apriori::Grid& g,
                                  const std::function<double(double, double, double)>& fn) {
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

inline apriori::SpectralField scalar_field(const apriori::Grid& g,
                                           const std::function<double(double, double, double)>& fn) {
    return apriori::SpectralField::from_real_scalar(g, sample(g, fn));
}

/// Plancherel mode-sum oracle for the homogeneous L^2 Sobolev norm:
/// ||D^k f||_2^2 = (2 pi)^d sum_xi (sum_{|a|=k} prod xi_j^{2 a_j}) |f^(xi)|^2.
inline double sobolev_l2_modesum(const apriori::SpectralField& f, int k) {
    const apriori::Grid& g = f.grid();
    double total = 0.0;
    double vol = std::pow(2.0 * std::numbers::pi, g.dims());
    for (const auto& alpha : apriori::multi_indices(g.dims(), k)) {
        for (int c = 0; c < f.components(); ++c) {
            const auto& fc = f.coef(c);
            for (std::size_t m = 0; m < fc.size(); ++m) {
                auto xi = g.wavevector(m);
                bool nyquist_odd = false;
                double w = 1.0;
                for (int d = 0; d < g.dims(); ++d) {
                    if (alpha[d] % 2 == 1 && xi[d] == -g.n() / 2) nyquist_odd = true;
                    w *= std::pow(double(xi[d]), 2 * alpha[d]);
                }
                if (nyquist_odd) continue;
                total += w * std::norm(fc[m]);
            }
        }
    }
    return std::sqrt(total * vol);
}

inline double rel_err(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace testutil
