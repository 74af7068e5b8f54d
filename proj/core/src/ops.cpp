#include "apriori/ops.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "apriori/fft.hpp"

namespace apriori {

namespace {
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

double xi_norm(const std::array<int, 3>& xi) {
    return std::sqrt(double(xi[0]) * xi[0] + double(xi[1]) * xi[1] + double(xi[2]) * xi[2]);
}
}  // namespace

SpectralField spectral_derivative(const SpectralField& f, const std::vector<int>& alpha) {
    const Grid& g = f.grid();
    if (static_cast<int>(alpha.size()) != g.dims())
        throw std::invalid_argument("spectral_derivative: multi-index length must equal dims");
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("spectral_derivative: negative multi-index entry");
    SpectralField out = f;
    const int nyquist = -g.n() / 2;
    out.apply_multiplier([&](const std::array<int, 3>& xi) -> cplx {
        cplx m{1.0, 0.0};
        for (int d = 0; d < g.dims(); ++d) {
            if (alpha[d] == 0) continue;
            // The -n/2 mode has no conjugate partner; drop it for odd orders.
            if (xi[d] == nyquist && alpha[d] % 2 != 0) return 0.0;
            m *= std::pow(I * double(xi[d]), alpha[d]);
        }
        return m;
    });
    out.refresh_zero_mean_flag();
    return out;
}

SpectralField fractional_laplacian(const SpectralField& f, double a) {
    if (a < 0.0) throw std::invalid_argument("fractional_laplacian: a must be >= 0");
    SpectralField out = f;
    if (a == 0.0) return out;
    out.apply_multiplier(
        [&](const std::array<int, 3>& xi) -> cplx { return std::pow(xi_norm(xi), a); });
    return out;
}

SpectralField riesz_transform(const SpectralField& f, int axis) {
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.dims())
        throw std::invalid_argument("riesz_transform: axis out of range");
    f.require_zero_mean("riesz_transform");
    SpectralField out = f;
    out.apply_multiplier([&](const std::array<int, 3>& xi) -> cplx {
        double r = xi_norm(xi);
        if (r == 0.0) return 0.0;
        return I * double(xi[axis]) / r;
    });
    out.make_zero_mean();
    return out;
}

SpectralField leray_project(const SpectralField& u) {
    const Grid& g = u.grid();
    if (u.components() != g.dims())
        throw std::invalid_argument("leray_project: expected a vector field");
    SpectralField out = u;
    const std::size_t size = g.size();
    for (std::size_t i = 0; i < size; ++i) {
        auto xi = g.wavevector(i);
        double r2 = double(xi[0]) * xi[0] + double(xi[1]) * xi[1] + double(xi[2]) * xi[2];
        if (r2 == 0.0) continue;  // mean velocity is divergence-free already
        cplx dot{0.0, 0.0};
        for (int d = 0; d < g.dims(); ++d) dot += double(xi[d]) * out.coef(d)[i];
        for (int d = 0; d < g.dims(); ++d) out.coef(d)[i] -= (double(xi[d]) / r2) * dot;
    }
    return out;
}

SpectralField qg_velocity(const SpectralField& theta) {
    const Grid& g = theta.grid();
    if (g.dims() != 2) throw std::invalid_argument("qg_velocity: dims must be 2");
    if (theta.components() != 1) throw std::invalid_argument("qg_velocity: expected scalar theta");
    theta.require_zero_mean("qg_velocity");
    SpectralField v(g, 2);
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto xi = g.wavevector(i);
        double r = xi_norm(xi);
        if (r == 0.0) continue;
        cplx t = theta.coef(0)[i];
        v.coef(0)[i] = -I * double(xi[1]) / r * t;
        v.coef(1)[i] = I * double(xi[0]) / r * t;
    }
    v.make_zero_mean();
    return v;
}

SpectralField dealias(const SpectralField& f) {
    const Grid& g = f.grid();
    const int cutoff = g.dealias_cutoff();
    SpectralField out = f;
    out.apply_multiplier([&](const std::array<int, 3>& xi) -> cplx {
        for (int d = 0; d < g.dims(); ++d)
            if (std::abs(xi[d]) > cutoff) return 0.0;
        return 1.0;
    });
    return out;
}

SpectralField gradient(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out(g, f.components() * g.dims());
    const int nyq = -g.n() / 2;
    for (int c = 0; c < f.components(); ++c) {
        for (int d = 0; d < g.dims(); ++d) {
            auto& dst = out.coef(c * g.dims() + d);
            for (std::size_t i = 0; i < g.size(); ++i) {
                auto xi = g.wavevector(i);
                dst[i] = (xi[d] == nyq) ? cplx{0.0, 0.0} : I * double(xi[d]) * f.coef(c)[i];
            }
        }
    }
    return out;
}

SpectralField divergence(const SpectralField& u) {
    const Grid& g = u.grid();
    if (u.components() != g.dims())
        throw std::invalid_argument("divergence: expected a vector field");
    SpectralField out(g, 1);
    const int nyq = -g.n() / 2;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto xi = g.wavevector(i);
        cplx s{0.0, 0.0};
        for (int d = 0; d < g.dims(); ++d)
            if (xi[d] != nyq) s += I * double(xi[d]) * u.coef(d)[i];
        out.coef(0)[i] = s;
    }
    out.refresh_zero_mean_flag();
    return out;
}

SpectralField curl(const SpectralField& u) {
    const Grid& g = u.grid();
    if (g.dims() != 3 || u.components() != 3)
        throw std::invalid_argument("curl: expected a 3D vector field");
    SpectralField out(g, 3);
    const int nyq = -g.n() / 2;
    auto d = [&](int axis, int comp, std::size_t i) -> cplx {
        auto xi = g.wavevector(i);
        if (xi[axis] == nyq) return 0.0;
        return I * double(xi[axis]) * u.coef(comp)[i];
    };
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.coef(0)[i] = d(1, 2, i) - d(2, 1, i);
        out.coef(1)[i] = d(2, 0, i) - d(0, 2, i);
        out.coef(2)[i] = d(0, 1, i) - d(1, 0, i);
    }
    return out;
}

SpectralField multiply_dealias(const SpectralField& f, int cf, const SpectralField& g, int cg) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("multiply_dealias: grid mismatch");
    std::vector<double> a = f.to_real(cf);
    std::vector<double> b = g.to_real(cg);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return dealias(SpectralField::from_real_scalar(f.grid(), a));
}

SpectralField advect(const SpectralField& u, const SpectralField& w) {
    const Grid& g = u.grid();
    if (u.components() != g.dims()) throw std::invalid_argument("advect: u must be a vector field");
    std::vector<std::vector<double>> uvals = u.to_real_all();
    SpectralField dw = gradient(w);
    std::vector<std::vector<double>> result(w.components(),
                                            std::vector<double>(g.size(), 0.0));
    for (int c = 0; c < w.components(); ++c) {
        for (int d = 0; d < g.dims(); ++d) {
            std::vector<double> dwc = dw.to_real(c * g.dims() + d);
            for (std::size_t i = 0; i < dwc.size(); ++i) result[c][i] += uvals[d][i] * dwc[i];
        }
    }
    return dealias(SpectralField::from_real(g, result));
}

}  // namespace apriori
