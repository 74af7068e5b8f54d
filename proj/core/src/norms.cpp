#include "apriori/norms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "apriori/ops.hpp"

namespace apriori {

namespace {

struct Quadratic {
    double val = 0.0;
    double grad[3] = {0.0, 0.0, 0.0};
    double hess[3][3] = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
};

/// Squared pointwise magnitude of the trigonometric interpolant at an
/// arbitrary point, with its gradient and Hessian.
Quadratic magnitude_squared_at(const SpectralField& f, const double* x) {
    const Grid& g = f.grid();
    const int d = g.dims();
    const int n = g.n();

    std::vector<std::complex<double>> phase(std::size_t(d) * n);
    std::vector<double> wave(n);
    for (int j = 0; j < n; ++j) wave[j] = double(g.wavenumber(j));
    for (int dim = 0; dim < d; ++dim)
        for (int j = 0; j < n; ++j)
            phase[std::size_t(dim) * n + j] = std::polar(1.0, wave[j] * x[dim]);

    Quadratic q;
    for (int c = 0; c < f.components(); ++c) {
        const auto& coef = f.coef(c);
        std::complex<double> v = 0.0;
        std::complex<double> dv[3] = {0.0, 0.0, 0.0};
        std::complex<double> ddv[3][3] = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
        std::size_t m = 0;
        int idx[3] = {0, 0, 0};
        for (; m < g.size(); ++m) {
            std::complex<double> term = coef[m];
            double xi[3] = {0.0, 0.0, 0.0};
            for (int dim = 0; dim < d; ++dim) {
                term *= phase[std::size_t(dim) * n + idx[dim]];
                xi[dim] = wave[idx[dim]];
            }
            v += term;
            std::complex<double> iterm(-term.imag(), term.real());
            for (int a = 0; a < d; ++a) {
                dv[a] += xi[a] * iterm;
                for (int b = a; b < d; ++b) ddv[a][b] -= xi[a] * xi[b] * term;
            }
            for (int dim = d - 1; dim >= 0; --dim) {
                if (++idx[dim] < n) break;
                idx[dim] = 0;
            }
        }
        double vr = v.real();
        q.val += vr * vr;
        for (int a = 0; a < d; ++a) {
            q.grad[a] += 2.0 * vr * dv[a].real();
            for (int b = a; b < d; ++b)
                q.hess[a][b] += 2.0 * (dv[a].real() * dv[b].real() + vr * ddv[a][b].real());
        }
    }
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < a; ++b) q.hess[a][b] = q.hess[b][a];
    return q;
}

bool solve_symmetric(int d, const double hess[3][3], const double* rhs, double* out) {
    double a[3][4];
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = hess[i][j];
        a[i][d] = rhs[i];
    }
    for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return false;
        if (piv != col)
            for (int j = 0; j <= d; ++j) std::swap(a[piv][j], a[col][j]);
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            double factor = a[r][col] / a[col][col];
            for (int j = col; j <= d; ++j) a[r][j] -= factor * a[col][j];
        }
    }
    for (int i = 0; i < d; ++i) out[i] = a[i][d] / a[i][i];
    return true;
}

/// Polish the discrete argmax of |f|^2 against the band-limited interpolant.
double refined_sup_squared(const SpectralField& f, std::size_t argmax) {
    const Grid& g = f.grid();
    const int d = g.dims();
    const int n = g.n();
    const double h = 2.0 * std::acos(-1.0) / n;

    double x[3] = {0.0, 0.0, 0.0};
    std::size_t rem = argmax;
    for (int dim = d - 1; dim >= 0; --dim) {
        x[dim] = double(rem % n) * h;
        rem /= n;
    }

    double best = magnitude_squared_at(f, x).val;
    for (int iter = 0; iter < 40; ++iter) {
        Quadratic q = magnitude_squared_at(f, x);
        best = std::max(best, q.val);
        double gnorm = 0.0;
        for (int a = 0; a < d; ++a) gnorm += q.grad[a] * q.grad[a];
        gnorm = std::sqrt(gnorm);
        if (gnorm * h <= 1e-14 * std::max(best, 1e-300)) break;

        double step[3] = {0.0, 0.0, 0.0};
        double neg_grad[3];
        for (int a = 0; a < d; ++a) neg_grad[a] = -q.grad[a];
        bool newton = solve_symmetric(d, q.hess, neg_grad, step);
        if (newton) {
            double ascent = 0.0, len = 0.0;
            for (int a = 0; a < d; ++a) {
                ascent += step[a] * q.grad[a];
                len += step[a] * step[a];
            }
            if (ascent <= 0.0 || len > h * h) newton = false;
        }
        if (!newton)
            for (int a = 0; a < d; ++a) step[a] = q.grad[a] * (0.25 * h / gnorm);

        double candidate = 0.0;
        double y[3];
        bool improved = false;
        for (int halve = 0; halve < 25; ++halve) {
            for (int a = 0; a < d; ++a) y[a] = x[a] + step[a];
            candidate = magnitude_squared_at(f, y).val;
            if (candidate > q.val) {
                improved = true;
                break;
            }
            for (int a = 0; a < d; ++a) step[a] *= 0.5;
        }
        if (!improved) break;
        for (int a = 0; a < d; ++a) x[a] = y[a];
        best = std::max(best, candidate);
    }
    return best;
}

}  // namespace

double lp_norm(const SpectralField& f, double p) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    auto vals = f.to_real_all();
    const std::size_t size = f.grid().size();
    if (p == kInfExponent) {
        double mx = 0.0;
        std::size_t argmax = 0;
        for (std::size_t i = 0; i < size; ++i) {
            double m2 = 0.0;
            for (const auto& comp : vals) m2 += comp[i] * comp[i];
            if (m2 > mx) {
                mx = m2;
                argmax = i;
            }
        }
        if (mx > 0.0) mx = std::max(mx, refined_sup_squared(f, argmax));
        return std::sqrt(mx);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        double m2 = 0.0;
        for (const auto& comp : vals) m2 += comp[i] * comp[i];
        acc += std::pow(m2, p / 2.0);
    }
    return std::pow(acc * f.grid().quad_weight(), 1.0 / p);
}

std::vector<std::vector<int>> multi_indices(int dims, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(dims, 0);
    // lexicographic enumeration of compositions of k into dims parts
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == dims - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int a = rem; a >= 0; --a) {
            cur[pos] = a;
            self(self, pos + 1, rem - a);
        }
    };
    rec(rec, 0, k);
    return out;
}

double homogeneous_sobolev(const SpectralField& f, int k, double p) {
    if (k < 0) throw std::invalid_argument("homogeneous_sobolev: k must be >= 0");
    if (p < 1.0) throw std::invalid_argument("homogeneous_sobolev: p must be >= 1");
    if (k == 0) return lp_norm(f, p);
    const Grid& g = f.grid();
    if (p == kInfExponent) {
        double mx = 0.0;
        for (const auto& alpha : multi_indices(g.dims(), k))
            mx = std::max(mx, lp_norm(spectral_derivative(f, alpha), kInfExponent));
        return mx;
    }
    double acc = 0.0;
    for (const auto& alpha : multi_indices(g.dims(), k)) {
        SpectralField df = spectral_derivative(f, alpha);
        auto vals = df.to_real_all();
        for (std::size_t i = 0; i < g.size(); ++i) {
            double m2 = 0.0;
            for (const auto& comp : vals) m2 += comp[i] * comp[i];
            acc += std::pow(m2, p / 2.0);
        }
    }
    return std::pow(acc * g.quad_weight(), 1.0 / p);
}

double grad_linf(const SpectralField& f) { return lp_norm(gradient(f), kInfExponent); }

double grad_l2_squared(const SpectralField& f) {
    const Grid& g = f.grid();
    double acc = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        const auto& coef = f.coef(c);
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto xi = g.wavevector(i);
            double r2 = double(xi[0]) * xi[0] + double(xi[1]) * xi[1] + double(xi[2]) * xi[2];
            acc += r2 * std::norm(coef[i]);
        }
    }
    return acc * std::pow(2.0 * std::acos(-1.0), g.dims());
}

}  // namespace apriori
