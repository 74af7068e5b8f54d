#include "apriori/quadrature.hpp"

#include <algorithm>
#include <stdexcept>

namespace apriori {

std::vector<double> cumulative_trapezoid(const std::vector<double>& y,
                                         const std::vector<double>& x) {
    if (y.size() != x.size()) throw std::invalid_argument("cumulative_trapezoid: size mismatch");
    std::vector<double> out(y.size(), 0.0);
    for (std::size_t i = 1; i < y.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return out;
}

std::vector<double> cumulative_quartic(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n < 4) {  // too short for cubic stencils
        for (std::size_t i = 1; i < n; ++i)
            out[i] = out[i - 1] + 0.5 * h * (y[i] + y[i - 1]);
        return out;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double inc;
        if (i == 0)
            inc = h / 24.0 * (9.0 * y[0] + 19.0 * y[1] - 5.0 * y[2] + y[3]);
        else if (i == n - 2)
            inc = h / 24.0 * (y[n - 4] - 5.0 * y[n - 3] + 19.0 * y[n - 2] + 9.0 * y[n - 1]);
        else
            inc = h / 24.0 * (-y[i - 1] + 13.0 * y[i] + 13.0 * y[i + 1] - y[i + 2]);
        out[i + 1] = out[i] + inc;
    }
    return out;
}

std::vector<double> cumulative_cubic(const std::vector<double>& y, const std::vector<double>& x) {
    if (y.size() != x.size()) throw std::invalid_argument("cumulative_cubic: size mismatch");
    const std::size_t n = y.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    if (n < 4) return cumulative_trapezoid(y, x);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t j0 = i == 0 ? 0 : std::min(i - 1, n - 4);
        double a = x[i], b = x[i + 1];
        double inc = 0.0;
        for (std::size_t m = j0; m < j0 + 4; ++m) {
            // integrate the Lagrange basis for node m over [a, b] in
            // coordinates shifted by a
            double r[3];
            double denom = 1.0;
            int idx = 0;
            for (std::size_t q = j0; q < j0 + 4; ++q) {
                if (q == m) continue;
                r[idx++] = x[q] - a;
                denom *= x[m] - x[q];
            }
            double c2 = -(r[0] + r[1] + r[2]);
            double c1 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
            double c0 = -r[0] * r[1] * r[2];
            double u = b - a;
            double integral = u * u * u * u / 4.0 + c2 * u * u * u / 3.0 + c1 * u * u / 2.0 +
                              c0 * u;
            inc += y[m] * integral / denom;
        }
        out[i + 1] = out[i] + inc;
    }
    return out;
}

double trapezoid(const std::vector<double>& y, const std::vector<double>& x) {
    auto c = cumulative_trapezoid(y, x);
    return c.back();
}

double simpson_nonuniform(const std::vector<double>& y, const std::vector<double>& x) {
    if (y.size() != x.size()) throw std::invalid_argument("simpson_nonuniform: size mismatch");
    const std::size_t n = x.size();
    if (n < 2) return 0.0;
    if (n == 2) return 0.5 * (y[0] + y[1]) * (x[1] - x[0]);
    double s = 0.0;
    std::size_t i = 0;
    while (i + 2 < n) {
        double h0 = x[i + 1] - x[i];
        double h1 = x[i + 2] - x[i + 1];
        s += (h0 + h1) / 6.0 *
             ((2.0 - h1 / h0) * y[i] + (h0 + h1) * (h0 + h1) / (h0 * h1) * y[i + 1] +
              (2.0 - h0 / h1) * y[i + 2]);
        i += 2;
    }
    if (i + 1 < n) {
        // quadratic through the last three points, integrated over the last interval
        double h0 = x[i] - x[i - 1];
        double h1 = x[i + 1] - x[i];
        s += (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1)) * y[i + 1] +
             (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0) * y[i] -
             h1 * h1 * h1 / (6.0 * h0 * (h0 + h1)) * y[i - 1];
    }
    return s;
}

}  // namespace apriori
