#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apriori/series.hpp"

namespace apriori {

enum class Family { NSHk, NSLp, QGWkp, QGBesov };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct TransformParams {
    Family family = Family::NSHk;
    int sign = +1;  // the +/- branch of the transform
    double gamma = 1.0;
    int k = 3;
    double p = 2.0;
    double lambda = 1.0;  // QG-Besov only

    void validate() const;  // throws std::invalid_argument

    /// Exponent beta applied to the driving norm.
    double drive_exponent() const;
    /// Series column holding the driving norm.
    std::string drive_column() const;

    /// E(t) = exp[sign * cE * gamma * I1(t)], L(t) likewise with cL.
    double cE() const;
    double cL() const;
    int space_dims() const;

    /// log-factor coefficient for transferring a (k, p) norm:
    /// ||D^k U||_p = exp[sign * gamma * I1 * coeff] ||D^k u||_p,
    /// coeff = -cE + cL * (-k + d/p).
    double transfer_log_coeff(int norm_k, double norm_p) const;
};

/// Column label -> the (k, p) slot it transfers through.
std::optional<std::pair<int, double>> norm_slot(const std::string& column);

struct TransformedSeries {
    std::vector<std::string> columns;  // t, s, E, L, then transferred norms
    std::vector<std::vector<double>> rows;
    void write_csv(const std::string& path) const;
};

/// A(t) = (driving norm)^beta per sample.
std::vector<double> driving_norm(const NormSeries& series, const TransformParams& params);

/// I1(t) = int_0^t A, cumulatively. Order 2 (trapezoid) on any grid; order 4
/// requires uniform spacing.
std::vector<double> cumulative_drive(const std::vector<double>& A, const std::vector<double>& t,
                                     int order = 2);

/// s(t) = int_0^t exp[sign * gamma * I1(tau)] d tau.
std::vector<double> s_of_t(const std::vector<double>& A, const std::vector<double>& t,
                           double gamma, int sign, int order = 2);

TransformedSeries norm_transfer(const NormSeries& series, const TransformParams& params);

struct InvariantReport {
    /// Column used for the exact-factor check and its expected log coefficient
    /// (0 for the scale-invariant norm, -1 for the QG-Besov driving norm).
    std::string factor_column;
    double expected_coeff = 0.0;
    double algebraic_deviation = 0.0;  // |coeff - expected|, exponent arithmetic only
    double max_factor_deviation = 0.0;

    /// Per-sample |int A_v dt - int A_V ds| relative to the running integral.
    std::vector<double> integral_mismatch;
    double max_integral_mismatch = 0.0;

    bool factor_ok = false;
    bool integral_ok = false;
};

InvariantReport invariant_report(const NormSeries& series, const TransformParams& params,
                                 int order = 2, double factor_tol = 1e-12,
                                 double integral_tol = 1e-6);

}  // namespace apriori
