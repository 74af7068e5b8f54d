#include "apriori/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "apriori/quadrature.hpp"
#include "apriori/solver.hpp"

namespace apriori {

std::string family_name(Family f) {
    switch (f) {
        case Family::NSHk: return "NS-Hk";
        case Family::NSLp: return "NS-Lp";
        case Family::QGWkp: return "QG-Wkp";
        case Family::QGBesov: return "QG-Besov";
    }
    throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& name) {
    if (name == "NS-Hk") return Family::NSHk;
    if (name == "NS-Lp") return Family::NSLp;
    if (name == "QG-Wkp") return Family::QGWkp;
    if (name == "QG-Besov") return Family::QGBesov;
    throw std::invalid_argument("unknown transform family: " + name);
}

void TransformParams::validate() const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("TransformParams: sign must be +1 or -1");
    if (gamma <= 0.0) throw std::invalid_argument("TransformParams: gamma must be positive");
    switch (family) {
        case Family::NSHk:
            if (k < 3) throw std::invalid_argument("TransformParams: NS-Hk needs k >= 3");
            break;
        case Family::NSLp:
            if (!(p > 3.0)) throw std::invalid_argument("TransformParams: NS-Lp needs p > 3");
            break;
        case Family::QGWkp:
            if (p < 1.0 || !(double(k) > 2.0 / p + 1.0))
                throw std::invalid_argument("TransformParams: QG-Wkp needs k > 2/p + 1");
            break;
        case Family::QGBesov:
            if (!(lambda > -1.0)) throw std::invalid_argument("TransformParams: QG-Besov needs lambda > -1");
            break;
    }
}

double TransformParams::drive_exponent() const {
    switch (family) {
        case Family::NSHk: return 5.0 / (2.0 * k);
        case Family::NSLp: return 2.0 * p / (p - 3.0);
        case Family::QGWkp: return (p + 2.0) / (k * p);
        case Family::QGBesov: return 1.0;
    }
    throw std::logic_error("drive_exponent: bad enum");
}

std::string TransformParams::drive_column() const {
    switch (family) {
        case Family::NSHk: return dkl_label(k, 2.0);
        case Family::NSLp: return lp_label(p);
        case Family::QGWkp: return dkl_label(k, p);
        case Family::QGBesov: return "besov_b0inf1";
    }
    throw std::logic_error("drive_column: bad enum");
}

double TransformParams::cE() const {
    switch (family) {
        case Family::NSHk: return 3.0 / 5.0;
        case Family::NSLp: return 1.0 / 2.0;
        case Family::QGWkp: return 2.0 / (p + 2.0);
        case Family::QGBesov: return lambda / (lambda + 1.0);
    }
    throw std::logic_error("cE: bad enum");
}

double TransformParams::cL() const {
    switch (family) {
        case Family::NSHk: return 2.0 / 5.0;
        case Family::NSLp: return 1.0 / 2.0;
        case Family::QGWkp: return p / (p + 2.0);
        case Family::QGBesov: return 1.0 / (lambda + 1.0);
    }
    throw std::logic_error("cL: bad enum");
}

int TransformParams::space_dims() const {
    return family == Family::NSHk || family == Family::NSLp ? 3 : 2;
}

double TransformParams::transfer_log_coeff(int norm_k, double norm_p) const {
    double inv_p = std::isinf(norm_p) ? 0.0 : 1.0 / norm_p;
    return -cE() + cL() * (-double(norm_k) + double(space_dims()) * inv_p);
}

std::optional<std::pair<int, double>> norm_slot(const std::string& column) {
    if (column == "l2") return std::make_pair(0, 2.0);
    if (column == "grad_linf" || column == "besov_b0inf1" || column == "vort_linf")
        return std::make_pair(1, std::numeric_limits<double>::infinity());
    if (column.rfind("lp_", 0) == 0) {
        std::string tail = column.substr(3);
        double p = tail == "inf" ? std::numeric_limits<double>::infinity() : std::stod(tail);
        return std::make_pair(0, p);
    }
    if (column.rfind("dkl_", 0) == 0) {
        std::string tail = column.substr(4);
        auto us = tail.find('_');
        if (us == std::string::npos) return std::nullopt;
        int k = std::stoi(tail.substr(0, us));
        std::string ps = tail.substr(us + 1);
        double p = ps == "inf" ? std::numeric_limits<double>::infinity() : std::stod(ps);
        return std::make_pair(k, p);
    }
    return std::nullopt;
}

std::vector<double> driving_norm(const NormSeries& series, const TransformParams& params) {
    params.validate();
    std::vector<double> col = series.column(params.drive_column());
    double beta = params.drive_exponent();
    for (double& v : col) v = std::pow(v, beta);
    return col;
}

std::vector<double> cumulative_drive(const std::vector<double>& A, const std::vector<double>& t,
                                     int order) {
    if (A.size() != t.size()) throw std::invalid_argument("cumulative_drive: size mismatch");
    if (order == 4) {
        if (t.size() < 2) return std::vector<double>(t.size(), 0.0);
        return cumulative_quartic(A, t[1] - t[0]);
    }
    return cumulative_trapezoid(A, t);
}

std::vector<double> s_of_t(const std::vector<double>& A, const std::vector<double>& t,
                           double gamma, int sign, int order) {
    std::vector<double> inner = cumulative_drive(A, t, order);
    for (std::size_t i = 0; i < inner.size(); ++i)
        inner[i] = std::exp(sign * gamma * inner[i]);
    return cumulative_drive(inner, t, order);
}

TransformedSeries norm_transfer(const NormSeries& series, const TransformParams& params) {
    params.validate();
    std::vector<double> t = series.times();
    std::vector<double> A = driving_norm(series, params);
    std::vector<double> I1 = cumulative_drive(A, t, 2);
    std::vector<double> s = s_of_t(A, t, params.gamma, params.sign, 2);

    TransformedSeries out;
    out.columns = {"t", "s", "E", "L"};
    std::vector<std::pair<std::size_t, double>> transferred;  // source column, log coeff
    for (std::size_t c = 0; c < series.columns.size(); ++c) {
        auto slot = norm_slot(series.columns[c]);
        if (!slot) continue;
        out.columns.push_back(series.columns[c]);
        transferred.emplace_back(c, params.transfer_log_coeff(slot->first, slot->second));
    }

    for (std::size_t i = 0; i < series.rows.size(); ++i) {
        double arg = params.sign * params.gamma * I1[i];
        std::vector<double> row{t[i], s[i], std::exp(params.cE() * arg),
                                std::exp(params.cL() * arg)};
        for (const auto& [c, coeff] : transferred)
            row.push_back(std::exp(coeff * arg) * series.rows[i][c]);
        out.rows.push_back(std::move(row));
    }
    return out;
}

void TransformedSeries::write_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t c = 0; c < columns.size(); ++c)
        f << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c)
            f << format_g17(r[c]) << (c + 1 < r.size() ? "," : "\n");
}

InvariantReport invariant_report(const NormSeries& series, const TransformParams& params,
                                 int order, double factor_tol, double integral_tol) {
    params.validate();
    InvariantReport rep;

    double expected;
    std::pair<int, double> slot;
    switch (params.family) {
        case Family::NSHk:
            rep.factor_column = "l2";
            slot = {0, 2.0};
            expected = 0.0;
            break;
        case Family::NSLp:
            rep.factor_column = lp_label(3.0);
            slot = {0, 3.0};
            expected = 0.0;
            break;
        case Family::QGWkp:
            rep.factor_column = lp_label(params.p);
            slot = {0, params.p};
            expected = 0.0;
            break;
        case Family::QGBesov:
            rep.factor_column = "besov_b0inf1";
            slot = {1, std::numeric_limits<double>::infinity()};
            expected = -1.0;
            break;
    }
    rep.expected_coeff = expected;
    double coeff = params.transfer_log_coeff(slot.first, slot.second);
    rep.algebraic_deviation = std::abs(coeff - expected);

    std::vector<double> t = series.times();
    std::vector<double> A = driving_norm(series, params);
    std::vector<double> I1 = cumulative_drive(A, t, order);

    for (std::size_t i = 0; i < t.size(); ++i) {
        double arg = params.sign * params.gamma * I1[i];
        double factor = std::exp(coeff * arg);
        double want = std::exp(expected * arg);
        rep.max_factor_deviation =
            std::max(rep.max_factor_deviation, std::abs(factor / want - 1.0));
    }
    rep.factor_ok = rep.algebraic_deviation <= 1e-15 && rep.max_factor_deviation <= factor_tol;

    // int_0^t A_v dtau vs int_0^{s(t)} A_V dsigma, the latter as a quadrature
    // on the (generally non-uniform) s grid
    std::vector<double> s = s_of_t(A, t, params.gamma, params.sign, order);
    double beta = params.drive_exponent();
    double drive_coeff = beta * params.transfer_log_coeff(slot.first, slot.second);
    if (params.family != Family::QGBesov) {
        auto dslot = norm_slot(params.drive_column());
        drive_coeff = beta * params.transfer_log_coeff(dslot->first, dslot->second);
    }
    std::vector<double> A_V(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        A_V[i] = std::exp(drive_coeff * params.sign * params.gamma * I1[i]) * A[i];

    std::vector<double> lhs = cumulative_drive(A, t, order);
    std::vector<double> rhs =
        order == 4 ? cumulative_cubic(A_V, s) : cumulative_trapezoid(A_V, s);
    rep.integral_mismatch.resize(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        double denom = std::max(std::abs(lhs[i]), 1e-300);
        rep.integral_mismatch[i] = i == 0 ? 0.0 : std::abs(lhs[i] - rhs[i]) / denom;
        rep.max_integral_mismatch = std::max(rep.max_integral_mismatch, rep.integral_mismatch[i]);
    }
    rep.integral_ok = rep.max_integral_mismatch <= integral_tol;
    return rep;
}

}  // namespace apriori
