#include "apriori/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <stdexcept>
#include <thread>

#include "apriori/quadrature.hpp"
#include "apriori/solver.hpp"
#include "apriori/transforms.hpp"

namespace apriori {

namespace {

int worker_count() {
    if (const char* env = std::getenv("APRIORI_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::T11i: return "1.1i";
        case Theorem::T11ii: return "1.1ii";
        case Theorem::T12: return "1.2";
        case Theorem::T13i: return "1.3i";
        case Theorem::T13ii: return "1.3ii";
        case Theorem::T14Upper: return "1.4upper";
        case Theorem::T14Lower: return "1.4lower";
    }
    throw std::logic_error("theorem_name: bad enum");
}

Theorem theorem_from_name(const std::string& name) {
    if (name == "1.1i") return Theorem::T11i;
    if (name == "1.1ii") return Theorem::T11ii;
    if (name == "1.2") return Theorem::T12;
    if (name == "1.3i") return Theorem::T13i;
    if (name == "1.3ii") return Theorem::T13ii;
    if (name == "1.4upper") return Theorem::T14Upper;
    if (name == "1.4lower") return Theorem::T14Lower;
    throw std::invalid_argument("unknown theorem id: " + name);
}

int EstimateParams::sign() const {
    switch (theorem) {
        case Theorem::T11i:
        case Theorem::T12:
        case Theorem::T13i:
        case Theorem::T14Upper: return +1;
        default: return -1;
    }
}

double EstimateParams::beta() const {
    switch (theorem) {
        case Theorem::T11i:
        case Theorem::T11ii: return 5.0 / (2.0 * k);
        case Theorem::T12: return 2.0 * p / (p - 3.0);
        case Theorem::T13i:
        case Theorem::T13ii: return (p + 2.0) / (k * p);
        default: return 1.0;
    }
}

std::string EstimateParams::lhs_column() const {
    switch (theorem) {
        case Theorem::T11i:
        case Theorem::T11ii: return dkl_label(k, 2.0);
        case Theorem::T12: return lp_label(p);
        case Theorem::T13i:
        case Theorem::T13ii: return dkl_label(k, p);
        default: return "grad_linf";
    }
}

std::string EstimateParams::drive_column() const {
    switch (theorem) {
        case Theorem::T14Upper:
        case Theorem::T14Lower: return "besov_b0inf1";
        default: return lhs_column();
    }
}

double EstimateParams::initial_factor(const NormSeries& series) const {
    switch (theorem) {
        case Theorem::T11i:
        case Theorem::T11ii:
            return std::pow(series.column("l2").front(), 1.0 - beta());
        case Theorem::T13i:
        case Theorem::T13ii:
            return std::pow(series.column(lp_label(p)).front(), 1.0 - beta());
        default: return 1.0;
    }
}

void EstimateParams::validate(const NormSeries& series) const {
    if (C0 <= 0.0) throw std::invalid_argument("EstimateParams: C0 must be positive");
    switch (theorem) {
        case Theorem::T11i:
        case Theorem::T11ii:
            if (k < 3) throw std::invalid_argument("EstimateParams: theorem 1.1 needs k >= 3");
            break;
        case Theorem::T12:
            if (!(p > 3.0)) throw std::invalid_argument("EstimateParams: theorem 1.2 needs p > 3");
            break;
        case Theorem::T13i:
        case Theorem::T13ii:
            if (!(p > 1.0) || !(double(k) > 2.0 / p + 1.0))
                throw std::invalid_argument("EstimateParams: theorem 1.3 needs p > 1 and k > 2/p + 1");
            break;
        default: break;
    }
    (void)series.column_index(lhs_column());
    (void)series.column_index(drive_column());
    double thr = threshold(series);
    if (gamma < thr * (1.0 - 1e-12))
        throw std::invalid_argument("EstimateParams: gamma below hypothesis threshold " +
                                    format_g17(thr));
}

bool MarginSeries::all_ok() const {
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!voided[i] && !ok[i]) return false;
    return true;
}

void MarginSeries::write_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "t,lhs,rhs,margin,ok,void\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        f << format_g17(t[i]) << ',' << format_g17(lhs[i]) << ',' << format_g17(rhs[i]) << ','
          << format_g17(margin[i]) << ',' << int(ok[i]) << ',' << int(voided[i]) << "\n";
}

namespace {

struct Cumulatives {
    std::vector<double> t, lhs, A, I1, I2;
    double lhs0, F, thr;
};

Cumulatives prepare(const NormSeries& series, const EstimateParams& params, int order) {
    params.validate(series);
    Cumulatives c;
    c.t = series.times();
    c.lhs = series.column(params.lhs_column());
    c.A = series.column(params.drive_column());
    double b = params.beta();
    for (double& v : c.A) v = std::pow(v, b);
    c.I1 = cumulative_drive(c.A, c.t, order);
    std::vector<double> e(c.I1.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = std::exp(params.sign() * params.gamma * c.I1[i]);
    c.I2 = cumulative_drive(e, c.t, order);
    c.lhs0 = c.lhs.front();
    c.F = params.initial_factor(series);
    c.thr = params.C0 * c.F;
    return c;
}

void finalize(MarginSeries& m, const EstimateParams& params) {
    m.gamma_used = params.gamma;
    m.C0_used = params.C0;
    bool have_min = false;
    for (std::size_t i = 0; i < m.t.size(); ++i) {
        if (m.voided[i]) continue;
        if (!have_min || m.margin[i] < m.min_margin) {
            m.min_margin = m.margin[i];
            have_min = true;
        }
        if (!m.ok[i] && !m.first_violation) m.first_violation = m.t[i];
    }
}

}  // namespace

MarginSeries check_main(const NormSeries& series, const EstimateParams& params, double rtol,
                        int order) {
    Cumulatives c = prepare(series, params, order);
    const int sgn = params.sign();
    const double b = params.beta();

    MarginSeries m;
    m.t = c.t;
    bool voided = false;
    for (std::size_t i = 0; i < c.t.size(); ++i) {
        double y = 1.0 + sgn * (params.gamma - c.thr) * std::pow(c.lhs0, b) * c.I2[i];
        if (sgn < 0 && y <= 0.0) voided = true;
        if (voided && y > 0.0)
            throw std::logic_error("check_main: denominator bracket recovered after voiding");
        m.lhs.push_back(c.lhs[i]);
        if (voided) {
            if (!m.t_star) m.t_star = c.t[i];
            m.rhs.push_back(0.0);
            m.margin.push_back(0.0);
            m.ok.push_back(1);
            m.voided.push_back(1);
            continue;
        }
        double rhs = c.lhs0 * std::exp(sgn * (params.gamma / b) * c.I1[i]) / std::pow(y, 1.0 / b);
        double margin = sgn > 0 ? rhs - c.lhs[i] : c.lhs[i] - rhs;
        m.rhs.push_back(rhs);
        m.margin.push_back(margin);
        m.ok.push_back(margin >= -rtol * std::abs(rhs) ? 1 : 0);
        m.voided.push_back(0);
    }
    finalize(m, params);
    return m;
}

MarginSeries check_denominator(const NormSeries& series, const EstimateParams& params, double rtol,
                               int order) {
    Cumulatives c = prepare(series, params, order);
    const int sgn = params.sign();
    const double b = params.beta();
    const double rate = c.thr * std::pow(c.lhs0, b);
    const double expo = c.thr > 0.0 ? params.gamma / c.thr - 1.0 : 0.0;

    MarginSeries m;
    m.t = c.t;
    if (sgn > 0 && rate > 0.0) m.t_star = 1.0 / rate;
    for (std::size_t i = 0; i < c.t.size(); ++i) {
        double y = 1.0 + sgn * (params.gamma - c.thr) * std::pow(c.lhs0, b) * c.I2[i];
        double bracket = 1.0 - sgn * rate * c.t[i];
        m.lhs.push_back(y);
        if (bracket <= 0.0) {
            m.rhs.push_back(0.0);
            m.margin.push_back(0.0);
            m.ok.push_back(1);
            m.voided.push_back(1);
            continue;
        }
        double bound = std::pow(bracket, -expo);
        double margin = sgn > 0 ? bound - y : y - bound;
        m.rhs.push_back(bound);
        m.margin.push_back(margin);
        m.ok.push_back(margin >= -rtol * std::abs(bound) ? 1 : 0);
        m.voided.push_back(0);
    }
    finalize(m, params);
    return m;
}

OdeSolution ode_comparison(double c, double beta, double X0, double horizon, int nsteps) {
    if (beta <= 0.0) throw std::invalid_argument("ode_comparison: beta must be positive");
    if (X0 < 0.0) throw std::invalid_argument("ode_comparison: X0 must be >= 0");
    if (nsteps < 1) throw std::invalid_argument("ode_comparison: nsteps must be >= 1");

    OdeSolution sol;
    double end = horizon;
    if (c < 0.0 && X0 > 0.0) {
        double root = -1.0 / (c * beta * std::pow(X0, beta));
        if (root <= horizon) {
            sol.blowup = true;
            sol.blowup_s = root;
            end = 0.95 * root;
        }
    }
    double h = end / nsteps;
    auto f = [&](double x) { return -c * std::pow(x, 1.0 + beta); };
    double x = X0;
    for (int i = 0; i <= nsteps; ++i) {
        double s = i * h;
        sol.s.push_back(s);
        sol.closed.push_back(X0 / std::pow(1.0 + c * beta * std::pow(X0, beta) * s, 1.0 / beta));
        sol.numeric.push_back(x);
        if (i == nsteps) break;
        double k1 = f(x);
        double k2 = f(x + 0.5 * h * k1);
        double k3 = f(x + 0.5 * h * k2);
        double k4 = f(x + h * k3);
        x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return sol;
}

std::vector<double> gronwall_oracle(const NormSeries& series, int k, double C) {
    std::vector<double> t = series.times();
    std::vector<double> g = series.column("grad_linf");
    std::vector<double> I = cumulative_trapezoid(g, t);
    double x0 = series.column(dkl_label(k, 2.0)).front();
    for (double& v : I) v = x0 * std::exp(C * v);
    return I;
}

void SweepTable::write_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "gamma,t,rhs,tightest_flag\n";
    for (std::size_t g = 0; g < gammas.size(); ++g)
        for (std::size_t i = 0; i < t.size(); ++i)
            f << format_g17(gammas[g]) << ',' << format_g17(t[i]) << ',' << format_g17(rhs[g][i])
              << ',' << (tightest_gamma[i] == gammas[g] ? 1 : 0) << "\n";
}

SweepTable gamma_sweep(const NormSeries& series, const EstimateParams& base,
                       const std::vector<double>& gamma_grid) {
    if (gamma_grid.empty()) throw std::invalid_argument("gamma_sweep: empty gamma grid");
    {
        EstimateParams check = base;
        for (double g : gamma_grid) {
            check.gamma = g;
            check.validate(series);
        }
    }

    SweepTable table;
    table.gammas = gamma_grid;
    table.t = series.times();
    table.rhs.resize(gamma_grid.size());

    const int workers = std::min<int>(worker_count(), static_cast<int>(gamma_grid.size()));
    std::vector<std::future<void>> jobs;
    for (int w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t g = w; g < gamma_grid.size(); g += workers) {
                EstimateParams params = base;
                params.gamma = gamma_grid[g];
                table.rhs[g] = check_main(series, params).rhs;
            }
        }));
    }
    for (auto& j : jobs) j.get();

    const int sgn = base.sign();
    table.tightest_gamma.resize(table.t.size());
    for (std::size_t i = 0; i < table.t.size(); ++i) {
        std::size_t best = 0;
        for (std::size_t g = 1; g < gamma_grid.size(); ++g) {
            bool better = sgn > 0 ? table.rhs[g][i] < table.rhs[best][i]
                                  : table.rhs[g][i] > table.rhs[best][i];
            if (better) best = g;
        }
        table.tightest_gamma[i] = gamma_grid[best];
    }

    EstimateParams at_thr = base;
    at_thr.gamma = at_thr.threshold(series);
    double ref = check_main(series, at_thr).rhs.back();
    for (const auto& r : table.rhs) {
        if (sgn > 0 ? r.back() < ref : r.back() > ref) {
            table.improves_on_threshold = true;
            break;
        }
    }
    return table;
}

}  // namespace apriori
