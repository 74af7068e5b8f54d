#include "apriori/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "apriori/besov.hpp"
#include "apriori/norms.hpp"
#include "apriori/ops.hpp"
#include "apriori/presets.hpp"

namespace apriori {

void SimConfig::validate() const {
    if (nu < 0.0) throw std::invalid_argument("SimConfig: nu must be >= 0");
    if (kappa < 0.0) throw std::invalid_argument("SimConfig: kappa must be >= 0");
    if (alpha < 0.0 || alpha > 2.0) throw std::invalid_argument("SimConfig: alpha must lie in [0, 2]");
    if (t_end <= 0.0) throw std::invalid_argument("SimConfig: t_end must be positive");
    if (stride < 1) throw std::invalid_argument("SimConfig: stride must be >= 1");
    if (cfl_safety <= 0.0) throw std::invalid_argument("SimConfig: cfl_safety must be positive");
    for (double p : lp_exponents)
        if (p < 1.0) throw std::invalid_argument("SimConfig: L^p exponent must be >= 1");
    for (const auto& [k, p] : dk_norms)
        if (k < 1 || p < 1.0) throw std::invalid_argument("SimConfig: bad (k, p) norm request");
    if (besov && system != System::QG)
        throw std::invalid_argument("SimConfig: Besov column is a QG diagnostic");
    if (vorticity && system != System::NS)
        throw std::invalid_argument("SimConfig: vorticity column is an NS diagnostic");
}

std::string lp_label(double p) {
    if (p == kInfExponent) return "lp_inf";
    if (p == std::floor(p)) return "lp_" + std::to_string(static_cast<long>(p));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "lp_%g", p);
    return buf;
}

std::string dkl_label(int k, double p) {
    std::string tail = p == kInfExponent ? std::string("inf")
                       : p == std::floor(p) ? std::to_string(static_cast<long>(p))
                                            : [&] {
                                                  char b[32];
                                                  std::snprintf(b, sizeof(b), "%g", p);
                                                  return std::string(b);
                                              }();
    return "dkl_" + std::to_string(k) + "_" + tail;
}

SpectralField rhs_ns(const SpectralField& v, double nu) {
    if (v.grid().dims() != 3 || v.components() != 3)
        throw std::invalid_argument("rhs_ns: expected a 3D vector field");
    {
        SpectralField div = divergence(v);
        double scale = std::max(v.max_coef_abs(), 1e-30);
        if (div.max_coef_abs() > 1e-10 * scale)
            throw std::invalid_argument("rhs_ns: input is not divergence-free");
    }
    SpectralField out = leray_project(advect(v, v));
    const Grid& g = v.grid();
    for (int c = 0; c < 3; ++c) {
        auto& oc = out.coef(c);
        const auto& vc = v.coef(c);
        for (std::size_t m = 0; m < g.size(); ++m) {
            auto xi = g.wavevector(m);
            double r2 = double(xi[0]) * xi[0] + double(xi[1]) * xi[1] + double(xi[2]) * xi[2];
            oc[m] = -oc[m] - nu * r2 * vc[m];
        }
        oc[0] = 0.0;
    }
    return out;
}

SpectralField rhs_qg(const SpectralField& theta, double kappa, double alpha) {
    if (theta.grid().dims() != 2 || theta.components() != 1)
        throw std::invalid_argument("rhs_qg: expected a 2D scalar field");
    theta.require_zero_mean("rhs_qg");
    SpectralField out = advect(qg_velocity(theta), theta);
    const Grid& g = theta.grid();
    auto& oc = out.coef(0);
    const auto& tc = theta.coef(0);
    for (std::size_t m = 0; m < g.size(); ++m) {
        auto xi = g.wavevector(m);
        double r2 = double(xi[0]) * xi[0] + double(xi[1]) * xi[1];
        oc[m] = -oc[m] - kappa * std::pow(r2, 0.5 * alpha) * tc[m];
    }
    oc[0] = 0.0;
    out.make_zero_mean();
    return out;
}

Stepper::Stepper(const SimConfig& cfg) : cfg_(cfg) {
    Grid g(cfg.dims(), cfg.n);
    symbol_.resize(g.size());
    for (std::size_t m = 0; m < g.size(); ++m) {
        auto xi = g.wavevector(m);
        double r2 = 0.0;
        for (int d = 0; d < g.dims(); ++d) r2 += double(xi[d]) * xi[d];
        symbol_[m] = cfg.system == System::NS ? -cfg.nu * r2
                                              : -cfg.kappa * std::pow(r2, 0.5 * cfg.alpha);
    }
}

SpectralField Stepper::nonlinear(const SpectralField& state) const {
    SpectralField out = cfg_.system == System::NS
                            ? leray_project(advect(state, state))
                            : advect(qg_velocity(state), state);
    for (int c = 0; c < out.components(); ++c) {
        for (auto& v : out.coef(c)) v = -v;
        out.coef(c)[0] = 0.0;
    }
    return out;
}

void Stepper::scale_by_exp(SpectralField& f, double t) const {
    for (int c = 0; c < f.components(); ++c) {
        auto& fc = f.coef(c);
        for (std::size_t m = 0; m < fc.size(); ++m) fc[m] *= std::exp(symbol_[m] * t);
    }
}

double Stepper::cfl_limit(const SpectralField& state) const {
    const SpectralField vel = cfg_.system == System::NS ? state : qg_velocity(state);
    auto samples = vel.to_real_all();
    double vmax2 = 0.0;
    for (std::size_t i = 0; i < vel.grid().size(); ++i) {
        double m2 = 0.0;
        for (const auto& comp : samples) m2 += comp[i] * comp[i];
        vmax2 = std::max(vmax2, m2);
    }
    double vmax = std::sqrt(vmax2);
    double dx = 2.0 * std::numbers::pi / cfg_.n;
    if (vmax <= 0.0) return std::numeric_limits<double>::infinity();
    return cfg_.cfl_safety * dx / vmax;
}

void Stepper::step(SpectralField& state, double dt) const {
    if (dt <= 0.0) throw std::invalid_argument("step: dt must be positive");
    double limit = cfl_limit(state);
    if (dt > limit * (1.0 + 1e-12)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "step: CFL violation, dt = %.6g exceeds bound; suggested dt = %.6g",
                      dt, limit);
        throw std::runtime_error(buf);
    }

    auto axpy = [](SpectralField& y, double a, const SpectralField& x) {
        for (int c = 0; c < y.components(); ++c) {
            auto& yc = y.coef(c);
            const auto& xc = x.coef(c);
            for (std::size_t m = 0; m < yc.size(); ++m) yc[m] += a * xc[m];
        }
    };

    SpectralField k1 = nonlinear(state);

    SpectralField u2 = state;
    axpy(u2, 0.5 * dt, k1);
    scale_by_exp(u2, 0.5 * dt);
    SpectralField k2 = nonlinear(u2);

    SpectralField u3 = state;
    scale_by_exp(u3, 0.5 * dt);
    axpy(u3, 0.5 * dt, k2);
    SpectralField k3 = nonlinear(u3);

    SpectralField u4 = state;
    scale_by_exp(u4, dt);
    SpectralField ek3 = k3;
    scale_by_exp(ek3, 0.5 * dt);
    axpy(u4, dt, ek3);
    SpectralField k4 = nonlinear(u4);

    scale_by_exp(state, dt);
    scale_by_exp(k1, dt);
    scale_by_exp(k2, 0.5 * dt);
    axpy(state, dt / 6.0, k1);
    axpy(state, dt / 3.0, k2);
    axpy(state, dt / 3.0, ek3);  // ek3 is already E k3
    axpy(state, dt / 6.0, k4);

    if (cfg_.system == System::NS) {
        state = leray_project(state);
        for (int c = 0; c < state.components(); ++c) state.coef(c)[0] = 0.0;
    } else {
        state.make_zero_mean();
    }
}

double Stepper::tail_fraction(const SpectralField& state) const {
    const Grid g = state.grid();
    const int cutoff = g.dealias_cutoff();
    const double band = 2.0 * cutoff / 3.0;
    double total = 0.0, tail = 0.0;
    for (int c = 0; c < state.components(); ++c) {
        const auto& sc = state.coef(c);
        for (std::size_t m = 0; m < sc.size(); ++m) {
            auto xi = g.wavevector(m);
            int mx = 0;
            for (int d = 0; d < g.dims(); ++d) mx = std::max(mx, std::abs(xi[d]));
            if (mx > cutoff) continue;
            double e = std::norm(sc[m]);
            total += e;
            if (mx > band) tail += e;
        }
    }
    return total > 0.0 ? tail / total : 0.0;
}

namespace {

std::vector<double> sample_norms(const SimConfig& cfg, const SpectralField& state, double t,
                                 const BesovPartition* partition) {
    std::vector<double> row;
    row.push_back(t);
    row.push_back(lp_norm(state, 2.0));
    for (double p : cfg.lp_exponents) row.push_back(lp_norm(state, p));
    for (const auto& [k, p] : cfg.dk_norms) row.push_back(homogeneous_sobolev(state, k, p));
    row.push_back(grad_linf(state));
    if (cfg.besov) row.push_back(besov_grad(state, *partition));
    if (cfg.vorticity) row.push_back(lp_norm(curl(state), kInfExponent));
    bool dissipative = cfg.system == System::NS ? cfg.nu > 0.0 : cfg.kappa > 0.0;
    if (dissipative) {
        if (cfg.system == System::NS) {
            row.push_back(cfg.nu * grad_l2_squared(state));
        } else {
            double s = lp_norm(fractional_laplacian(state, 0.5 * cfg.alpha), 2.0);
            row.push_back(cfg.kappa * s * s);
        }
    }
    return row;
}

}  // namespace

RunResult run(const SimConfig& cfg) {
    cfg.validate();
    Grid grid(cfg.dims(), cfg.n);
    SpectralField state = dealias(init_preset(cfg.preset, cfg.amplitude, cfg.seed, grid));
    if (cfg.system == System::QG) state.make_zero_mean();

    Stepper stepper(cfg);
    BesovPartition partition = BesovPartition::for_grid(grid);

    NormSeries series;
    series.columns = {"t", "l2"};
    for (double p : cfg.lp_exponents) series.columns.push_back(lp_label(p));
    for (const auto& [k, p] : cfg.dk_norms) series.columns.push_back(dkl_label(k, p));
    series.columns.push_back("grad_linf");
    if (cfg.besov) series.columns.push_back("besov_b0inf1");
    if (cfg.vorticity) series.columns.push_back("vort_linf");
    bool dissipative = cfg.system == System::NS ? cfg.nu > 0.0 : cfg.kappa > 0.0;
    if (dissipative) series.columns.push_back("dissipation");

    RunResult result{std::move(series), {}, false, false, ""};
    result.series.append(sample_norms(cfg, state, 0.0, cfg.besov ? &partition : nullptr));

    double dt_fixed;
    if (cfg.dt > 0.0) {
        dt_fixed = cfg.dt;
    } else {
        double limit = stepper.cfl_limit(state);
        dt_fixed = std::isfinite(limit) ? limit : cfg.t_end / 100.0;
    }
    long steps = std::max<long>(1, static_cast<long>(std::ceil(cfg.t_end / dt_fixed - 1e-12)));
    dt_fixed = cfg.t_end / double(steps);

    double t = 0.0;
    long i = 0;
    while (t < cfg.t_end - 1e-12 * cfg.t_end) {
        double dt = dt_fixed;
        if (cfg.cfl_scaled) dt = std::min({dt_fixed, stepper.cfl_limit(state), cfg.t_end - t});
        try {
            stepper.step(state, dt);
        } catch (const std::exception& e) {
            result.aborted = true;
            result.abort_reason = e.what();
            break;
        }
        t = cfg.cfl_scaled ? t + dt : double(i + 1) * dt_fixed;
        ++i;
        bool at_end = t >= cfg.t_end - 1e-12 * cfg.t_end;
        if (i % cfg.stride == 0 || at_end) {
            if (!std::isfinite(state.max_coef_abs())) {
                result.aborted = true;
                result.abort_reason = "non-finite state after sample " +
                                      std::to_string(result.series.size() - 1) + " (t = " +
                                      format_g17(result.series.rows.back()[0]) + ")";
                break;
            }
            try {
                result.series.append(sample_norms(cfg, state, t, cfg.besov ? &partition : nullptr));
            } catch (const std::exception& e) {
                result.aborted = true;
                result.abort_reason = std::string(e.what()) + "; last valid sample " +
                                      std::to_string(result.series.size() - 1);
                break;
            }
            double tail = stepper.tail_fraction(state);
            if (tail > cfg.tail_threshold) {
                result.tail_warning = true;
                result.aborted = true;
                result.abort_reason = "spectral tail fraction " + format_g17(tail) +
                                      " exceeded threshold at t = " + format_g17(t);
                break;
            }
        }
    }

    result.final_state.push_back(std::move(state));
    return result;
}

}  // namespace apriori
