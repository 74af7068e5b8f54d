#include "apriori/calibrate.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "apriori/norms.hpp"
#include "apriori/ops.hpp"
#include "apriori/random_fields.hpp"

namespace apriori {

namespace {

void require_supercritical(int dims, int k, double p, const char* op) {
    if (p != kInfExponent && k <= dims / p + 1.0)
        throw std::invalid_argument(std::string(op) + ": needs k > dims/p + 1");
}

int worker_count() {
    if (const char* env = std::getenv("APRIORI_LAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::string to_string(ConstantKind kind) {
    switch (kind) {
        case ConstantKind::commutator: return "C1";
        case ConstantKind::gagliardo_nirenberg: return "C2";
        case ConstantKind::calderon_zygmund: return "C_CZ";
    }
    return "?";
}

ConstantKind constant_kind_from_string(const std::string& s) {
    if (s == "C1" || s == "commutator") return ConstantKind::commutator;
    if (s == "C2" || s == "gn" || s == "gagliardo_nirenberg")
        return ConstantKind::gagliardo_nirenberg;
    if (s == "C_CZ" || s == "cz" || s == "calderon_zygmund") return ConstantKind::calderon_zygmund;
    throw std::invalid_argument("unknown constant kind: " + s);
}

std::string CalibrationReport::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["trials"] = trials;
    j["seed"] = seed;
    j["constant"] = constant;
    j["argmax_descriptor"] = argmax_descriptor;
    j["grid_n"] = grid_n;
    j["k"] = k;
    j["p"] = p == kInfExponent ? -1.0 : p;
    return j.dump(2);
}

CalibrationReport CalibrationReport::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CalibrationReport r;
    r.kind = constant_kind_from_string(j.at("kind").get<std::string>());
    r.trials = j.at("trials").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.constant = j.at("constant").get<double>();
    r.argmax_descriptor = j.at("argmax_descriptor").get<std::string>();
    r.grid_n = j.value("grid_n", 0);
    r.k = j.value("k", 0);
    r.p = j.value("p", 2.0);
    if (r.p < 0) r.p = kInfExponent;
    return r;
}

std::optional<double> commutator_ratio(const SpectralField& f, const SpectralField& g, int k,
                                       double p) {
    const Grid& grid = f.grid();
    require_supercritical(grid.dims(), k, p, "commutator_ratio");
    if (!f.same_shape(g)) throw std::invalid_argument("commutator_ratio: shape mismatch");

    SpectralField fg = multiply_dealias(f, 0, g, 0);
    double num_acc = 0.0;
    for (const auto& alpha : multi_indices(grid.dims(), k)) {
        SpectralField lhs = spectral_derivative(fg, alpha);
        SpectralField dg = spectral_derivative(g, alpha);
        SpectralField f_dg = multiply_dealias(f, 0, dg, 0);
        std::vector<double> a = lhs.to_real(0);
        std::vector<double> b = f_dg.to_real(0);
        for (std::size_t i = 0; i < a.size(); ++i)
            num_acc += std::pow(std::abs(a[i] - b[i]), p);
    }
    double numerator = std::pow(num_acc * grid.quad_weight(), 1.0 / p);
    double denominator = grad_linf(f) * homogeneous_sobolev(g, k - 1, p) +
                         homogeneous_sobolev(f, k, p) * lp_norm(g, kInfExponent);
    if (denominator == 0.0) {
        if (numerator == 0.0) return 0.0;
        return std::nullopt;  // degenerate sample, excluded from calibration
    }
    return numerator / denominator;
}

double gn_ratio(const SpectralField& f, int k, double p) {
    const Grid& grid = f.grid();
    require_supercritical(grid.dims(), k, p, "gn_ratio");
    double fp = lp_norm(f, p);
    double dk = homogeneous_sobolev(f, k, p);
    if (dk == 0.0) throw std::invalid_argument("gn_ratio: f must be nonconstant");
    double sigma = (p + grid.dims()) / (k * p);
    return grad_linf(f) / (std::pow(fp, 1.0 - sigma) * std::pow(dk, sigma));
}

FractionalCheck fractional_inequality_check(const SpectralField& f, double p, double a,
                                            double rtol) {
    if (p < 2.0) throw std::invalid_argument("fractional_inequality_check: p must be >= 2");
    if (a < 0.0 || a > 2.0)
        throw std::invalid_argument("fractional_inequality_check: a must be in [0, 2]");
    if (a > 0.0) f.require_zero_mean("fractional_inequality_check");
    const Grid& grid = f.grid();
    std::vector<double> fv = f.to_real(0);
    std::vector<double> laf = fractional_laplacian(f, a).to_real(0);
    double lhs = 0.0;
    for (std::size_t i = 0; i < fv.size(); ++i)
        lhs += std::pow(std::abs(fv[i]), p - 2.0) * fv[i] * laf[i];
    lhs *= grid.quad_weight();

    std::vector<double> gv(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i)
        gv[i] = std::copysign(std::pow(std::abs(fv[i]), p / 2.0), fv[i]);
    SpectralField g = SpectralField::from_real_scalar(grid, gv);
    std::vector<double> lg = fractional_laplacian(g, a / 2.0).to_real(0);
    double rhs = 0.0;
    for (double v : lg) rhs += v * v;
    rhs *= 2.0 / p * grid.quad_weight();

    FractionalCheck out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.margin = lhs - rhs;
    out.ok = lhs >= rhs - rtol * std::abs(rhs) - 1e-14;
    return out;
}

double cz_ratio(const SpectralField& theta, const BesovPartition& partition) {
    SpectralField v = qg_velocity(theta);
    double denom = besov_grad(theta, partition);
    if (denom == 0.0) throw std::invalid_argument("cz_ratio: theta must be nonconstant");
    return besov_grad(v, partition) / denom;
}

CalibrationReport calibrate(ConstantKind kind, int trials, std::uint64_t seed, const Grid& grid,
                            int k, double p) {
    if (trials < 1) throw std::invalid_argument("calibrate: trials must be >= 1");
    if (kind == ConstantKind::calderon_zygmund && grid.dims() != 2)
        throw std::invalid_argument("calibrate: C_CZ needs a 2D grid");

    std::optional<BesovPartition> partition;
    if (kind == ConstantKind::calderon_zygmund) partition = BesovPartition::for_grid(grid);

    // kmax <= n/6 keeps quadratic products alias-free on the grid
    const int kmax_cap = std::max(2, grid.n() / 6);

    auto run_trial = [&](int trial) -> std::optional<std::pair<double, std::string>> {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        std::uniform_int_distribution<int> kmax_dist(2, kmax_cap);
        std::uniform_real_distribution<double> slope_dist(0.0, 2.5);
        int kmax = kmax_dist(rng);
        double slope = slope_dist(rng);
        std::ostringstream desc;
        desc << "trial=" << trial << " kmax=" << kmax << " slope=" << slope;
        std::optional<double> ratio;
        switch (kind) {
            case ConstantKind::commutator: {
                SpectralField f = random_band_limited(grid, kmax, slope, rng);
                SpectralField g = random_band_limited(grid, kmax, slope, rng);
                ratio = commutator_ratio(f, g, k, p);
                break;
            }
            case ConstantKind::gagliardo_nirenberg: {
                SpectralField f = random_band_limited(grid, kmax, slope, rng);
                ratio = gn_ratio(f, k, p);
                break;
            }
            case ConstantKind::calderon_zygmund: {
                SpectralField theta = random_band_limited(grid, kmax, slope, rng);
                ratio = cz_ratio(theta, *partition);
                break;
            }
        }
        if (!ratio) return std::nullopt;
        return std::make_pair(*ratio, desc.str());
    };

    std::vector<std::optional<std::pair<double, std::string>>> results(trials);
    int workers = std::min(worker_count(), trials);
    std::vector<std::future<void>> futures;
    for (int w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (int t = w; t < trials; t += workers) results[t] = run_trial(t);
        }));
    }
    for (auto& f : futures) f.get();

    CalibrationReport report;
    report.kind = kind;
    report.trials = trials;
    report.seed = seed;
    report.grid_n = grid.n();
    report.k = k;
    report.p = p;
    for (const auto& r : results) {
        if (r && r->first > report.constant) {
            report.constant = r->first;
            report.argmax_descriptor = r->second;
        }
    }
    return report;
}

}  // namespace apriori
