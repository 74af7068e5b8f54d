#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "apriori/field.hpp"
#include "apriori/series.hpp"

namespace apriori {

enum class System { NS, QG };

struct SimConfig {
    System system = System::QG;
    int n = 256;
    double nu = 0.0;     // NS viscosity
    double kappa = 0.0;  // QG dissipation strength
    double alpha = 2.0;  // QG dissipation order, Lambda^alpha, in [0, 2]
    double t_end = 1.0;
    double dt = 0.0;  // <= 0 picks dt from the CFL bound at t = 0
    bool cfl_scaled = false;
    double cfl_safety = 0.5;
    int stride = 1;
    std::string preset = "qg-orthogonal";
    double amplitude = 1.0;
    std::uint64_t seed = 1;
    std::vector<double> lp_exponents;               // extra L^p columns
    std::vector<std::pair<int, double>> dk_norms;   // (k, p) Sobolev columns
    bool besov = false;                             // grad theta Besov column
    bool vorticity = false;                         // ||curl v||_inf diagnostic
    double tail_threshold = 1e-6;

    int dims() const { return system == System::QG ? 2 : 3; }
    void validate() const;  // throws std::invalid_argument
};

struct RunResult {
    NormSeries series;
    std::vector<SpectralField> final_state;  // single entry; vector avoids a default ctor
    bool tail_warning = false;
    bool aborted = false;
    std::string abort_reason;
};

/// Full right-hand sides (dissipative term included).
SpectralField rhs_ns(const SpectralField& v, double nu);
SpectralField rhs_qg(const SpectralField& theta, double kappa, double alpha);

/// One explicit 4-stage step with exact integrating factor on the linear part.
/// Enforces the CFL bound dt <= safety * dx / max|u| and throws with a
/// suggested dt on violation.
class Stepper {
  public:
    Stepper(const SimConfig& cfg);

    void step(SpectralField& state, double dt) const;
    /// Largest admissible dt for the current state under the CFL policy.
    double cfl_limit(const SpectralField& state) const;
    /// Fraction of spectral energy carried by the top third of retained modes.
    double tail_fraction(const SpectralField& state) const;

  private:
    SpectralField nonlinear(const SpectralField& state) const;
    void scale_by_exp(SpectralField& f, double t) const;

    SimConfig cfg_;
    std::vector<double> symbol_;  // -nu |xi|^2 or -kappa |xi|^alpha per mode
};

/// Integrate the configured system, sampling the norm menu every `stride`
/// steps (plus t = 0 and the final time).
RunResult run(const SimConfig& cfg);

/// Column label helpers shared with the checker ("lp_2", "dkl_3_2", ...).
std::string lp_label(double p);
std::string dkl_label(int k, double p);

}  // namespace apriori
