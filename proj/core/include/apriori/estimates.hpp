#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apriori/series.hpp"

namespace apriori {

enum class Theorem { T11i, T11ii, T12, T13i, T13ii, T14Upper, T14Lower };

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);  // "1.1i", "1.4upper", ...

struct EstimateParams {
    Theorem theorem = Theorem::T11i;
    double gamma = 1.0;
    int k = 3;        // derivative order (families with a D^k norm)
    double p = 2.0;   // Lebesgue exponent (families with an L^p norm)
    double C0 = 1.0;

    int sign() const;  // +1 for upper estimates, -1 for lower
    double beta() const;
    std::string lhs_column() const;
    std::string drive_column() const;

    /// Initial-norm factor F in the hypothesis gamma >= C0 * F.
    double initial_factor(const NormSeries& series) const;
    double threshold(const NormSeries& series) const { return C0 * initial_factor(series); }

    /// Throws when gamma sits below the hypothesis threshold (message carries
    /// the threshold) or required columns are missing.
    void validate(const NormSeries& series) const;
};

struct MarginSeries {
    std::vector<double> t, lhs, rhs, margin;
    std::vector<char> ok;
    std::vector<char> voided;

    double min_margin = 0.0;                 // over non-void samples
    std::optional<double> first_violation;   // earliest t with ok = false
    std::optional<double> t_star;            // where a denominator bound voids
    double gamma_used = 0.0, C0_used = 0.0;  // echoed parameters

    bool all_ok() const;
    void write_csv(const std::string& path) const;  // t,lhs,rhs,margin,ok,void
};

/// Both sides of the theorem's main estimate along the series.
MarginSeries check_main(const NormSeries& series, const EstimateParams& params,
                        double rtol = 5e-2, int order = 2);

/// The denominator expression y(t) against its closed-form power bound.
MarginSeries check_denominator(const NormSeries& series, const EstimateParams& params,
                               double rtol = 5e-2, int order = 2);

struct OdeSolution {
    std::vector<double> s, closed, numeric;
    bool blowup = false;
    double blowup_s = 0.0;
};

/// dX/ds = -c X^{1+beta} with X(0) = X0: closed form vs a 4-stage integration.
OdeSolution ode_comparison(double c, double beta, double X0, double horizon, int nsteps = 1024);

/// Classical bound ||D^k v0|| exp(C int_0^t ||grad v||_inf) per sample.
std::vector<double> gronwall_oracle(const NormSeries& series, int k, double C);

struct SweepTable {
    std::vector<double> gammas;
    std::vector<double> t;
    std::vector<std::vector<double>> rhs;    // [gamma][sample]
    std::vector<double> tightest_gamma;      // per sample
    bool improves_on_threshold = false;      // any gamma beats gamma = C0*F at t_end
    void write_csv(const std::string& path) const;  // gamma,t,rhs,tightest_flag
};

SweepTable gamma_sweep(const NormSeries& series, const EstimateParams& base,
                       const std::vector<double>& gamma_grid);

}  // namespace apriori
