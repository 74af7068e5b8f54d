#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "apriori/besov.hpp"
#include "apriori/field.hpp"

namespace apriori {

enum class ConstantKind { commutator, gagliardo_nirenberg, calderon_zygmund };

std::string to_string(ConstantKind kind);
ConstantKind constant_kind_from_string(const std::string& s);

/// Empirically measured constant: running max ratio over randomized trials.
struct CalibrationReport {
    ConstantKind kind;
    int trials = 0;
    std::uint64_t seed = 0;
    double constant = 0.0;
    std::string argmax_descriptor;
    int grid_n = 0;
    int k = 0;
    double p = 2.0;

    std::string to_json() const;
    static CalibrationReport from_json(const std::string& text);
};

/// ||D^k(fg) - f D^k g||_{L^p} over the commutator estimate's right side.
/// Returns nullopt for degenerate samples (zero denominator).
std::optional<double> commutator_ratio(const SpectralField& f, const SpectralField& g, int k,
                                       double p);

/// ||grad f||_inf over the Gagliardo-Nirenberg product
/// ||f||_p^{1-sigma} ||D^k f||_p^{sigma}, sigma = (p+n)/(kp).
double gn_ratio(const SpectralField& f, int k, double p);

/// Both sides of the fractional-Laplacian positivity estimate. Uses the
/// signed power sgn(f)|f|^{p/2} so p = 2 is an exact Plancherel identity.
struct FractionalCheck {
    double lhs;
    double rhs;
    double margin;  // lhs - rhs
    bool ok;
};
FractionalCheck fractional_inequality_check(const SpectralField& f, double p, double a,
                                            double rtol = 1e-10);

/// ||grad v||_B over ||grad theta||_B with v the QG velocity of theta.
double cz_ratio(const SpectralField& theta, const BesovPartition& partition);

/// Maximum observed ratio over `trials` random band-limited samples.
/// Deterministic given seed; trials may be evaluated concurrently.
CalibrationReport calibrate(ConstantKind kind, int trials, std::uint64_t seed, const Grid& grid,
                            int k, double p);

}  // namespace apriori
