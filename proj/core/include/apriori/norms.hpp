#pragma once

#include <limits>
#include <vector>

#include "apriori/field.hpp"

namespace apriori {

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// ||f||_{L^p} by grid quadrature; for p = inf, the sup of the band-limited
/// interpolant (grid argmax polished by a Newton ascent). Vector fields use
/// the pointwise Euclidean magnitude. Rejects p < 1.
double lp_norm(const SpectralField& f, double p);

/// ||D^k f||_{L^p} = (sum_{|alpha|=k} int |D^alpha f|^p)^{1/p}, derivatives
/// spectral, integral by grid quadrature; components summed inside the sum.
double homogeneous_sobolev(const SpectralField& f, int k, double p);

/// Sup of the Frobenius norm of the spectral gradient.
double grad_linf(const SpectralField& f);

/// All multi-indices alpha with |alpha| = k in `dims` dimensions.
std::vector<std::vector<int>> multi_indices(int dims, int k);

/// int |grad f|^2 dx, spectral (used for the dissipation integrand).
double grad_l2_squared(const SpectralField& f);

}  // namespace apriori
