#pragma once

#include <vector>

#include "apriori/field.hpp"

namespace apriori {

/// D^alpha: coefficients multiplied by prod_j (i xi_j)^alpha_j. Nyquist modes
/// are zeroed for odd derivative orders so the result stays real.
SpectralField spectral_derivative(const SpectralField& f, const std::vector<int>& alpha);

/// Lambda^a = (-Delta)^{a/2}: multiplier |xi|^a. The mean mode is kept for
/// a = 0 and zeroed otherwise. Rejects a < 0.
SpectralField fractional_laplacian(const SpectralField& f, double a);

/// Riesz transform R_j: multiplier i xi_j / |xi| on the zero-mean subspace.
SpectralField riesz_transform(const SpectralField& f, int axis);

/// Orthogonal projection onto divergence-free vector fields.
SpectralField leray_project(const SpectralField& u);

/// v = grad^perp (-Delta)^{-1/2} theta, the QG velocity law (2D only).
SpectralField qg_velocity(const SpectralField& theta);

/// 2/3-rule truncation: zero every mode with any |xi_j| > n/3. Idempotent.
SpectralField dealias(const SpectralField& f);

/// Gradient of every component; result has dims*components components laid
/// out as [d component0, d component1, ...].
SpectralField gradient(const SpectralField& f);

/// Spectral divergence of a vector field.
SpectralField divergence(const SpectralField& u);

/// curl of a 3D vector field (vorticity diagnostic).
SpectralField curl(const SpectralField& u);

/// Pointwise real-space product of two scalar components, dealiased.
SpectralField multiply_dealias(const SpectralField& f, int cf, const SpectralField& g, int cg);

/// (u . grad) w computed pseudo-spectrally with 2/3 dealiasing.
SpectralField advect(const SpectralField& u, const SpectralField& w);

}  // namespace apriori
