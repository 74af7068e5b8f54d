#pragma once

#include <cstdint>
#include <random>

#include "apriori/field.hpp"

namespace apriori {

/// Random real band-limited field: Gaussian white noise shaped by the radial
/// spectrum |xi|^{-slope} and truncated at |xi_j| <= kmax per axis.
/// Deterministic for a given engine state.
SpectralField random_band_limited(const Grid& grid, int kmax, double slope, std::mt19937_64& rng,
                                  int components = 1, bool zero_mean = true);

/// Seeded convenience overload.
SpectralField random_band_limited(const Grid& grid, int kmax, double slope, std::uint64_t seed,
                                  int components = 1, bool zero_mean = true);

}  // namespace apriori
