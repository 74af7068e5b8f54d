#pragma once

#include <cstdint>
#include <string>

#include "apriori/field.hpp"

namespace apriori {

/// Named initial conditions, reproducible by seed.
///   "taylor-green"     3D divergence-free Taylor-Green vortex (||v||_inf = amplitude)
///   "qg-taylor-green"  2D theta = A sin(x1) sin(x2) (a steady state of inviscid QG)
///   "qg-orthogonal"    2D two-shell state A (sin(x1) sin(x2) + cos(x1)), nontrivial dynamics
///   "random"           band-limited random field with a prescribed spectrum slope;
///                      divergence-free for NS grids (dims = 3), zero-mean scalar for QG
SpectralField init_preset(const std::string& name, double amplitude, std::uint64_t seed,
                          const Grid& grid);

}  // namespace apriori
