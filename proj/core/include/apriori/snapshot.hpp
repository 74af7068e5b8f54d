#pragma once

#include <string>

#include "apriori/field.hpp"

namespace apriori {

/// Binary spectral snapshot (little-endian doubles, versioned header).
/// Round-trips bit-exactly.
void save_snapshot(const SpectralField& f, const std::string& path);
SpectralField load_snapshot(const std::string& path);

}  // namespace apriori
