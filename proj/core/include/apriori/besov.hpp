#pragma once

#include <cmath>
#include <vector>

#include "apriori/field.hpp"

namespace apriori {

/// Dyadic Littlewood-Paley partition sampled on a grid's |xi| values.
/// Shell j is supported in {2^{j-1} <= |xi| <= 2^{j+1}} and the shells
/// telescope to 1 on every covered nonzero wavevector.
class BesovPartition {
  public:
    /// Shells j_min..j_max tabulated for the given grid. The default range
    /// covers every nonzero mode the grid can hold.
    static BesovPartition for_grid(const Grid& grid);
    static BesovPartition for_grid(const Grid& grid, int j_min, int j_max);

    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    int shells() const { return j_max_ - j_min_ + 1; }
    /// Dyadic octaves over which adjacent shells overlap (fixed by the
    /// bump construction).
    double overlap_width() const { return 1.0; }

    /// Multiplier values of shell j (flat grid indexing).
    const std::vector<double>& profile(int j) const { return profiles_[j - j_min_]; }

    /// Max |1 - sum_j phi_j(xi)| over covered nonzero modes.
    double partition_residual() const;

    /// Largest covered |xi|; modes beyond it are not representable.
    double coverage_radius() const { return std::pow(2.0, j_max_); }

    const Grid& grid() const { return grid_; }

    /// Radial bump profile of the mother shell (support [1/2, 2]).
    static double mother_profile(double r);

  private:
    BesovPartition(const Grid& grid, int j_min, int j_max);
    Grid grid_;
    int j_min_, j_max_;
    std::vector<std::vector<double>> profiles_;
};

/// Besov norm sum_j ||phi_j * f||_{L^inf} on the zero-mean subspace. Vector
/// fields use the pointwise Euclidean magnitude inside each block.
double besov_b0inf1(const SpectralField& f, const BesovPartition& partition);

/// ||grad f||_{B^0_{inf,1}} (the norm driving the critical QG estimates).
double besov_grad(const SpectralField& f, const BesovPartition& partition);

}  // namespace apriori
