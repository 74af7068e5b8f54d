#pragma once

#include <complex>
#include <vector>

#include "apriori/grid.hpp"

namespace apriori {

/// Real samples (row-major) -> Fourier coefficients f_hat(xi) such that
/// f(x) = sum_xi f_hat(xi) exp(i xi . x). Includes the 1/N normalization.
std::vector<std::complex<double>> fft_forward(const Grid& grid, const std::vector<double>& real);

/// Fourier coefficients -> real samples. Discards the (tiny) imaginary part
/// left by Hermitian-symmetric inputs.
std::vector<double> fft_inverse(const Grid& grid, const std::vector<std::complex<double>>& coef);

/// Coefficients -> complex samples, no symmetry assumption.
std::vector<std::complex<double>> fft_inverse_complex(const Grid& grid,
                                                      const std::vector<std::complex<double>>& coef);

}  // namespace apriori
