#pragma once

#include <complex>
#include <span>

namespace geodisc::detail {

// Unnormalized transforms:
//   forward: X_k = sum_j x_j e^{-2 pi i jk/N}
//   inverse: x_j = sum_k X_k e^{+2 pi i jk/N}
void fft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
void fft_inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

}  // namespace geodisc::detail
