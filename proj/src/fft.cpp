#include "fft.hpp"

#include <unsupported/Eigen/FFT>

namespace geodisc::detail {
namespace {

Eigen::FFT<double>& engine() {
    // kissfft caches twiddles per size; one engine per thread keeps calls reentrant.
    thread_local Eigen::FFT<double> fft = [] {
        Eigen::FFT<double> f;
        f.SetFlag(Eigen::FFT<double>::Unscaled);
        return f;
    }();
    return fft;
}

}  // namespace

void fft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    engine().fwd(out.data(), in.data(), static_cast<Eigen::Index>(in.size()));
}

void fft_inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    engine().inv(out.data(), in.data(), static_cast<Eigen::Index>(in.size()));
}

}  // namespace geodisc::detail
