#pragma once

// Spectral analysis of functions sampled on the unit circle.
//
// A function u on the circle is sampled at the equispaced nodes
// theta_j = 2*pi*j/N and represented by the coefficients c_k of its
// trigonometric interpolant  u(theta) = sum_{k=-N/2}^{N/2-1} c_k e^{ik theta}.

#include <complex>
#include <span>
#include <vector>

namespace geodisc {

using cplx = std::complex<double>;

/// Equispaced nodes on the unit circle. The size is a power of two >= 16.
class CircleGrid {
public:
    static constexpr int kDefaultSize = 256;

    explicit CircleGrid(int size = kDefaultSize);

    int size() const noexcept { return size_; }
    double angle(int j) const noexcept;
    /// e^{i theta_j}
    cplx node(int j) const noexcept;

    bool operator==(const CircleGrid&) const = default;

private:
    int size_;
};

class TrigSeries {
public:
    explicit TrigSeries(CircleGrid grid);

    const CircleGrid& grid() const noexcept { return grid_; }
    int size() const noexcept { return grid_.size(); }
    int min_mode() const noexcept { return -size() / 2; }
    int max_mode() const noexcept { return size() / 2 - 1; }

    /// Coefficient of e^{ik theta}; modes outside [-N/2, N/2) read as zero.
    cplx coeff(int k) const noexcept;
    void set_coeff(int k, cplx value);

    /// c_{-k} = conj(c_k) for every k (the Nyquist mode must be real).
    bool is_real(double tol = 1e-12) const;
    /// c_k = 0 for every k < 0.
    bool is_holomorphic(double tol = 1e-12) const;

    /// Coefficients in FFT storage order (index k mod N).
    std::span<const cplx> raw() const noexcept { return coeffs_; }
    std::span<cplx> raw() noexcept { return coeffs_; }

    TrigSeries& operator+=(const TrigSeries& other);
    TrigSeries& operator*=(cplx scale);

private:
    CircleGrid grid_;
    std::vector<cplx> coeffs_;
};

TrigSeries operator+(TrigSeries a, const TrigSeries& b);
TrigSeries operator*(cplx s, TrigSeries a);

/// Discrete Fourier analysis of samples taken at the grid nodes.
TrigSeries analyze(const CircleGrid& grid, std::span<const cplx> samples);
TrigSeries analyze_real(const CircleGrid& grid, std::span<const double> samples);

/// Values at the grid nodes.
std::vector<cplx> synthesize(const TrigSeries& series);
/// Values at arbitrary angles (direct summation).
std::vector<cplx> synthesize(const TrigSeries& series, std::span<const double> angles);
cplx evaluate(const TrigSeries& series, double angle);

/// Harmonic conjugate T(u) of a real series: u + i T(u) extends holomorphically
/// into the disc. The additive constant is pinned so that T(u) vanishes at
/// theta = 0 (tau = 1). Throws PreconditionError on non-real input.
TrigSeries hilbert_conjugate(const TrigSeries& u);

/// sum_{k>=0} c_k tau^k for |tau| < 1. Negative modes are ignored.
cplx cauchy_extend(const TrigSeries& boundary, cplx tau);

/// l2 norm of the negative modes {c_k : k < 0}.
double negative_tail_norm(const TrigSeries& series);

/// Continuous branch of log on the grid for a curve of winding number zero.
/// Throws PreconditionError when a sample is (nearly) zero or the phase jumps
/// by pi/2 or more between adjacent nodes, WindingError when the index of the
/// curve around 0 is nonzero.
TrigSeries log_lift(const TrigSeries& series);

/// Winding number around 0 of the sampled curve (phase increments summed
/// node to node). Throws PreconditionError on vanishing samples.
int winding_number(std::span<const cplx> samples);

}  // namespace geodisc
