#include "geodisc/circle.hpp"

#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "geodisc/errors.hpp"

namespace geodisc {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int storage_index(int k, int n) { return ((k % n) + n) % n; }

}  // namespace

CircleGrid::CircleGrid(int size) : size_(size) {
    if (size < 16 || !is_power_of_two(size)) {
        throw PreconditionError("circle grid size must be a power of two >= 16, got " +
                                std::to_string(size));
    }
}

double CircleGrid::angle(int j) const noexcept { return 2.0 * kPi * j / size_; }

cplx CircleGrid::node(int j) const noexcept { return std::polar(1.0, angle(j)); }

TrigSeries::TrigSeries(CircleGrid grid)
    : grid_(grid), coeffs_(static_cast<std::size_t>(grid.size()), cplx{0.0, 0.0}) {}

cplx TrigSeries::coeff(int k) const noexcept {
    if (k < min_mode() || k > max_mode()) return {0.0, 0.0};
    return coeffs_[static_cast<std::size_t>(storage_index(k, size()))];
}

void TrigSeries::set_coeff(int k, cplx value) {
    if (k < min_mode() || k > max_mode()) {
        throw PreconditionError("mode " + std::to_string(k) + " outside the grid band");
    }
    coeffs_[static_cast<std::size_t>(storage_index(k, size()))] = value;
}

bool TrigSeries::is_real(double tol) const {
    if (std::abs(coeff(min_mode()).imag()) > tol) return false;
    for (int k = 0; k <= max_mode(); ++k) {
        if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    }
    return true;
}

bool TrigSeries::is_holomorphic(double tol) const { return negative_tail_norm(*this) <= tol; }

TrigSeries& TrigSeries::operator+=(const TrigSeries& other) {
    if (!(grid_ == other.grid_)) throw PreconditionError("series live on different grids");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TrigSeries& TrigSeries::operator*=(cplx scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

TrigSeries operator+(TrigSeries a, const TrigSeries& b) { return a += b; }

TrigSeries operator*(cplx s, TrigSeries a) { return a *= s; }

TrigSeries analyze(const CircleGrid& grid, std::span<const cplx> samples) {
    if (static_cast<int>(samples.size()) != grid.size()) {
        throw PreconditionError("sample count " + std::to_string(samples.size()) +
                                " does not match grid size " + std::to_string(grid.size()));
    }
    TrigSeries out(grid);
    detail::fft_forward(samples, out.raw());
    out *= 1.0 / grid.size();
    return out;
}

TrigSeries analyze_real(const CircleGrid& grid, std::span<const double> samples) {
    std::vector<cplx> z(samples.begin(), samples.end());
    return analyze(grid, z);
}

std::vector<cplx> synthesize(const TrigSeries& series) {
    std::vector<cplx> values(static_cast<std::size_t>(series.size()));
    detail::fft_inverse(series.raw(), values);
    return values;
}

cplx evaluate(const TrigSeries& series, double angle) {
    cplx sum{0.0, 0.0};
    for (int k = series.min_mode(); k <= series.max_mode(); ++k) {
        const cplx c = series.coeff(k);
        if (c != cplx{0.0, 0.0}) sum += c * std::polar(1.0, k * angle);
    }
    return sum;
}

std::vector<cplx> synthesize(const TrigSeries& series, std::span<const double> angles) {
    std::vector<cplx> values;
    values.reserve(angles.size());
    for (double a : angles) values.push_back(evaluate(series, a));
    return values;
}

TrigSeries hilbert_conjugate(const TrigSeries& u) {
    if (!u.is_real(1e-10)) throw PreconditionError("hilbert_conjugate expects a real-valued series");
    TrigSeries t(u.grid());
    const cplx minus_i{0.0, -1.0};
    // The Nyquist mode has no conjugate partner on the grid; it is dropped.
    for (int k = 1; k <= u.max_mode(); ++k) {
        t.set_coeff(k, minus_i * u.coeff(k));
        t.set_coeff(-k, -minus_i * u.coeff(-k));
    }
    // Pin the additive constant: T(u)(theta = 0) = 0.
    cplx at_one{0.0, 0.0};
    for (cplx c : t.raw()) at_one += c;
    t.set_coeff(0, -at_one.real());
    return t;
}

cplx cauchy_extend(const TrigSeries& boundary, cplx tau) {
    if (std::abs(tau) >= 1.0) throw PreconditionError("cauchy_extend requires |tau| < 1");
    // Horner over the nonnegative modes.
    cplx acc{0.0, 0.0};
    for (int k = boundary.max_mode(); k >= 0; --k) acc = acc * tau + boundary.coeff(k);
    return acc;
}

double negative_tail_norm(const TrigSeries& series) {
    double sum = 0.0;
    for (int k = series.min_mode(); k < 0; ++k) sum += std::norm(series.coeff(k));
    return std::sqrt(sum);
}

int winding_number(std::span<const cplx> samples) {
    double total = 0.0;
    const std::size_t n = samples.size();
    for (std::size_t j = 0; j < n; ++j) {
        const cplx a = samples[j];
        const cplx b = samples[(j + 1) % n];
        if (std::abs(a) <= 1e-10 || std::abs(b) <= 1e-10) {
            throw PreconditionError("curve passes through (or too close to) the origin");
        }
        total += std::arg(b / a);
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

TrigSeries log_lift(const TrigSeries& series) {
    const std::vector<cplx> values = synthesize(series);
    const std::size_t n = values.size();
    for (const cplx& v : values) {
        if (std::abs(v) <= 1e-10) throw PreconditionError("log_lift: sample vanishes on the grid");
    }
    std::vector<cplx> logs(n);
    double phase = std::arg(values[0]);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) {
            const double jump = std::arg(values[j] / values[j - 1]);
            if (std::abs(jump) >= kPi / 2) {
                throw PreconditionError("log_lift: phase jump >= pi/2 between adjacent nodes (under-resolved)");
            }
            phase += jump;
            total += jump;
        }
        logs[j] = {std::log(std::abs(values[j])), phase};
    }
    const double closing = std::arg(values[0] / values[n - 1]);
    if (std::abs(closing) >= kPi / 2) {
        throw PreconditionError("log_lift: phase jump >= pi/2 between adjacent nodes (under-resolved)");
    }
    total += closing;
    const int winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
    if (winding != 0) {
        throw WindingError("log_lift: curve has winding number " + std::to_string(winding) +
                               " around 0; rotate coordinates",
                           winding);
    }
    return analyze(series.grid(), logs);
}

}  // namespace geodisc
