#pragma once

// Hand-rolled random generators for the property tests.

#include <cmath>
#include <random>
#include <vector>

#include "geodisc/circle.hpp"
#include "geodisc/domains.hpp"

namespace gen {

using geodisc::cplx;
using geodisc::CVec;

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double normal() { return std::normal_distribution<double>()(rng_); }
    cplx complex_normal() { return {normal(), normal()}; }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    CVec unit_vector(int n) {
        CVec v(n);
        for (int j = 0; j < n; ++j) v(j) = complex_normal();
        return v / v.norm();
    }

    /// Uniform in the ball of the given radius.
    CVec point_in_ball(int n, double radius) {
        return radius * std::pow(uniform(0.0, 1.0), 1.0 / (2.0 * n)) * unit_vector(n);
    }

    /// Random trigonometric polynomial with modes in [-band, band].
    geodisc::TrigSeries trig(const geodisc::CircleGrid& grid, int band, bool real) {
        geodisc::TrigSeries s(grid);
        for (int k = -band; k <= band; ++k) s.set_coeff(k, complex_normal() / double(1 + k * k));
        if (real) {
            for (int k = 1; k <= band; ++k) s.set_coeff(-k, std::conj(s.coeff(k)));
            s.set_coeff(0, s.coeff(0).real());
        }
        return s;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
