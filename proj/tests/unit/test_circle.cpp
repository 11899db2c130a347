#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "geodisc/circle.hpp"
#include "geodisc/errors.hpp"

using namespace geodisc;
using std::numbers::pi;

namespace {

std::vector<cplx> sample(const CircleGrid& grid, auto&& f) {
    std::vector<cplx> out;
    for (int j = 0; j < grid.size(); ++j) out.push_back(f(grid.angle(j)));
    return out;
}

// Plain O(N^2) DFT, independent of the FFT path.
cplx naive_coeff(const std::vector<cplx>& samples, int k) {
    const int n = static_cast<int>(samples.size());
    cplx sum(0.0, 0.0);
    for (int j = 0; j < n; ++j) sum += samples[j] * std::polar(1.0, -2.0 * pi * k * j / n);
    return sum / double(n);
}

double max_other_modes(const TrigSeries& s, std::initializer_list<int> skip) {
    double worst = 0.0;
    for (int k = s.min_mode(); k <= s.max_mode(); ++k) {
        bool skipped = false;
        for (int m : skip) skipped = skipped || m == k;
        if (!skipped) worst = std::max(worst, std::abs(s.coeff(k)));
    }
    return worst;
}

}  // namespace

TEST_CASE("grid sizes must be powers of two of at least 16") {
    CHECK_NOTHROW(CircleGrid(16));
    CHECK_THROWS_AS(CircleGrid(8), PreconditionError);
    CHECK_THROWS_AS(CircleGrid(48), PreconditionError);
}

TEST_CASE("analyze") {
    const CircleGrid grid(16);
    SUBCASE("constant") {
        const TrigSeries s = analyze(grid, sample(grid, [](double) { return cplx(1.0); }));
        CHECK(std::abs(s.coeff(0) - 1.0) < 1e-15);
        CHECK(max_other_modes(s, {0}) < 1e-15);
    }
    SUBCASE("pure mode") {
        const TrigSeries s = analyze(grid, sample(grid, [](double t) { return std::polar(1.0, t); }));
        CHECK(std::abs(s.coeff(1) - 1.0) < 1e-15);
        CHECK(max_other_modes(s, {1}) < 1e-15);
    }
    SUBCASE("cos 3 theta against a direct DFT") {
        const auto values = sample(grid, [](double t) { return cplx(std::cos(3.0 * t)); });
        CHECK(std::abs(naive_coeff(values, 3) - 0.5) < 1e-15);
        const TrigSeries s = analyze(grid, values);
        CHECK(std::abs(s.coeff(3) - 0.5) < 1e-15);
        CHECK(std::abs(s.coeff(-3) - 0.5) < 1e-15);
        CHECK(max_other_modes(s, {3, -3}) < 1e-15);
    }
    SUBCASE("size mismatch") {
        std::vector<cplx> short_samples(15, 1.0);
        CHECK_THROWS_AS(analyze(grid, short_samples), PreconditionError);
    }
}

TEST_CASE("synthesize") {
    const CircleGrid grid(16);
    TrigSeries s(grid);
    s.set_coeff(0, 1.0);
    CHECK(std::abs(evaluate(s, pi) - 1.0) < 1e-15);
    TrigSeries one(grid);
    one.set_coeff(1, 1.0);
    CHECK(std::abs(evaluate(one, pi / 2) - cplx(0.0, 1.0)) < 1e-15);
    TrigSeries c3(grid);
    c3.set_coeff(3, 0.5);
    c3.set_coeff(-3, 0.5);
    CHECK(std::abs(evaluate(c3, pi / 3) + 1.0) < 1e-14);
}

TEST_CASE("hilbert_conjugate") {
    const CircleGrid grid(64);
    auto real_series = [&](auto&& f) { return analyze(grid, sample(grid, [&](double t) { return cplx(f(t)); })); };
    SUBCASE("cos maps to sin") {
        const TrigSeries t = hilbert_conjugate(real_series([](double x) { return std::cos(x); }));
        for (int j = 0; j < grid.size(); ++j) CHECK(std::abs(evaluate(t, grid.angle(j)) - std::sin(grid.angle(j))) < 1e-14);
    }
    SUBCASE("constants map to zero") {
        const TrigSeries t = hilbert_conjugate(real_series([](double) { return 5.0; }));
        CHECK(max_other_modes(t, {}) < 1e-15);
    }
    SUBCASE("sin maps to 1 - cos (pinned at theta = 0)") {
        const TrigSeries t = hilbert_conjugate(real_series([](double x) { return std::sin(x); }));
        for (int j = 0; j < grid.size(); ++j)
            CHECK(std::abs(evaluate(t, grid.angle(j)) - (1.0 - std::cos(grid.angle(j)))) < 1e-14);
    }
    SUBCASE("non-real input") {
        TrigSeries s(grid);
        s.set_coeff(1, 1.0);
        CHECK_THROWS_AS(hilbert_conjugate(s), PreconditionError);
    }
}

TEST_CASE("cauchy_extend") {
    const CircleGrid grid(16);
    TrigSeries e1(grid);
    e1.set_coeff(1, 1.0);
    CHECK(std::abs(cauchy_extend(e1, 0.0)) < 1e-16);
    TrigSeries three(grid);
    three.set_coeff(0, 3.0);
    CHECK(std::abs(cauchy_extend(three, cplx(0.3, -0.4)) - 3.0) < 1e-15);
    TrigSeries e2(grid);
    e2.set_coeff(2, 1.0);
    CHECK(std::abs(cauchy_extend(e2, 0.5) - 0.25) < 1e-15);
    CHECK_THROWS_AS(cauchy_extend(e2, 1.0), PreconditionError);
}

TEST_CASE("negative_tail_norm") {
    const CircleGrid grid(16);
    TrigSeries holo(grid);
    holo.set_coeff(0, 1.0);
    holo.set_coeff(4, 2.0);
    CHECK(negative_tail_norm(holo) == 0.0);
    TrigSeries neg(grid);
    neg.set_coeff(-1, 3.0);
    CHECK(std::abs(negative_tail_norm(neg) - 3.0) < 1e-15);
    const TrigSeries both = analyze(grid, sample(grid, [](double t) { return std::polar(1.0, -t) + std::polar(1.0, t); }));
    CHECK(std::abs(negative_tail_norm(both) - 1.0) < 1e-14);
}

TEST_CASE("log_lift") {
    const CircleGrid grid(64);
    SUBCASE("constant") {
        const TrigSeries l = log_lift(analyze(grid, sample(grid, [](double) { return cplx(std::exp(2.0)); })));
        CHECK(std::abs(l.coeff(0) - 2.0) < 1e-14);
        CHECK(max_other_modes(l, {0}) < 1e-14);
    }
    SUBCASE("small perturbation of a constant agrees with the principal log") {
        const auto values = sample(grid, [](double t) { return 2.0 + 0.1 * std::polar(1.0, t); });
        const auto logs = synthesize(log_lift(analyze(grid, values)));
        for (int j = 0; j < grid.size(); ++j) CHECK(std::abs(logs[j] - std::log(values[j])) < 1e-12);
    }
    SUBCASE("winding one") {
        CHECK_THROWS_AS(log_lift(analyze(grid, sample(grid, [](double t) { return std::polar(1.0, t); }))), WindingError);
    }
    SUBCASE("vanishing samples") {
        CHECK_THROWS_AS(log_lift(analyze(grid, sample(grid, [](double t) { return cplx(std::cos(t)); }))),
                        PreconditionError);
    }
}

TEST_CASE("property: analysis and synthesis are inverse") {
    gen::Source src(11);
    for (int trial = 0; trial < 40; ++trial) {
        const CircleGrid grid(16 << src.integer(0, 4));
        const TrigSeries s = src.trig(grid, grid.size() / 2 - 1, false);
        const TrigSeries back = analyze(grid, synthesize(s));
        for (int k = s.min_mode(); k <= s.max_mode(); ++k) CHECK(std::abs(back.coeff(k) - s.coeff(k)) < 1e-12);
    }
}

TEST_CASE("property: hilbert_conjugate is linear and u + iT(u) is holomorphic") {
    gen::Source src(12);
    const CircleGrid grid(128);
    for (int trial = 0; trial < 30; ++trial) {
        const TrigSeries u = src.trig(grid, 20, true);
        const TrigSeries v = src.trig(grid, 20, true);
        const double a = src.uniform(-2.0, 2.0);
        const TrigSeries lhs = hilbert_conjugate(u + cplx(a) * v);
        const TrigSeries rhs = hilbert_conjugate(u) + cplx(a) * hilbert_conjugate(v);
        for (int k = lhs.min_mode(); k <= lhs.max_mode(); ++k) CHECK(std::abs(lhs.coeff(k) - rhs.coeff(k)) < 1e-12);
        const TrigSeries f = u + cplx(0.0, 1.0) * hilbert_conjugate(u);
        CHECK(negative_tail_norm(f) < 1e-10);
    }
}

TEST_CASE("property: multiplier identities of the conjugate") {
    gen::Source src(13);
    const CircleGrid grid(64);
    for (int trial = 0; trial < 20; ++trial) {
        TrigSeries u = src.trig(grid, 12, true);
        u.set_coeff(0, 0.0);
        const TrigSeries t = hilbert_conjugate(u);
        for (int k = 1; k <= 12; ++k) {
            CHECK(std::abs(t.coeff(k) + cplx(0.0, 1.0) * u.coeff(k)) < 1e-12);
            CHECK(std::abs(t.coeff(-k) - cplx(0.0, 1.0) * u.coeff(-k)) < 1e-12);
        }
        // T(T(u)) + u is constant for mean-zero u.
        const auto tt = synthesize(hilbert_conjugate(t) + u);
        for (const cplx& x : tt) CHECK(std::abs(x - tt[0]) < 1e-12);
        CHECK(std::abs(evaluate(t, 0.0)) < 1e-12);
    }
}

TEST_CASE("property: cauchy_extend matches polynomial evaluation") {
    gen::Source src(14);
    const CircleGrid grid(64);
    for (int trial = 0; trial < 30; ++trial) {
        TrigSeries s(grid);
        std::vector<cplx> c(10);
        for (int k = 0; k < 10; ++k) s.set_coeff(k, c[k] = src.complex_normal());
        const cplx tau = std::polar(src.uniform(0.0, 0.95), src.uniform(0.0, 2 * pi));
        cplx horner(0.0, 0.0);
        for (int k = 9; k >= 0; --k) horner = horner * tau + c[k];
        CHECK(std::abs(cauchy_extend(s, tau) - horner) < 1e-12);
    }
}

TEST_CASE("property: exp(log_lift(s)) reproduces s") {
    gen::Source src(15);
    const CircleGrid grid(128);
    for (int trial = 0; trial < 30; ++trial) {
        TrigSeries s = src.trig(grid, 6, false);
        s.set_coeff(0, 4.0 * std::polar(1.0, src.uniform(0.0, 2 * pi)));
        const auto values = synthesize(s);
        const auto logs = synthesize(log_lift(s));
        for (int j = 0; j < grid.size(); ++j) CHECK(std::abs(std::exp(logs[j]) - values[j]) < 1e-10);
    }
}
