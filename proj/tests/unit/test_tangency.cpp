#include <doctest.h>

#include <cmath>
#include <sstream>

#include "geodisc/errors.hpp"
#include "geodisc/tangency.hpp"

using namespace geodisc;

namespace {

CVec vec2(cplx a, cplx b) {
    CVec v(2);
    v << a, b;
    return v;
}

ConvexDomain ball(double r, int n = 2) { return make_ball(CVec::Zero(n), r); }

// Distance of w from the analytic locus of concentric balls with z_o = (a, 0).
double ball_locus_error(const CVec& w, double a, double r2) {
    const double w1 = r2 * r2 / a;
    const double w2 = r2 * std::sqrt(1.0 - r2 * r2 / (a * a));
    return std::abs(w(0) - w1) + std::abs(std::abs(w(1)) - w2);
}

}  // namespace

TEST_CASE("tangency_residual") {
    const ConvexDomain inner = ball(0.5);
    const CVec z_o = vec2(0.8, 0.0);
    SUBCASE("tangent line of the inner sphere") {
        const CVec w = vec2(0.3125, std::sqrt(0.25 - 0.3125 * 0.3125));
        const AnalyticDisc line = ball_geodesic(z_o, w - z_o);
        for (double r : tangency_residual(inner, z_o, w, line)) CHECK(std::abs(r) < 1e-12);
    }
    SUBCASE("point inside the inner domain") {
        const CVec w = vec2(0.1, 0.1);
        CHECK(tangency_residual(inner, z_o, w, ball_geodesic(z_o, w - z_o))[0] < 0.0);
    }
    SUBCASE("transversal line") {
        const CVec w = vec2(0.5, 0.0);
        const auto r = tangency_residual(inner, z_o, w, ball_geodesic(z_o, w - z_o));
        CHECK(std::abs(r[0]) < 1e-12);
        CHECK(std::hypot(r[1], r[2]) > 0.1);
    }
    SUBCASE("disc missing the candidate point") {
        CHECK_THROWS_AS(tangency_residual(inner, z_o, vec2(0.0, 0.5), ball_geodesic(z_o, vec2(1.0, 0.0))),
                        PreconditionError);
    }
}

TEST_CASE("complex_tangent_direction") {
    const CVec w = vec2(0.3, cplx(0.0, 0.4));
    const CVec d = complex_tangent_direction(ball(0.5), w);
    CHECK(d.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs((ball(0.5).grad(w).transpose() * d).value()) < 1e-15);
    CHECK_THROWS_AS(complex_tangent_direction(ball(0.5, 3), CVec::Zero(3) + CVec::Unit(3, 0) * 0.5),
                    PreconditionError);
}

TEST_CASE("solve_tangent_disc") {
    const ConvexDomain outer = ball(1.0);
    SUBCASE("concentric balls") {
        const CVec z_o = vec2(0.8, 0.0);
        const TangencyPoint p = solve_tangent_disc(outer, ball(0.5), z_o, vec2(0.3, 0.4));
        CHECK(ball_locus_error(p.w, 0.8, 0.5) < 1e-8);
        CHECK(std::abs(p.w(0) - 0.3125) < 1e-8);
        CHECK(p.residual <= 1e-8);
        CHECK(p.tangency_constant > 0.0);
        CHECK((p.disc(p.z_parameter) - z_o).norm() < 1e-8);
        CHECK((p.disc(0.0) - p.w).norm() < 1e-12);
    }
    SUBCASE("base point inside the inner domain") {
        CHECK_THROWS_AS(solve_tangent_disc(outer, ball(0.5), vec2(0.2, 0.0), vec2(0.3, 0.4)), PreconditionError);
    }
    SUBCASE("perturbed inner domain") {
        const ConvexDomain inner =
            make_scaled(make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2), CVec::Zero(2), 0.5);
        const CVec z_o = vec2(0.8, 0.0);
        const TangencyPoint seed = seed_tangent_point(outer, inner, z_o);
        const TangencyPoint p = solve_tangent_disc(outer, inner, z_o, seed.w);
        CHECK(p.residual <= 1e-8);
        CHECK(p.tangency_constant > 0.0);
        for (double r : tangency_residual(inner, z_o, p.w, p.disc)) CHECK(std::abs(r) <= 1e-8);
    }
}

TEST_CASE("trace_locus on concentric balls") {
    const ConvexDomain outer = ball(1.0);
    for (double r2 : {0.4, 0.5}) {
        const double a = 0.8;
        const TangencyLocus locus = trace_locus(outer, ball(r2), vec2(a, 0.0), 16);
        CHECK(locus.closed);
        CHECK(locus.closure_gap <= locus.step);
        CHECK(locus.component_count == 1);
        CHECK(locus.points.size() >= 8);
        for (const TangencyPoint& p : locus.points) {
            CHECK(ball_locus_error(p.w, a, r2) < 1e-8);
            CHECK(p.tangency_constant > 0.0);
        }
        const double expected = 2.0 * r2 * std::sqrt(1.0 - r2 * r2 / (a * a));
        CHECK(locus_diameter(locus) == doctest::Approx(expected).epsilon(1e-2));
        std::ostringstream csv;
        write_locus_csv(csv, locus);
        CHECK(csv.str().rfind("re_w1,im_w1,re_w2,im_w2,tangency_constant\n", 0) == 0);
    }
}

TEST_CASE("trace_locus shrinks towards the inner boundary") {
    const ConvexDomain outer = ball(1.0);
    const ConvexDomain inner = ball(0.5);
    double previous = INFINITY;
    for (double a : {0.9, 0.7, 0.6, 0.55, 0.52}) {
        const double diameter = locus_diameter(trace_locus(outer, inner, vec2(a, 0.0), 12, {}, false));
        CHECK(diameter < previous);
        previous = diameter;
    }
    CHECK(previous < 0.3);
}

TEST_CASE("resample_locus") {
    const ConvexDomain outer = ball(1.0);
    const ConvexDomain inner = ball(0.5);
    const TangencyLocus locus = trace_locus(outer, inner, vec2(0.8, 0.0), 12, {}, false);
    const auto points = resample_locus(outer, inner, locus, 5);
    CHECK(points.size() == 5);
    for (const TangencyPoint& p : points) CHECK(ball_locus_error(p.w, 0.8, 0.5) < 1e-8);
}

TEST_CASE("jacobian_certificate") {
    SUBCASE("off-centre ball") {
        // rho = |z - c0|^2 - r^2 with c0 = (-0.5, 0), r = 0.4; locus points satisfy sum d_j rho z_j = 0.
        const ConvexDomain shifted = make_ball(vec2(-0.5, 0.0), 0.4);
        for (double t : {0.0, 1.0, 2.0, 4.0}) {
            const CVec w = vec2(-0.18, std::polar(0.24, t));
            CHECK(std::abs(shifted.rho(w)) < 1e-14);
            CHECK(std::abs((shifted.grad(w).transpose() * w).value()) < 1e-14);
            CHECK(jacobian_certificate(shifted, w) < 0.0);
        }
    }
    SUBCASE("flat along the second coordinate") {
        const ConvexDomain flat = make_custom(
            2, [](const CVec& z) { return std::norm(z(0)) - 1.0; },
            [](const CVec& z) { return vec2(std::conj(z(0)), 0.0); },
            [](const CVec&) {
                RMat h = RMat::Zero(4, 4);
                h(0, 0) = h(1, 1) = 2.0;
                return h;
            },
            CVec::Zero(2));
        CHECK(std::abs(jacobian_certificate(flat, vec2(1.0, 0.5))) < 1e-14);
    }
    SUBCASE("vanishing gradient") {
        CHECK_THROWS_AS(jacobian_certificate(ball(0.5), vec2(0.0, 0.0)), PreconditionError);
    }
}

TEST_CASE("pi_set_sample") {
    SUBCASE("n = 2 gives a single point") {
        const CVec z_o = vec2(0.3, cplx(0.0, 0.4));
        const auto samples = pi_set_sample(ball(1.0), ball(0.5), z_o, 6);
        CHECK(samples.size() == 6);
        for (const CVec& s : samples) CHECK((s - samples.front()).norm() < 1e-6);
    }
    SUBCASE("n = 3 gives distinct points") {
        CVec z_o = CVec::Zero(3);
        z_o(0) = 0.5;
        const auto samples = pi_set_sample(ball(1.0, 3), ball(0.5, 3), z_o, 4);
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t j = i + 1; j < samples.size(); ++j) CHECK((samples[i] - samples[j]).norm() > 1e-3);
    }
    SUBCASE("point off the inner boundary") {
        CHECK_THROWS_AS(pi_set_sample(ball(1.0), ball(0.5), vec2(0.6, 0.0), 3), PreconditionError);
    }
}
