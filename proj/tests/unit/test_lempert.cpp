#include <doctest.h>

#include "generators.hpp"
#include "geodisc/errors.hpp"
#include "geodisc/lempert.hpp"

using namespace geodisc;

namespace {

CVec vec2(cplx a, cplx b) {
    CVec v(2);
    v << a, b;
    return v;
}

ConvexDomain unit_ball() { return make_ball(CVec::Zero(2), 1.0); }

SolverSettings perturbed_settings() {
    SolverSettings s;
    s.modes = 32;
    s.grid = CircleGrid(128);
    return s;
}

}  // namespace

TEST_CASE("psi") {
    SUBCASE("radial point") {
        const RiemannMapSample s = psi(unit_ball(), vec2(0.0, 0.0), vec2(0.5, 0.0));
        CHECK((s.psi_value - vec2(0.5, 0.0)).norm() < 1e-10);
        CHECK(s.psi_value.norm() == doctest::Approx(s.xi).epsilon(1e-14));
    }
    SUBCASE("identity at the centre of the ball") {
        gen::Source src(61);
        for (int trial = 0; trial < 5; ++trial) {
            const CVec w = src.point_in_ball(2, 0.8);
            CHECK((psi(unit_ball(), vec2(0.0, 0.0), w).psi_value - w).norm() < 1e-9);
        }
    }
    SUBCASE("diagonal is rejected") {
        CHECK_THROWS_AS(psi(unit_ball(), vec2(0.2, 0.0), vec2(0.2, 1e-9)), PreconditionError);
    }
}

TEST_CASE("psi approaches the sphere along a ray") {
    const ConvexDomain d = make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2);
    const CVec z = vec2(0.1, 0.0);
    const CVec dir = vec2(0.6, cplx(0.0, 0.8));
    double previous = 0.0;
    for (double t : {0.3, 0.6, 0.8, 0.9}) {
        const double len = psi(d, z, z + t * dir, perturbed_settings()).psi_value.norm();
        CHECK(len > previous);
        CHECK(len < 1.0);
        previous = len;
    }
}

TEST_CASE("psi_inverse") {
    CHECK((psi_inverse(unit_ball(), vec2(0.0, 0.0), vec2(0.3, 0.0)) - vec2(0.3, 0.0)).norm() < 1e-12);
    CHECK_THROWS_AS(psi_inverse(unit_ball(), vec2(0.0, 0.0), vec2(0.0, 0.0)), PreconditionError);
    CHECK_THROWS_AS(psi_inverse(unit_ball(), vec2(0.0, 0.0), vec2(1.0, 0.0)), PreconditionError);
}

TEST_CASE("property: psi and psi_inverse are mutually inverse on a perturbed ball") {
    const ConvexDomain d = make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2);
    const SolverSettings s = perturbed_settings();
    gen::Source src(62);
    const CVec z = vec2(cplx(0.1, 0.05), -0.1);
    for (int trial = 0; trial < 6; ++trial) {
        const CVec w = src.point_in_ball(2, 0.6);
        const RiemannMapSample sample = psi(d, z, w, s);
        CHECK((psi_inverse(d, z, sample.psi_value, s) - w).norm() < 1e-6);
        const CVec v = 0.7 * src.unit_vector(2);
        CHECK((psi(d, z, psi_inverse(d, z, v, s), s).psi_value - v).norm() < 1e-6);
    }
}
