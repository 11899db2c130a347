#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "geodisc/errors.hpp"
#include "geodisc/lifts.hpp"
#include "geodisc/stationary.hpp"
#include "oracles.hpp"

using namespace geodisc;

namespace {

CVec vec2(cplx a, cplx b) {
    CVec v(2);
    v << a, b;
    return v;
}

ConvexDomain unit_ball(int n = 2) { return make_ball(CVec::Zero(n), 1.0); }

AnalyticDisc coordinate_disc(int axis, int power = 1) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, power + 1);
    c(axis, power) = 1.0;
    return AnalyticDisc(c, CircleGrid(256), unit_ball());
}

double max_imag_multiplier(const ConormalLift& lift) { return lift.multiplier_imag; }

}  // namespace

TEST_CASE("lift_from_disc") {
    SUBCASE("radial disc") {
        const ConormalLift lift = lift_from_disc(unit_ball(), coordinate_disc(0));
        CHECK((lift.pole_coeff - vec2(1.0, 0.0)).norm() < 1e-12);
        CHECK(lift.holo_coeffs.cwiseAbs().maxCoeff() < 1e-12);
        for (double g : lift.multiplier) CHECK(std::abs(g - 1.0) < 1e-12);
        CHECK((lift(0.5) - vec2(2.0, 0.0)).norm() < 1e-11);
    }
    SUBCASE("second axis with the swapping rotation") {
        CoordinateRotation swap = CoordinateRotation::Zero(2, 2);
        swap(0, 1) = 1.0;
        swap(1, 0) = 1.0;
        LiftOptions options;
        options.rotation = swap;
        const ConormalLift lift = lift_from_disc(unit_ball(), coordinate_disc(1), options);
        CHECK((lift.pole_coeff - vec2(0.0, 1.0)).norm() < 1e-12);
        CHECK(lift.holo_coeffs.cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("double cover is rejected") {
        CHECK_THROWS_AS(lift_from_disc(unit_ball(), coordinate_disc(0, 2)), PreconditionError);
    }
    SUBCASE("detached disc is rejected") {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
        c(0, 1) = 0.5;
        CHECK_THROWS_AS(lift_from_disc(unit_ball(), AnalyticDisc(c, CircleGrid(64))), PreconditionError);
    }
}

TEST_CASE("unitary_with_first_row") {
    gen::Source src(51);
    for (int n : {2, 3, 4}) {
        const CVec row = src.unit_vector(n);
        const CoordinateRotation u = unitary_with_first_row(row);
        CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-13);
        CHECK((CVec(u.row(0).transpose()) - row).norm() < 1e-13);
    }
}

TEST_CASE("pole_mover and move_pole") {
    const ConormalLift lift = lift_from_disc(unit_ball(), coordinate_disc(0));
    SUBCASE("zero target leaves the lift unchanged") {
        const ConormalLift same = move_pole(lift, 0.0);
        CHECK((same.pole_coeff - lift.pole_coeff).norm() == 0.0);
    }
    SUBCASE("the mover is real on the circle") {
        const CircleGrid grid(64);
        for (int j = 0; j < grid.size(); ++j)
            CHECK(std::abs(pole_mover(cplx(0.3, 0.1), grid.node(j)).imag()) < 1e-12);
    }
    SUBCASE("moved lifts stay conormal with a simple pole at 0") {
        const ConormalLift once = move_pole(lift, cplx(0.3, 0.1));
        CHECK(once.negative_tail < 1e-10);
        CHECK(boundary_conormality_residual(unit_ball(), once.disc, once) < 1e-10);
        CHECK(once.pole_coeff.norm() > 1e-3);
        const ConormalLift twice = move_pole(once, cplx(-0.2, 0.2));
        CHECK(twice.negative_tail < 1e-10);
        CHECK(boundary_conormality_residual(unit_ball(), twice.disc, twice) < 1e-10);
        CHECK((twice(1.0) - unit_outward_conormal(unit_ball(), twice.disc(1.0))).norm() < 1e-10);
    }
    SUBCASE("target on the circle is rejected") {
        CHECK_THROWS_AS(move_pole(lift, 1.0), PreconditionError);
    }
}

TEST_CASE("projectivize") {
    const ConormalLift lift = lift_from_disc(unit_ball(), coordinate_disc(0));
    CHECK((projectivize(lift, 0.0) - vec2(1.0, 0.0)).norm() < 1e-12);
    CHECK((projectivize(vec2(cplx(0.0, 2.0), 1.0)) - vec2(1.0, cplx(0.0, -0.5))).norm() < 1e-15);
    CHECK((projectivize(vec2(1.0, cplx(0.0, 1.0))) - vec2(1.0, cplx(0.0, 1.0))).norm() < 1e-15);
    CHECK_THROWS_AS(projectivize(vec2(0.0, 0.0)), PreconditionError);
    CHECK_THROWS_AS(projectivize(lift, 1.5), PreconditionError);
}

TEST_CASE("boundary_conormality_residual") {
    const AnalyticDisc disc = ball_geodesic(vec2(0.3, cplx(0.0, 0.2)), vec2(1.0, 1.0));
    const ConormalLift lift = lift_from_disc(unit_ball(), disc);
    CHECK(boundary_conormality_residual(unit_ball(), disc, lift) <= 1e-10);
    gen::Source src(52);
    ConormalLift bent = lift;
    const CVec kick = src.unit_vector(2);
    bent.holo_coeffs.col(1) += 1e-3 * kick;
    const double r = boundary_conormality_residual(unit_ball(), disc, bent);
    CHECK(r > 1e-4);
    CHECK(r < 1e-2);
}

TEST_CASE("property: lifts of ball geodesics") {
    gen::Source src(53);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CVec z = src.point_in_ball(n, 0.6);
            const AnalyticDisc disc = ball_geodesic(z, src.unit_vector(n));
            const ConormalLift lift = lift_from_disc(unit_ball(n), disc);
            CHECK(max_imag_multiplier(lift) <= 1e-10);
            CHECK(lift.multiplier[0] == 1.0);
            CHECK(lift.negative_tail <= 1e-10);
            CHECK(boundary_conormality_residual(unit_ball(n), disc, lift) <= 1e-10);
            CHECK((lift(1.0) - unit_outward_conormal(unit_ball(n), disc(1.0))).norm() <= 1e-10);
            for (double g : lift.multiplier) CHECK(g > 0.0);
        }
    }
}

TEST_CASE("property: lifts with different rotations agree projectively") {
    gen::Source src(54);
    for (int trial = 0; trial < 8; ++trial) {
        const CVec z = src.point_in_ball(2, 0.5);
        const AnalyticDisc disc = ball_geodesic(z, src.unit_vector(2));
        const ConormalLift a = lift_from_disc(unit_ball(), disc);
        LiftOptions options;
        options.rotation = unitary_with_first_row(CVec(disc.base_direction().normalized()));
        const ConormalLift b = lift_from_disc(unit_ball(), disc, options);
        for (int j = 0; j < 20; ++j) {
            const cplx tau = j == 0 ? cplx(0.0) : std::polar(src.uniform(0.1, 1.0), src.uniform(0.0, 6.3));
            CHECK((projectivize(a, tau) - projectivize(b, tau)).norm() < 1e-8);
        }
    }
}

TEST_CASE("property: lifts of solved discs of a callback ball") {
    gen::Source src(55);
    for (int trial = 0; trial < 3; ++trial) {
        const CVec z = src.point_in_ball(2, 0.6);
        const DiscAndLift r = solve_from_center_direction(oracle::custom_unit_ball(2), z, src.unit_vector(2));
        CHECK(r.lift.multiplier_imag <= 1e-10);
        CHECK(r.lift.negative_tail <= 1e-10);
        CHECK(boundary_conormality_residual(unit_ball(), r.disc, r.lift) <= 1e-10);
    }
}

TEST_CASE("monotonicity_integral separates distinct discs") {
    gen::Source src(56);
    for (int trial = 0; trial < 10; ++trial) {
        const AnalyticDisc d1 = ball_geodesic(src.point_in_ball(2, 0.5), src.unit_vector(2));
        const AnalyticDisc d2 = ball_geodesic(src.point_in_ball(2, 0.5), src.unit_vector(2));
        const double value =
            monotonicity_integral(lift_from_disc(unit_ball(), d1), lift_from_disc(unit_ball(), d2));
        CHECK(value > 0.0);
    }
}
