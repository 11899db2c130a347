#include <doctest.h>

#include "generators.hpp"
#include "geodisc/disc.hpp"
#include "geodisc/errors.hpp"
#include "geodisc/stationary.hpp"

using namespace geodisc;

namespace {

CVec vec2(cplx a, cplx b) {
    CVec v(2);
    v << a, b;
    return v;
}

AnalyticDisc radial_disc(const CircleGrid& grid = CircleGrid(64)) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
    c(0, 1) = 1.0;
    return AnalyticDisc(c, grid, make_ball(CVec::Zero(2), 1.0));
}

}  // namespace

TEST_CASE("disc evaluation and attachment") {
    const AnalyticDisc d = radial_disc();
    CHECK((d(cplx(0.3, 0.2)) - vec2(cplx(0.3, 0.2), 0.0)).norm() < 1e-16);
    CHECK((d.derivative(0.5) - vec2(1.0, 0.0)).norm() < 1e-16);
    CHECK(d.attachment_residual() < 1e-15);
    CHECK(d.min_node_separation() > 0.0);
    CHECK_THROWS_AS(AnalyticDisc(Eigen::MatrixXcd::Zero(3, 2), CircleGrid(16), make_ball(CVec::Zero(2), 1.0)),
                    PreconditionError);
}

TEST_CASE("settings validation") {
    SolverSettings s;
    CHECK_NOTHROW(s.validate());
    s.newton_tol = 1e-13;
    CHECK_THROWS_AS(s.validate(), PreconditionError);
    s = SolverSettings{};
    s.modes = 65;
    CHECK_THROWS_AS(s.validate(), PreconditionError);
}

TEST_CASE("Moebius maps") {
    const MoebiusMap m{cplx(0.5, 0.0), 1.0};
    CHECK(std::abs(m(0.0) - 0.5) < 1e-16);
    CHECK(std::abs(std::abs(m(std::polar(1.0, 1.3))) - 1.0) < 1e-15);
    const MoebiusMap inv = m.inverse();
    CHECK(std::abs(inv(m(cplx(0.2, -0.3))) - cplx(0.2, -0.3)) < 1e-15);
    CHECK_THROWS_AS((MoebiusMap{cplx(1.0, 0.0), 1.0}.validate()), PreconditionError);
}

TEST_CASE("reparametrize") {
    const CircleGrid grid(64);
    const AnalyticDisc d = radial_disc(grid);
    SUBCASE("identity") {
        const AnalyticDisc r = reparametrize(d, MoebiusMap{});
        CHECK(r.modes() == 16);
        CHECK((r.coeffs().leftCols(2) - d.coeffs()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(r.coeffs().rightCols(15).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("rotation") {
        const cplx w = std::polar(1.0, 0.7);
        const AnalyticDisc r = reparametrize(d, MoebiusMap{0.0, w});
        CHECK(std::abs(r.coeffs()(0, 1) - w) < 1e-14);
        CHECK(r.coeffs().cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("translation a = 1/2 against direct composition") {
        const AnalyticDisc r = reparametrize(radial_disc(CircleGrid(256)), MoebiusMap{0.5, 1.0});
        for (double t : {0.0, 0.3, -0.6}) {
            const cplx tau = std::polar(0.7, t);
            CHECK(std::abs(r(tau)(0) - (tau + 0.5) / (1.0 + 0.5 * tau)) < 1e-12);
        }
    }
}

TEST_CASE("locate") {
    const AnalyticDisc d = radial_disc();
    const Location loc = locate(d, vec2(cplx(0.2, 0.4), 0.0));
    CHECK(std::abs(loc.tau - cplx(0.2, 0.4)) < 1e-10);
    CHECK(loc.distance < 1e-10);
}

TEST_CASE("property: reparametrization preserves the image set") {
    gen::Source src(31);
    SolverSettings s;
    s.modes = 32;
    s.grid = CircleGrid(128);
    for (int trial = 0; trial < 5; ++trial) {
        const CVec z = src.point_in_ball(2, 0.4);
        const AnalyticDisc d = ball_geodesic(z, src.unit_vector(2), s);
        const MoebiusMap m{std::polar(src.uniform(0.0, 0.3), src.uniform(0.0, 6.0)), std::polar(1.0, src.uniform(0.0, 6.0))};
        const AnalyticDisc r = reparametrize(d, m);
        for (int j = 0; j < 8; ++j) {
            const cplx tau = std::polar(0.5, 0.8 * j);
            CHECK((r(tau) - d(m(tau))).norm() < 1e-8);
            CHECK(locate(d, r(std::polar(1.0, 0.8 * j))).distance < 1e-8);
        }
    }
}
