#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "geodisc/disc.hpp"
#include "geodisc/errors.hpp"

using namespace geodisc;

namespace {

CVec vec2(cplx a, cplx b) {
    CVec v(2);
    v << a, b;
    return v;
}

ConvexDomain unit_ball(int n = 2) { return make_ball(CVec::Zero(n), 1.0); }

}  // namespace

TEST_CASE("make_ball") {
    const ConvexDomain ball = unit_ball();
    CHECK(ball.rho(vec2(1.0, 0.0)) == doctest::Approx(0.0));
    CHECK((ball.grad(vec2(1.0, 0.0)) - vec2(1.0, 0.0)).norm() < 1e-15);
    CHECK(ball.rho(vec2(0.0, 0.0)) == doctest::Approx(-1.0));
    const double r2 = std::sqrt(1.0 / 3.0);
    CHECK(std::abs(make_ball(CVec::Zero(2), r2).rho(vec2(0.0, r2))) < 1e-15);
    CHECK((ball.hess(vec2(0.3, 0.1)) - 2.0 * RMat::Identity(4, 4)).norm() < 1e-15);
    CHECK_THROWS_AS(make_ball(CVec::Zero(2), 0.0), PreconditionError);
}

TEST_CASE("make_ellipsoid") {
    const ConvexDomain round = make_ellipsoid({1.0, 1.0});
    gen::Source src(21);
    for (int k = 0; k < 10; ++k) {
        const CVec z = src.point_in_ball(2, 1.5);
        CHECK(round.rho(z) == doctest::Approx(unit_ball().rho(z)).epsilon(1e-14));
    }
    const ConvexDomain e = make_ellipsoid({2.0, 1.0});
    CHECK(std::abs(e.rho(vec2(2.0, 0.0))) < 1e-15);
    CHECK(e.rho(vec2(1.0, 1.0)) == doctest::Approx(0.25));
}

TEST_CASE("make_perturbed_ball") {
    const ConvexDomain flat = make_perturbed_ball(0.0, named_bump("re_z1_squared", 2), 2);
    gen::Source src(22);
    for (int k = 0; k < 10; ++k) {
        const CVec z = src.point_in_ball(2, 1.2);
        CHECK(flat.rho(z) == doctest::Approx(unit_ball().rho(z)).epsilon(1e-14));
    }
    const ConvexDomain small = make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2);
    CHECK(certify(small, 200).min_hessian_eigenvalue >= 2.0 - 0.2 - 1e-12);
    CHECK_THROWS_AS(make_perturbed_ball(2.0, named_bump("re_z1_squared", 2), 2), HypothesisViolation);
}

TEST_CASE("certify") {
    const ConvexityCertificate ball = certify(unit_ball(), 200);
    CHECK(ball.passes());
    CHECK(ball.min_hessian_eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ball.min_gradient_norm == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(certify(make_ellipsoid({2.0, 1.0}), 200).min_hessian_eigenvalue == doctest::Approx(0.5).epsilon(1e-12));
    const ConvexityCertificate bad =
        certify(make_perturbed_ball_unchecked(2.0, named_bump("re_z1_squared", 2), 2), 200);
    CHECK(bad.min_hessian_eigenvalue < 0.0);
    CHECK_FALSE(bad.passes());
    CHECK_THROWS_AS(certify(unit_ball(), 50), PreconditionError);
    CHECK(certify(make_ball(CVec::Zero(3), 0.5), 200).min_gradient_norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("unit_outward_conormal") {
    CHECK((unit_outward_conormal(unit_ball(), vec2(1.0, 0.0)) - vec2(1.0, 0.0)).norm() < 1e-15);
    CHECK((unit_outward_conormal(unit_ball(), vec2(0.0, cplx(0.0, 1.0))) - vec2(0.0, cplx(0.0, -1.0))).norm() < 1e-15);
    CHECK((unit_outward_conormal(make_ellipsoid({2.0, 1.0}), vec2(2.0, 0.0)) - vec2(1.0, 0.0)).norm() < 1e-15);
    CHECK_THROWS_AS(unit_outward_conormal(unit_ball(), vec2(0.5, 0.0)), PreconditionError);
}

TEST_CASE("tangency_order_constant") {
    const double r = 0.6;
    const ConvexDomain inner = make_ball(CVec::Zero(2), r);
    const CircleGrid grid(64);
    SUBCASE("tangent line of the inner sphere") {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
        c(0, 0) = r;
        c(1, 1) = std::sqrt(1.0 - r * r);
        const AnalyticDisc line(c, grid, unit_ball());
        // rho2(phi(tau)) = (1 - r^2) |tau|^2
        CHECK(tangency_order_constant(inner, line) == doctest::Approx(1.0 - r * r).epsilon(1e-8));
        Eigen::MatrixXcd unit_speed = c;
        unit_speed(1, 1) = 1.0;
        CHECK(tangency_order_constant(inner, AnalyticDisc(unit_speed, grid)) == doctest::Approx(1.0).epsilon(1e-8));
    }
    SUBCASE("disc through the inner domain") {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
        c(0, 1) = 1.0;
        CHECK(tangency_order_constant(inner, AnalyticDisc(c, grid, unit_ball())) < 0.0);
    }
    SUBCASE("disc away from the inner domain") {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
        c(0, 0) = 0.8;
        c(1, 1) = 0.6;
        // rho2 >= 0.64 - 0.36 everywhere, so the ratio is at least 0.28 / |tau|^2.
        CHECK(tangency_order_constant(inner, AnalyticDisc(c, grid)) >= 0.28 + 0.36 - 1e-8);
    }
}

TEST_CASE("property: tangency_order_constant is rotation invariant") {
    gen::Source src(23);
    const ConvexDomain inner = make_ball(CVec::Zero(2), 0.5);
    const CircleGrid grid(64);
    for (int trial = 0; trial < 5; ++trial) {
        const CVec p = 0.5 * src.unit_vector(2);
        CVec v(2);
        v << -std::conj(p(1)), std::conj(p(0));
        Eigen::MatrixXcd c(2, 3);
        c.col(0) = p;
        c.col(1) = 0.8 * v / v.norm();
        c.col(2) = 0.05 * src.unit_vector(2);
        const AnalyticDisc disc(c, grid);
        const AnalyticDisc rotated = reparametrize(disc, MoebiusMap{0.0, std::polar(1.0, src.uniform(0.0, 6.0))});
        CHECK(tangency_order_constant(inner, rotated) ==
              doctest::Approx(tangency_order_constant(inner, disc)).epsilon(1e-10));
    }
}

TEST_CASE("property: analytic derivatives match finite differences") {
    gen::Source src(24);
    const std::vector<ConvexDomain> domains = {
        unit_ball(), make_ball(CVec::Ones(3) * 0.1, 0.7), make_ellipsoid({2.0, 1.0}),
        make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2),
        make_perturbed_ball(0.05, named_bump("re_z1_z2", 2), 2),
        make_perturbed_ball(0.03, named_bump("re_z1_cubed", 2), 2),
        make_perturbed_ball(0.05, named_bump("abs_z1_fourth", 2), 2)};
    const double h = 1e-5;
    for (const ConvexDomain& d : domains) {
        const int n = d.dimension();
        for (int trial = 0; trial < 50; ++trial) {
            const CVec z = src.point_in_ball(n, 1.0);
            const RVec x = to_real(z);
            RVec g(2 * n);
            RMat hess(2 * n, 2 * n);
            for (int a = 0; a < 2 * n; ++a) {
                RVec e = RVec::Zero(2 * n);
                e(a) = h;
                g(a) = (d.rho(to_complex(x + e)) - d.rho(to_complex(x - e))) / (2 * h);
                const CVec gp = d.grad(to_complex(x + e)), gm = d.grad(to_complex(x - e));
                for (int b = 0; b < n; ++b) {
                    // d rho / d z_b = (d_x - i d_y) / 2
                    hess(2 * b, a) = 2.0 * (gp(b) - gm(b)).real() / (2 * h);
                    hess(2 * b + 1, a) = -2.0 * (gp(b) - gm(b)).imag() / (2 * h);
                }
            }
            const CVec grad = d.grad(z);
            for (int b = 0; b < n; ++b) {
                CHECK(std::abs(2.0 * grad(b).real() - g(2 * b)) < 1e-6);
                CHECK(std::abs(-2.0 * grad(b).imag() - g(2 * b + 1)) < 1e-6);
            }
            CHECK((hess - d.hess(z)).cwiseAbs().maxCoeff() < 1e-6);
        }
    }
}

TEST_CASE("boundary sampling and scaling") {
    const ConvexDomain e = make_ellipsoid({2.0, 1.0});
    for (const CVec& b : boundary_samples(e, 50)) CHECK(std::abs(e.rho(b)) < 1e-10);
    CVec c(2);
    c << 0.1, cplx(0.0, -0.2);
    const ConvexDomain scaled = make_scaled(make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2), c, 0.5);
    gen::Source src(25);
    const ConvexDomain base = make_perturbed_ball(0.05, named_bump("re_z1_squared", 2), 2);
    for (int k = 0; k < 10; ++k) {
        const CVec u = src.point_in_ball(2, 1.0);
        CHECK(scaled.rho(c + 0.5 * u) == doctest::Approx(0.25 * base.rho(u)).epsilon(1e-13));
    }
    CHECK(make_scaled(unit_ball(), c, 0.5).is_ball());
}
