#include "geodisc/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fft.hpp"
#include "geodisc/errors.hpp"

namespace geodisc {

namespace {

constexpr double kPi = std::numbers::pi;

struct UnitGeodesic {
    Eigen::MatrixXcd coeffs;
    cplx a;
};

// phi(tau) = z_perp + R m_a(tau) vhat with m_a(tau) = (tau + a)/(1 + conj(a) tau).
UnitGeodesic unit_geodesic(const CVec& z, const CVec& v, int modes) {
    if (v.norm() < 1e-12) throw PreconditionError("direction must be nonzero");
    if (z.size() != v.size()) throw PreconditionError("point and direction dimensions differ");
    if (z.norm() >= 1.0) throw PreconditionError("base point must lie inside the ball");
    const CVec vhat = v / v.norm();
    const cplx alpha = vhat.dot(z);
    const CVec zperp = z - alpha * vhat;
    const double R = std::sqrt(1.0 - zperp.squaredNorm());
    const cplx a = alpha / R;
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(z.size(), modes + 1);
    c.col(0) = z;
    const double scale = 1.0 - std::norm(a);
    cplx power{1.0, 0.0};
    for (int k = 1; k <= modes; ++k) {
        c.col(k) = (R * scale * power) * vhat;
        power *= -std::conj(a);
    }
    return {c, a};
}

// g = |tau + a|^2 / |1 + a|^2 as a real trigonometric series.
TrigSeries ball_multiplier(const CircleGrid& grid, cplx a) {
    TrigSeries g(grid);
    const double den = std::norm(1.0 + a);
    g.set_coeff(0, (1.0 + std::norm(a)) / den);
    g.set_coeff(1, std::conj(a) / den);
    g.set_coeff(-1, a / den);
    return g;
}

// Real unknowns: r (a_1 = r vhat), Re/Im of a_2..a_M, then p_1..p_K, q_1..q_K with
// g(theta) = 1 + sum_k p_k (cos k theta - 1) + q_k sin k theta.
class CollocationSystem {
public:
    CollocationSystem(CVec z, CVec vhat, const SolverSettings& s)
        : z_(std::move(z)), vhat_(std::move(vhat)), grid_(s.grid),
          n_(static_cast<int>(z_.size())), M_(s.modes), K_(s.modes), N_(s.grid.size()) {}

    int unknowns() const { return 1 + 2 * n_ * (M_ - 1) + 2 * K_; }
    int rows() const { return N_ + 2 * n_ * tail_modes(); }
    int tail_modes() const { return N_ / 2 - 1; }
    int idx_a(int k, int m) const { return 1 + 2 * ((k - 2) * n_ + m); }
    int idx_p(int k) const { return 1 + 2 * n_ * (M_ - 1) + (k - 1); }
    int idx_q(int k) const { return idx_p(k) + K_; }

    RVec pack(const Eigen::MatrixXcd& coeffs, const TrigSeries& g) const {
        RVec x = RVec::Zero(unknowns());
        x(0) = vhat_.dot(coeffs.col(1)).real();
        for (int k = 2; k <= M_ && k < coeffs.cols(); ++k) {
            for (int m = 0; m < n_; ++m) {
                x(idx_a(k, m)) = coeffs(m, k).real();
                x(idx_a(k, m) + 1) = coeffs(m, k).imag();
            }
        }
        // g = c_0 + sum_k 2 Re(c_k e^{ik theta}): p_k = 2 Re c_k, q_k = -2 Im c_k,
        // rescaled so that g(1) = 1.
        double at_one = 0.0;
        for (int k = g.min_mode(); k <= g.max_mode(); ++k) at_one += g.coeff(k).real();
        for (int k = 1; k <= K_; ++k) {
            x(idx_p(k)) = 2.0 * g.coeff(k).real() / at_one;
            x(idx_q(k)) = -2.0 * g.coeff(k).imag() / at_one;
        }
        return x;
    }

    Eigen::MatrixXcd coeffs(const RVec& x) const {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n_, M_ + 1);
        c.col(0) = z_;
        c.col(1) = x(0) * vhat_;
        for (int k = 2; k <= M_; ++k) {
            for (int m = 0; m < n_; ++m) c(m, k) = cplx(x(idx_a(k, m)), x(idx_a(k, m) + 1));
        }
        return c;
    }

    TrigSeries multiplier(const RVec& x) const {
        TrigSeries g(grid_);
        double c0 = 1.0;
        for (int k = 1; k <= K_; ++k) {
            c0 -= x(idx_p(k));
            const cplx ck(0.5 * x(idx_p(k)), -0.5 * x(idx_q(k)));
            g.set_coeff(k, ck);
            g.set_coeff(-k, std::conj(ck));
        }
        g.set_coeff(0, c0);
        return g;
    }

    struct Evaluation {
        RVec F;
        double attachment = 0.0;
        double stationarity = 0.0;
        bool finite = true;
    };

    // Residual, and the Jacobian when J is non-null.
    Evaluation evaluate(const ConvexDomain& dom, const RVec& x, RMat* J) const {
        Evaluation ev;
        ev.F.resize(rows());
        const AnalyticDisc disc(coeffs(x), grid_);
        const Eigen::MatrixXcd b = disc.boundary_values();
        const std::vector<cplx> gc = synthesize(multiplier(x));
        std::vector<double> g(static_cast<std::size_t>(N_));
        for (int j = 0; j < N_; ++j) g[static_cast<std::size_t>(j)] = gc[static_cast<std::size_t>(j)].real();

        Eigen::MatrixXcd grads(n_, N_);
        for (int j = 0; j < N_; ++j) {
            const double r = dom.rho(b.col(j));
            if (!std::isfinite(r)) {
                ev.finite = false;
                return ev;
            }
            ev.F(j) = r;
            ev.attachment = std::max(ev.attachment, std::abs(r));
            grads.col(j) = dom.grad(b.col(j));
        }
        const double ref = std::max(grads.col(0).norm(), 1e-300);
        Eigen::MatrixXcd P(n_, N_);
        for (int j = 0; j < N_; ++j) P.col(j) = (g[static_cast<std::size_t>(j)] * grid_.node(j)) * grads.col(j);
        ev.stationarity = write_tail(P, ev.F) / ref;
        if (!ev.F.allFinite()) {
            ev.finite = false;
            return ev;
        }
        if (J) jacobian(dom, b, grads, g, *J);
        return ev;
    }

private:
    // Writes sqrt(N)-weighted Re/Im of the negative modes of each row of P into
    // F after the attachment rows; returns the largest unweighted tail norm.
    double write_tail(const Eigen::MatrixXcd& P, RVec& F) const {
        std::vector<cplx> in(static_cast<std::size_t>(N_)), out(static_cast<std::size_t>(N_));
        const double weight = std::sqrt(static_cast<double>(N_));
        double worst = 0.0;
        for (int m = 0; m < n_; ++m) {
            for (int j = 0; j < N_; ++j) in[static_cast<std::size_t>(j)] = P(m, j);
            detail::fft_forward(in, out);
            double tail = 0.0;
            for (int k = 1; k <= tail_modes(); ++k) {
                const cplx c = out[static_cast<std::size_t>(N_ - k)] / static_cast<double>(N_);
                const int row = N_ + 2 * (m * tail_modes() + (k - 1));
                F(row) = weight * c.real();
                F(row + 1) = weight * c.imag();
                tail += std::norm(c);
            }
            worst = std::max(worst, std::sqrt(tail));
        }
        return worst;
    }

    void jacobian(const ConvexDomain& dom, const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& grads,
                  const std::vector<double>& g, RMat& J) const {
        J.resize(rows(), unknowns());
        std::vector<Eigen::MatrixXcd> holo(static_cast<std::size_t>(N_)), mixed(static_cast<std::size_t>(N_));
        for (int j = 0; j < N_; ++j) {
            const ComplexHessian h = complex_hessian(dom.hess(b.col(j)));
            holo[static_cast<std::size_t>(j)] = h.holo;
            mixed[static_cast<std::size_t>(j)] = h.mixed;
        }
        Eigen::MatrixXcd dphi(n_, N_);
        std::vector<double> dg(static_cast<std::size_t>(N_));
        Eigen::MatrixXcd dP(n_, N_);
        RVec column(rows());

        auto fill = [&](int col, bool has_dphi, bool has_dg) {
            for (int j = 0; j < N_; ++j) {
                const auto js = static_cast<std::size_t>(j);
                const cplx node = grid_.node(j);
                CVec d = CVec::Zero(n_);
                if (has_dphi) {
                    column(j) = 2.0 * (grads.col(j).transpose() * dphi.col(j)).value().real();
                    d = (g[js] * node) * (holo[js] * dphi.col(j) + mixed[js] * dphi.col(j).conjugate());
                } else {
                    column(j) = 0.0;
                }
                if (has_dg) d += (dg[js] * node) * grads.col(j);
                dP.col(j) = d;
            }
            write_tail(dP, column);
            J.col(col) = column;
        };

        // r
        for (int j = 0; j < N_; ++j) dphi.col(j) = grid_.node(j) * vhat_;
        fill(0, true, false);
        // a_k
        for (int k = 2; k <= M_; ++k) {
            for (int m = 0; m < n_; ++m) {
                for (int part = 0; part < 2; ++part) {
                    dphi.setZero();
                    const cplx unit = part == 0 ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
                    for (int j = 0; j < N_; ++j) dphi(m, j) = unit * grid_.node(static_cast<int>((static_cast<long>(j) * k) % N_));
                    fill(idx_a(k, m) + part, true, false);
                }
            }
        }
        // p_k, q_k
        for (int k = 1; k <= K_; ++k) {
            for (int j = 0; j < N_; ++j) {
                const cplx e = grid_.node(static_cast<int>((static_cast<long>(j) * k) % N_));
                dg[static_cast<std::size_t>(j)] = e.real() - 1.0;
            }
            fill(idx_p(k), false, true);
            for (int j = 0; j < N_; ++j) {
                const cplx e = grid_.node(static_cast<int>((static_cast<long>(j) * k) % N_));
                dg[static_cast<std::size_t>(j)] = e.imag();
            }
            fill(idx_q(k), false, true);
        }
    }

    CVec z_, vhat_;
    CircleGrid grid_;
    int n_, M_, K_, N_;
};

struct NewtonOutcome {
    bool converged = false;
    int iterations = 0;
    double attachment = 0.0;
    double stationarity = 0.0;
    double norm = std::numeric_limits<double>::infinity();
};

NewtonOutcome newton(const CollocationSystem& sys, const ConvexDomain& dom, RVec& x, double tol, int max_iters) {
    NewtonOutcome out;
    RMat J;
    for (int it = 0; it <= max_iters; ++it) {
        CollocationSystem::Evaluation ev = sys.evaluate(dom, x, nullptr);
        if (!ev.finite) return out;
        out.attachment = ev.attachment;
        out.stationarity = ev.stationarity;
        out.norm = ev.F.norm();
        out.iterations = it;
        if (ev.attachment <= tol && ev.stationarity <= tol) {
            out.converged = true;
            return out;
        }
        if (it == max_iters) break;
        sys.evaluate(dom, x, &J);
        const int p = static_cast<int>(J.cols());
        RMat JtJ = RMat::Zero(p, p);
        JtJ.selfadjointView<Eigen::Lower>().rankUpdate(J.transpose());
        const RVec rhs = -(J.transpose() * ev.F);
        Eigen::LDLT<RMat> ldlt(JtJ.selfadjointView<Eigen::Lower>());
        RVec step;
        if (ldlt.info() == Eigen::Success && ldlt.isPositive()) step = ldlt.solve(rhs);
        if (step.size() != p || !step.allFinite()) step = J.colPivHouseholderQr().solve(-ev.F);

        const double f0 = ev.F.squaredNorm();
        double lambda = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 12; ++ls, lambda *= 0.5) {
            const RVec trial = x + lambda * step;
            if (!(trial(0) > 0.0)) continue;
            CollocationSystem::Evaluation te = sys.evaluate(dom, trial, nullptr);
            if (!te.finite) continue;
            if (te.F.squaredNorm() <= (1.0 - 1e-4 * lambda) * f0) {
                x = trial;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    return out;
}

void check_interior(const ConvexDomain& domain, const CVec& z, const CVec& v) {
    if (z.size() != domain.dimension() || v.size() != domain.dimension()) {
        throw PreconditionError("point/direction dimension does not match the domain");
    }
    if (v.norm() < 1e-12) throw PreconditionError("direction must be nonzero");
    if (!(domain.rho(z) < -1e-8)) throw PreconditionError("base point must be strictly interior");
}

StationarySolution closed_form(const ConvexDomain& domain, const CVec& z, const CVec& v, const SolverSettings& settings) {
    const CVec c = domain.ball_center();
    const double R = domain.ball_radius();
    UnitGeodesic u = unit_geodesic((z - c) / R, v, settings.modes);
    u.coeffs *= R;
    u.coeffs.col(0) = z;
    AnalyticDisc disc(std::move(u.coeffs), settings.grid, domain);
    SolveReport report;
    report.closed_form = true;
    report.attachment_residual = disc.attachment_residual(domain);
    return {std::move(disc), ball_multiplier(settings.grid, u.a), report};
}

}  // namespace

AnalyticDisc ball_geodesic(const CVec& z, const CVec& v, const SolverSettings& settings) {
    return ball_geodesic(CVec::Zero(z.size()), 1.0, z, v, settings);
}

AnalyticDisc ball_geodesic(const CVec& center, double radius, const CVec& z, const CVec& v, const SolverSettings& settings) {
    settings.validate();
    if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
    if ((z - center).norm() >= radius) throw PreconditionError("base point must lie inside the ball");
    return closed_form(make_ball(center, radius), z, v, settings).disc;
}

StationarySolution solve_stationary(const ConvexDomain& domain, const CVec& z, const CVec& v,
                                    const SolverSettings& settings, const StationarySolution* warm) {
    settings.validate();
    check_interior(domain, z, v);
    const CVec vhat = v / v.norm();
    const CollocationSystem sys(z, vhat, settings);
    int total_iters = 0;

    auto finish = [&](const RVec& x, const NewtonOutcome& o, int stages) {
        AnalyticDisc disc(sys.coeffs(x), settings.grid, domain);
        SolveReport rep{total_iters, stages, o.attachment, o.stationarity, false};
        return StationarySolution{std::move(disc), sys.multiplier(x), rep};
    };

    if (warm && warm->disc.dimension() == domain.dimension() && warm->disc.grid() == settings.grid) {
        RVec x = sys.pack(warm->disc.coeffs(), warm->multiplier);
        if (x(0) > 0.0) {
            const NewtonOutcome o = newton(sys, domain, x, settings.newton_tol, settings.max_iters);
            total_iters += o.iterations;
            if (o.converged) return finish(x, o, 0);
        }
    }

    if (domain.is_ball()) {
        const StationarySolution seed = closed_form(domain, z, vhat, settings);
        RVec x = sys.pack(seed.disc.coeffs(), seed.multiplier);
        const NewtonOutcome o = newton(sys, domain, x, settings.newton_tol, settings.max_iters);
        total_iters += o.iterations;
        if (!o.converged) throw SolverDivergence("Newton iteration did not converge", std::max(o.attachment, o.stationarity));
        return finish(x, o, 1);
    }

    InscribedBall ball = inscribed_ball(domain);
    if ((z - ball.center).norm() >= 0.95 * ball.radius) {
        ball.center = z;
        ball.radius = boundary_distance(domain, z);
    }
    const ConvexDomain start = make_ball(ball.center, ball.radius);
    const StationarySolution seed = closed_form(start, z, vhat, settings);
    RVec x = sys.pack(seed.disc.coeffs(), seed.multiplier);

    const double min_dt = 1.0 / (64.0 * settings.continuation_steps);
    double t = 0.0;
    double dt = 1.0 / settings.continuation_steps;
    int stages = 0;
    NewtonOutcome last;
    while (t < 1.0) {
        const double next = std::min(1.0, t + dt);
        const bool final_stage = next >= 1.0;
        const ConvexDomain stage = final_stage ? domain : make_homotopy(start, domain, next);
        const double tol = final_stage ? settings.newton_tol : std::max(1e-6, settings.newton_tol);
        RVec trial = x;
        const NewtonOutcome o = newton(sys, stage, trial, tol, settings.max_iters);
        total_iters += o.iterations;
        ++stages;
        last = o;
        if (o.converged) {
            x = trial;
            t = next;
            continue;
        }
        dt *= 0.5;
        if (dt < min_dt) {
            throw SolverDivergence("continuation failed at t = " + std::to_string(next),
                                   std::max(o.attachment, o.stationarity));
        }
    }
    return finish(x, last, stages);
}

StationarySolution geodesic_disc(const ConvexDomain& domain, const CVec& z, const CVec& v,
                                 const SolverSettings& settings, const StationarySolution* warm) {
    if (settings.closed_form_balls && domain.is_ball()) {
        settings.validate();
        check_interior(domain, z, v);
        return closed_form(domain, z, v, settings);
    }
    return solve_stationary(domain, z, v, settings, warm);
}

DiscAndLift solve_from_center_direction(const ConvexDomain& domain, const CVec& z, const CVec& v,
                                        const SolverSettings& settings) {
    check_interior(domain, z, v);
    if (!certify(domain, 100).passes()) throw HypothesisViolation("domain fails the strong convexity certificate");
    StationarySolution sol = solve_stationary(domain, z, v, settings);
    LiftOptions opts;
    opts.attachment_tol = std::max(10.0 * settings.newton_tol, 1e-9);
    ConormalLift lift = lift_from_disc(domain, sol.disc, opts);
    return {std::move(sol.disc), std::move(lift), sol.report};
}

TwoPointSolution solve_two_point(const ConvexDomain& domain, const CVec& z, const CVec& w, const SolverSettings& settings) {
    settings.validate();
    const int n = domain.dimension();
    if (w.size() != n) throw PreconditionError("point dimension does not match the domain");
    if ((w - z).norm() < 1e-6) throw PreconditionError("points must be distinct (|w - z| >= 1e-6)");
    check_interior(domain, z, w - z);
    if (!(domain.rho(w) < -1e-8)) throw PreconditionError("second point must be strictly interior");

    CVec u = (w - z) / (w - z).norm();
    StationarySolution sol = geodesic_disc(domain, z, u, settings);
    const Location loc = locate(sol.disc, w);
    double xi = std::clamp(std::abs(loc.tau), 1e-3, 0.999);
    if (std::abs(loc.tau) > 0.0) {
        u *= std::polar(1.0, std::arg(loc.tau));
        sol = geodesic_disc(domain, z, u, settings, &sol);
    }

    const double target = std::max(settings.newton_tol * 10.0, 1e-11);
    const double h = 1e-6;
    auto residual = [&](const StationarySolution& s, double x) { return to_real(s.disc(x) - w); };

    RVec F = residual(sol, xi);
    int outer = 0;
    for (; outer < settings.max_iters; ++outer) {
        if (F.norm() <= target) break;
        RMat J(2 * n, 2 * n + 1);
        const RVec ur = to_real(u);
        for (int i = 0; i < 2 * n; ++i) {
            RVec up = ur;
            up(i) += h;
            const StationarySolution sp = geodesic_disc(domain, z, to_complex(up), settings, &sol);
            J.col(i) = (residual(sp, xi) - F) / h;
        }
        J.col(2 * n) = to_real(sol.disc.derivative(xi));
        const RVec step = J.completeOrthogonalDecomposition().solve(-F);

        double lambda = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 10; ++ls, lambda *= 0.5) {
            const RVec un = ur + lambda * step.head(2 * n);
            const double xn = xi + lambda * step(2 * n);
            if (!(xn > 0.0 && xn < 1.0) || un.norm() < 1e-12) continue;
            try {
                CVec cu = to_complex(un);
                cu /= cu.norm();
                StationarySolution sn = geodesic_disc(domain, z, cu, settings, &sol);
                const RVec Fn = residual(sn, xn);
                if (Fn.norm() < (1.0 - 1e-4 * lambda) * F.norm()) {
                    u = cu;
                    xi = xn;
                    sol = std::move(sn);
                    F = Fn;
                    accepted = true;
                    break;
                }
            } catch (const SolverDivergence&) {
            }
        }
        if (!accepted) break;
    }
    if (F.norm() > std::max(target, 1e-8)) throw SolverDivergence("two-point iteration did not converge", F.norm());
    return {std::move(sol), xi, outer, F.norm()};
}

double kobayashi_distance(const ConvexDomain& domain, const CVec& z, const CVec& w, const SolverSettings& settings) {
    if (z.size() == w.size() && (z - w).norm() == 0.0) {
        if (!(domain.rho(z) < -1e-8)) throw PreconditionError("point must be strictly interior");
        return 0.0;
    }
    return std::atanh(solve_two_point(domain, z, w, settings).xi);
}

cplx competitor_lambda(const AnalyticDisc& disc, const CVec& competitor_derivative) {
    const CVec d = disc.base_direction();
    const double dn = d.squaredNorm();
    if (dn == 0.0) throw PreconditionError("disc has zero derivative at 0");
    return d.dot(competitor_derivative) / dn;
}

ExtremalityReport extremality_probe(const ConvexDomain& domain, const AnalyticDisc& disc, int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionError("trials must be positive");
    const int n = disc.dimension();
    const CVec z = disc.base_point();
    const CVec d = disc.base_direction();
    if (d.norm() == 0.0) throw PreconditionError("disc has zero derivative at 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    constexpr int kDegree = 6;
    const CircleGrid fine(512);
    auto max_rho = [&](const Eigen::MatrixXcd& c, double s, const CircleGrid& grid) {
        Eigen::MatrixXcd scaled = s * c;
        scaled.col(0) = z;
        const Eigen::MatrixXcd b = AnalyticDisc(scaled, grid).boundary_values();
        double worst = -std::numeric_limits<double>::infinity();
        for (Eigen::Index j = 0; j < b.cols(); ++j) worst = std::max(worst, domain.rho(b.col(j)));
        return worst;
    };

    ExtremalityReport report;
    report.min_schwarz_gap = std::numeric_limits<double>::infinity();
    for (int trial = 0; report.accepted < trials && trial < 20 * trials; ++trial) {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, kDegree + 1);
        c.col(0) = z;
        double s = 1.0;
        if (trial % 4 == 0) {
            // Scaled copy phi(t tau).
            const double t = 0.05 + 0.9 * uniform(rng);
            c = disc.coeffs();
            for (Eigen::Index k = 1; k < c.cols(); ++k) c.col(k) *= std::pow(t, static_cast<double>(k));
        } else {
            const cplx lambda0(normal(rng), normal(rng));
            c.col(1) = lambda0 * d;
            for (int k = 2; k <= kDegree; ++k) {
                for (int m = 0; m < n; ++m) c(m, k) = cplx(normal(rng), normal(rng)) * (d.norm() / (k * k));
            }
            if (!(max_rho(c, 1e-9, fine) < 0.0)) {
                ++report.rejected;
                continue;
            }
            double lo = 0.0, hi = 1.0;
            while (max_rho(c, hi, fine) < 0.0) {
                lo = hi;
                hi *= 2.0;
            }
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (max_rho(c, mid, fine) < 0.0 ? lo : hi) = mid;
            }
            s = lo * (1.0 - 1e-6);
        }
        const double worst = max_rho(c, s, fine);
        if (!(worst < 0.0)) {
            ++report.rejected;
            continue;
        }
        ++report.accepted;
        Eigen::MatrixXcd psi = s * c;
        psi.col(0) = z;
        const double lam = std::abs(competitor_lambda(disc, psi.col(1)));
        report.max_abs_lambda = std::max(report.max_abs_lambda, lam);

        if (domain.is_ball()) {
            const double R = domain.ball_radius();
            const double shrunk = std::sqrt(std::max(R * R + worst, 0.0));
            if (shrunk > (z - domain.ball_center()).norm()) {
                SolverSettings small;
                small.modes = 2;
                small.grid = CircleGrid(16);
                const AnalyticDisc best = ball_geodesic(domain.ball_center(), shrunk, z, d, small);
                const double bound = best.base_direction().norm() / d.norm();
                ++report.schwarz_checked;
                const double gap = bound - lam;
                report.min_schwarz_gap = std::min(report.min_schwarz_gap, gap);
                if (gap < -1e-12) ++report.schwarz_violations;
            }
        }
    }
    if (report.schwarz_checked == 0) report.min_schwarz_gap = 0.0;
    return report;
}

}  // namespace geodisc
