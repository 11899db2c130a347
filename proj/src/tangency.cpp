#include "geodisc/tangency.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>

#include "geodisc/errors.hpp"
#include "geodisc/lempert.hpp"

namespace geodisc {

namespace {

constexpr double kPi = std::numbers::pi;

double solve_tolerance(const ConvexDomain& domain1, const SolverSettings& settings) {
    if (settings.closed_form_balls && domain1.is_ball()) return 1e-12;
    return std::max(1e-10, 20.0 * settings.newton_tol);
}

// Unit vector Hermitian-orthogonal to u, taken from the coordinate axes.
CVec orthogonal_unit(const CVec& u) {
    CVec best;
    double best_norm = -1.0;
    for (Eigen::Index e = 0; e < u.size(); ++e) {
        CVec cand = CVec::Zero(u.size());
        cand(e) = 1.0;
        cand -= u.dot(cand) * u;
        if (cand.norm() > best_norm + 1e-12) {
            best_norm = cand.norm();
            best = cand;
        }
    }
    return best / best.norm();
}

// min over the closed disc of rho2 o phi and its location.
std::pair<double, cplx> disc_minimum(const ConvexDomain& rho2, const AnalyticDisc& disc) {
    double best = std::numeric_limits<double>::infinity();
    cplx best_tau{0.0, 0.0};
    for (int i = 0; i <= 16; ++i) {
        const double r = i / 16.0;
        const int angles = i == 0 ? 1 : 64;
        for (int j = 0; j < angles; ++j) {
            const cplx tau = std::polar(r, 2.0 * kPi * j / angles);
            const double v = rho2.rho(disc(tau));
            if (v < best) {
                best = v;
                best_tau = tau;
            }
        }
    }
    auto clamp = [](cplx t) { return std::abs(t) > 1.0 ? t / std::abs(t) : t; };
    // Coordinate descent with shrinking steps.
    double h = 1.0 / 32.0;
    while (h > 1e-10) {
        bool moved = false;
        for (const cplx d : {cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}}) {
            const cplx t = clamp(best_tau + h * d);
            const double v = rho2.rho(disc(t));
            if (v < best) {
                best = v;
                best_tau = t;
                moved = true;
            }
        }
        if (!moved) h *= 0.5;
    }
    return {best, best_tau};
}

class TangentSystem {
public:
    TangentSystem(const ConvexDomain& d1, const ConvexDomain& d2, CVec z_o, const SolverSettings& s,
                  std::optional<CVec> reference)
        : d1_(d1), d2_(d2), z_o_(std::move(z_o)), s_(s), ref_(std::move(reference)),
          n_(d1.dimension()) {}

    int unknowns() const { return 2 * n_ + 2; }
    int equations() const { return 2 * n_ + 1; }

    static RVec pack(const CVec& w, cplx tau) {
        RVec x(w.size() * 2 + 2);
        x.head(w.size() * 2) = to_real(w);
        x(w.size() * 2) = tau.real();
        x(w.size() * 2 + 1) = tau.imag();
        return x;
    }
    CVec w_of(const RVec& x) const { return to_complex(x.head(2 * n_)); }
    cplx tau_of(const RVec& x) const { return {x(2 * n_), x(2 * n_ + 1)}; }

    StationarySolution disc_at(const CVec& w, const StationarySolution* warm) const {
        return geodesic_disc(d1_, w, complex_tangent_direction(d2_, w, ref_), s_, warm);
    }

    RVec residual(const RVec& x, const StationarySolution& sol) const {
        RVec F(equations());
        F(0) = d2_.rho(w_of(x));
        F.tail(2 * n_) = to_real(sol.disc(tau_of(x)) - z_o_);
        return F;
    }

    RMat jacobian(const RVec& x, const StationarySolution& sol, const RVec& F) const {
        RMat J(equations(), unknowns());
        const CVec w = w_of(x);
        const cplx tau = tau_of(x);
        const RVec grad_real = 2.0 * to_real(d2_.grad(w).conjugate());
        const double h = 1e-6;
        for (int a = 0; a < 2 * n_; ++a) {
            RVec xp = x;
            xp(a) += h;
            const StationarySolution sp = disc_at(w_of(xp), &sol);
            J(0, a) = grad_real(a);
            J.col(a).tail(2 * n_) = (to_real(sp.disc(tau) - z_o_) - F.tail(2 * n_)) / h;
        }
        const CVec dphi = sol.disc.derivative(tau);
        J(0, 2 * n_) = 0.0;
        J(0, 2 * n_ + 1) = 0.0;
        J.col(2 * n_).tail(2 * n_) = to_real(dphi);
        J.col(2 * n_ + 1).tail(2 * n_) = to_real(cplx{0.0, 1.0} * dphi);
        return J;
    }

    const std::optional<CVec>& reference() const { return ref_; }

private:
    const ConvexDomain& d1_;
    const ConvexDomain& d2_;
    CVec z_o_;
    SolverSettings s_;
    std::optional<CVec> ref_;
    int n_;
};

void check_base_point(const ConvexDomain& d1, const ConvexDomain& d2, const CVec& z_o) {
    if (d1.dimension() != d2.dimension() || z_o.size() != d1.dimension()) {
        throw PreconditionError("domain and point dimensions differ");
    }
    if (!(d1.rho(z_o) < -1e-8)) throw PreconditionError("base point must lie inside the outer domain");
    if (!(d2.rho(z_o) > 1e-8)) throw PreconditionError("base point must lie outside the closed inner domain");
}

TangencyPoint finish_point(const ConvexDomain& d2, const TangentSystem& sys, const RVec& x,
                           StationarySolution sol, double residual) {
    TangencyPoint p{sys.w_of(x), std::move(sol.disc), std::move(sol.multiplier), {0.0, 0.0}, sys.tau_of(x), 0.0,
                    residual, sys.reference()};
    p.tangency_constant = tangency_order_constant(d2, p.disc);
    if (!(p.tangency_constant > 0.0)) {
        throw HypothesisViolation("non-positive tangency constant " + std::to_string(p.tangency_constant) +
                                  ": inner domain is not strongly convex with respect to this disc");
    }
    return p;
}

}  // namespace

std::array<double, 3> tangency_residual(const ConvexDomain& rho2, const CVec& z_o, const CVec& w,
                                        const AnalyticDisc& disc) {
    const Location at_z = locate(disc, z_o);
    const Location at_w = locate(disc, w);
    const double scale = std::max(1.0, disc.base_point().norm());
    if (at_z.distance > 1e-6 * scale) throw PreconditionError("disc does not pass through the base point");
    if (at_w.distance > 1e-6 * scale) throw PreconditionError("disc does not pass through the candidate point");
    CVec d = disc.derivative(at_w.tau);
    if (d.norm() == 0.0) throw PreconditionError("disc is singular at the candidate point");
    d /= d.norm();
    const cplx pairing = (rho2.grad(w).transpose() * d).value();
    return {rho2.rho(w), pairing.real(), pairing.imag()};
}

CVec complex_tangent_direction(const ConvexDomain& rho2, const CVec& w, const std::optional<CVec>& reference) {
    const CVec c = rho2.grad(w);
    if (c.norm() == 0.0) throw PreconditionError("gradient vanishes");
    CVec d;
    if (c.size() == 2 && !reference) {
        d.resize(2);
        d << -c(1), c(0);
    } else {
        if (!reference) throw PreconditionError("a reference direction is required in dimension >= 3");
        const CVec& u = *reference;
        d = u - ((c.transpose() * u).value() / c.squaredNorm()) * CVec(c.conjugate());
    }
    const double len = d.norm();
    if (len < 1e-12) throw PreconditionError("reference direction is normal to the complex tangent space");
    return d / len;
}

TangencyPoint solve_tangent_disc(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                                 const CVec& seed_w, const SolverSettings& settings,
                                 const std::optional<CVec>& reference_direction) {
    settings.validate();
    check_base_point(domain1, domain2, z_o);
    if (domain1.dimension() >= 3 && !reference_direction) {
        throw PreconditionError("a reference direction is required in dimension >= 3");
    }
    const TangentSystem sys(domain1, domain2, z_o, settings, reference_direction);
    StationarySolution sol = sys.disc_at(seed_w, nullptr);
    RVec x = TangentSystem::pack(seed_w, locate(sol.disc, z_o).tau);
    RVec F = sys.residual(x, sol);
    const double tol = solve_tolerance(domain1, settings);
    for (int it = 0; it < 40 && F.norm() > tol; ++it) {
        const RMat J = sys.jacobian(x, sol, F);
        const RVec step = J.completeOrthogonalDecomposition().solve(-F);
        double lambda = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 12; ++ls, lambda *= 0.5) {
            const RVec xt = x + lambda * step;
            const CVec wt = sys.w_of(xt);
            if (!(domain1.rho(wt) < -1e-8) || std::abs(sys.tau_of(xt)) >= 1.0) continue;
            try {
                StationarySolution st = sys.disc_at(wt, &sol);
                const RVec Ft = sys.residual(xt, st);
                if (Ft.norm() < (1.0 - 1e-4 * lambda) * F.norm()) {
                    x = xt;
                    F = Ft;
                    sol = std::move(st);
                    accepted = true;
                    break;
                }
            } catch (const SolverDivergence&) {
            }
        }
        if (!accepted) break;
    }
    if (F.norm() > std::max(tol, 1e-8)) throw SolverDivergence("tangent disc iteration did not converge", F.norm());
    return finish_point(domain2, sys, x, std::move(sol), F.norm());
}

namespace {

ConvexDomain seeding_ball(const ConvexDomain& domain, const CVec& z_o) {
    if (domain.is_ball()) return domain;
    const CVec center = inscribed_ball(domain).center;
    double radius = 0.0;
    const std::vector<CVec> samples = boundary_samples(domain, 200);
    for (const CVec& b : samples) radius += (b - center).norm();
    radius /= double(samples.size());
    radius = std::max(radius, 1.01 * (z_o - center).norm());
    return make_ball(center, radius);
}

}  // namespace

TangencyPoint seed_tangent_point(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                                 const SolverSettings& settings, double meridian) {
    settings.validate();
    check_base_point(domain1, domain2, z_o);
    const CVec towards = domain2.interior_point() - z_o;
    const CVec u_in = towards / towards.norm();
    const CVec u_out = std::polar(1.0, meridian) * orthogonal_unit(u_in);
    auto direction = [&](double s) { return CVec(std::cos(s) * u_in + std::sin(s) * u_out); };
    // Geodesics centred at z_o in directions towards D2 are badly truncated
    // near the boundary, so the bracket is computed on a ball fitted to D1.
    const ConvexDomain proxy = seeding_ball(domain1, z_o);
    SolverSettings probe_settings = settings;
    probe_settings.closed_form_balls = true;
    auto probe = [&](double s) {
        StationarySolution sol = geodesic_disc(proxy, z_o, direction(s), probe_settings);
        return std::make_pair(disc_minimum(domain2, sol.disc), std::move(sol));
    };
    double lo = 0.0, hi = 0.5 * kPi;
    if (!(probe(lo).first.first < 0.0)) throw PreconditionError("geodesic towards the inner domain misses it");
    if (!(probe(hi).first.first > 0.0)) throw PreconditionError("could not bracket a tangent direction on this meridian");
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        (probe(mid).first.first < 0.0 ? lo : hi) = mid;
    }
    const auto [minimum, sol] = probe(hi);
    const CVec w = sol.disc(minimum.second);
    std::optional<CVec> reference;
    if (z_o.size() >= 3) {
        const CVec d = sol.disc.derivative(minimum.second);
        reference = d / d.norm();
    }
    return solve_tangent_disc(domain1, domain2, z_o, w, settings, reference);
}

TangencyLocus trace_locus(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o, int steps,
                          const SolverSettings& settings, bool check_components) {
    if (steps < 4) throw PreconditionError("at least four trace steps are required");
    settings.validate();
    check_base_point(domain1, domain2, z_o);
    TangencyLocus locus;
    locus.base_point = z_o;
    const int n = domain1.dimension();

    if (n >= 3) {
        for (int k = 0; k < steps; ++k) locus.points.push_back(seed_tangent_point(domain1, domain2, z_o, settings, 2.0 * kPi * k / steps));
        locus.component_count = 1;
        locus.closed = false;
        return locus;
    }

    const TangencyPoint start = seed_tangent_point(domain1, domain2, z_o, settings, 0.0);
    const TangencyPoint opposite = seed_tangent_point(domain1, domain2, z_o, settings, kPi);
    const double diameter = (start.w - opposite.w).norm();
    locus.points.push_back(start);
    if (diameter < 1e-12) {
        locus.closed = true;
        locus.component_count = 1;
        return locus;
    }
    const double nominal = kPi * diameter / steps;
    locus.step = nominal;

    const TangentSystem sys(domain1, domain2, z_o, settings, std::nullopt);
    const double tol = solve_tolerance(domain1, settings);
    RVec x = TangentSystem::pack(start.w, start.z_parameter);
    StationarySolution sol = start.solution();
    RVec F = sys.residual(x, sol);
    RMat J = sys.jacobian(x, sol, F);
    RVec tangent;
    {
        Eigen::JacobiSVD<RMat> svd(J, Eigen::ComputeFullV);
        tangent = svd.matrixV().col(J.cols() - 1);
        Eigen::Index pivot = 0;
        tangent.cwiseAbs().maxCoeff(&pivot);
        if (tangent(pivot) < 0.0) tangent = -tangent;
    }

    double h = nominal;
    double arclength = 0.0;
    const int max_points = 10 * steps + 100;
    while (static_cast<int>(locus.points.size()) < max_points) {
        const RVec predicted = x + (h / std::max(tangent.head(2 * n).norm(), 1e-3)) * tangent;
        RVec y = predicted;
        StationarySolution ys = sol;
        bool converged = false;
        int used = 0;
        try {
            ys = sys.disc_at(sys.w_of(y), &sol);
            RVec Fy = sys.residual(y, ys);
            for (int it = 0; it < 8; ++it) {
                used = it;
                if (Fy.norm() <= tol) {
                    converged = true;
                    break;
                }
                const RMat Jy = sys.jacobian(y, ys, Fy);
                RMat A(Jy.rows() + 1, Jy.cols());
                A.topRows(Jy.rows()) = Jy;
                A.bottomRows(1) = tangent.transpose();
                RVec rhs(Jy.rows() + 1);
                rhs.head(Jy.rows()) = -Fy;
                rhs(Jy.rows()) = -tangent.dot(y - predicted);
                const RVec dy = A.fullPivLu().solve(rhs);
                y += dy;
                if (!(domain1.rho(sys.w_of(y)) < -1e-8) || std::abs(sys.tau_of(y)) >= 1.0) break;
                ys = sys.disc_at(sys.w_of(y), &ys);
                Fy = sys.residual(y, ys);
                if (dy.norm() > 0.5 * h + 1e-12 && it > 0) break;
            }
            if (!converged && Fy.norm() <= tol) converged = true;
        } catch (const SolverDivergence&) {
            converged = false;
        }
        if (!converged) {
            h *= 0.5;
            if (h < 1e-6 * nominal) throw SolverDivergence("tangency trace step-size collapse", h);
            continue;
        }

        const RVec Fy = sys.residual(y, ys);
        const RMat Jy = sys.jacobian(y, ys, Fy);
        Eigen::JacobiSVD<RMat> svd(Jy, Eigen::ComputeFullV);
        RVec t_new = svd.matrixV().col(Jy.cols() - 1);
        if (t_new.dot(tangent) < 0.0) t_new = -t_new;

        TangencyPoint p = finish_point(domain2, sys, y, ys, Fy.norm());
        arclength += (p.w - locus.points.back().w).norm();
        const double gap = (p.w - start.w).norm();
        locus.points.push_back(std::move(p));
        x = y;
        sol = ys;
        tangent = t_new;
        if (used <= 3) h = std::min(1.3 * h, nominal);
        if (arclength > 0.5 * kPi * diameter && gap <= nominal) {
            locus.closed = true;
            locus.closure_gap = gap;
            // Drop a sample that duplicates the start.
            if (gap < 0.25 * nominal && locus.points.size() > 3) {
                locus.points.pop_back();
                locus.closure_gap = (locus.points.back().w - start.w).norm();
            }
            break;
        }
    }
    if (!locus.closed) throw SolverDivergence("tangency trace did not close", locus.closure_gap);

    // Meridian seeds must lie on the traced curve for a single component.
    locus.component_count = 1;
    if (!check_components) return locus;
    for (double meridian : {0.5 * kPi, 1.5 * kPi}) {
        const TangencyPoint seed = seed_tangent_point(domain1, domain2, z_o, settings, meridian);
        double best = std::numeric_limits<double>::infinity();
        const std::size_t m = locus.points.size();
        for (std::size_t i = 0; i < m; ++i) {
            const CVec& a = locus.points[i].w;
            const CVec& b = locus.points[(i + 1) % m].w;
            const CVec ab = b - a;
            const double t = std::clamp(ab.dot(seed.w - a).real() / std::max(ab.squaredNorm(), 1e-300), 0.0, 1.0);
            best = std::min(best, (a + t * ab - seed.w).norm());
        }
        if (best > nominal) locus.component_count = 2;
    }
    return locus;
}

double locus_diameter(const TangencyLocus& locus) {
    double best = 0.0;
    for (std::size_t i = 0; i < locus.points.size(); ++i) {
        for (std::size_t j = i + 1; j < locus.points.size(); ++j) {
            best = std::max(best, (locus.points[i].w - locus.points[j].w).norm());
        }
    }
    return best;
}

std::vector<TangencyPoint> resample_locus(const ConvexDomain& domain1, const ConvexDomain& domain2,
                                          const TangencyLocus& locus, int count, const SolverSettings& settings) {
    if (count < 1) throw PreconditionError("count must be positive");
    const std::size_t m = locus.points.size();
    if (m == 0) throw PreconditionError("empty locus");
    std::vector<double> cumulative(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t next = locus.closed ? (i + 1) % m : std::min(i + 1, m - 1);
        cumulative[i + 1] = cumulative[i] + (locus.points[next].w - locus.points[i].w).norm();
    }
    const double total = cumulative[m];
    std::vector<TangencyPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double s = total * k / count;
        std::size_t i = 0;
        while (i + 1 < m && cumulative[i + 1] < s) ++i;
        const std::size_t next = locus.closed ? (i + 1) % m : std::min(i + 1, m - 1);
        const double seg = cumulative[i + 1] - cumulative[i];
        const double t = seg > 0.0 ? (s - cumulative[i]) / seg : 0.0;
        const CVec seed = (1.0 - t) * locus.points[i].w + t * locus.points[next].w;
        if (t == 0.0) {
            out.push_back(locus.points[i]);
        } else {
            out.push_back(solve_tangent_disc(domain1, domain2, locus.base_point, seed, settings,
                                             locus.points[i].reference_direction));
        }
    }
    return out;
}

ConvexDomain lempert_pullback(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                              const SolverSettings& settings) {
    const CVec interior = psi(domain1, z_o, domain2.interior_point(), settings).psi_value;
    const ConvexDomain d1 = domain1;
    return make_pullback(
        domain2, [d1, z_o, settings](const CVec& u) { return psi_inverse(d1, z_o, u, settings); }, interior);
}

double jacobian_certificate(const ConvexDomain& rho_psi, const CVec& point) {
    const int n = rho_psi.dimension();
    const CVec grad = rho_psi.grad(point);
    const double gn = grad.norm();
    if (gn < 1e-14) throw PreconditionError("gradient vanishes: cannot normalise coordinates");
    // Frame rows f_k with z' = conj(F) z; d'_k rho = sum_j d_j rho f_kj.
    Eigen::MatrixXcd frame(n, n);
    frame.row(0) = grad.conjugate().transpose() / gn;
    CVec e2 = point - frame.row(0).transpose().dot(point) * frame.row(0).transpose();
    const double c = e2.norm();
    if (c < 1e-14) return 0.0;
    frame.row(1) = e2.transpose() / c;
    int filled = 2;
    for (int e = 0; e < n && filled < n; ++e) {
        CVec cand = CVec::Zero(n);
        cand(e) = 1.0;
        for (int j = 0; j < filled; ++j) cand -= frame.row(j).transpose().dot(cand) * frame.row(j).transpose();
        if (cand.norm() < 1e-8) continue;
        frame.row(filled++) = cand.transpose() / cand.norm();
    }
    const ComplexHessian h = complex_hessian(rho_psi.hess(point));
    // Second derivatives in the new coordinates, rho rescaled by 1 / |d rho|.
    const Eigen::MatrixXcd holo = frame * h.holo * frame.transpose() / gn;
    const Eigen::MatrixXcd mixed = frame * h.mixed * frame.adjoint() / gn;
    const CVec dprime = frame * grad / gn;  // (1, ~0, ...)
    const cplx zc = c;                      // z' = (0, c, 0, ...)

    // Rows (rho, h, conj h), columns (zbar_1, z_2, zbar_2).
    Eigen::Matrix3cd A;
    A(0, 0) = std::conj(dprime(0));
    A(0, 1) = dprime(1);
    A(0, 2) = std::conj(dprime(1));
    A(1, 0) = zc * mixed(1, 0);
    A(1, 1) = dprime(1) + zc * holo(1, 1);
    A(1, 2) = zc * mixed(1, 1);
    A(2, 0) = std::conj(dprime(0)) + std::conj(zc * holo(1, 0));
    A(2, 1) = std::conj(zc * mixed(1, 1));
    A(2, 2) = std::conj(dprime(1) + zc * holo(1, 1));
    return A.determinant().real();
}

std::vector<CVec> pi_set_sample(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                                int count, const SolverSettings& settings) {
    if (count < 1) throw PreconditionError("count must be positive");
    if (std::abs(domain2.rho(z_o)) > 1e-8) throw PreconditionError("point must lie on the inner boundary");
    const int n = domain1.dimension();
    const CVec c = domain2.grad(z_o);
    // Orthonormal basis of T^C = {d : sum_j c_j d_j = 0} = conj(c)^perp.
    const CVec normal = CVec(c.conjugate()) / c.norm();
    std::vector<CVec> basis;
    for (int e = 0; e < n && static_cast<int>(basis.size()) < n - 1; ++e) {
        CVec cand = CVec::Zero(n);
        cand(e) = 1.0;
        cand -= normal.dot(cand) * normal;
        for (const CVec& b : basis) cand -= b.dot(cand) * b;
        if (cand.norm() < 1e-8) continue;
        basis.push_back(cand / cand.norm());
    }
    std::vector<CVec> out;
    out.reserve(static_cast<std::size_t>(count));
    LiftOptions opts;
    opts.attachment_tol = std::max(1e-8, 10.0 * settings.newton_tol);
    for (int k = 0; k < count; ++k) {
        CVec v;
        const double phase = 2.0 * kPi * k / count;
        if (n == 2) {
            v = std::polar(1.0, phase) * basis[0];
        } else {
            // Golden-angle spread over the directions spanned by the first two basis vectors.
            const double s = 0.5 * kPi * (k + 0.5) / count;
            const double beta = k * kPi * (3.0 - std::sqrt(5.0));
            v = std::cos(s) * basis[0] + std::sin(s) * std::polar(1.0, beta) * basis[1];
        }
        const StationarySolution sol = geodesic_disc(domain1, z_o, v, settings);
        const ConormalLift lift = lift_from_disc(domain1, sol.disc, opts);
        out.push_back(projectivize(lift, cplx{0.0, 0.0}));
    }
    return out;
}

void write_locus_csv(std::ostream& out, const TangencyLocus& locus) {
    if (locus.points.empty()) return;
    const Eigen::Index n = locus.points.front().w.size();
    for (Eigen::Index j = 0; j < n; ++j) out << "re_w" << j + 1 << ",im_w" << j + 1 << ",";
    out << "tangency_constant\n";
    out << std::setprecision(17);
    for (const TangencyPoint& p : locus.points) {
        for (Eigen::Index j = 0; j < n; ++j) out << p.w(j).real() << "," << p.w(j).imag() << ",";
        out << p.tangency_constant << "\n";
    }
}

}  // namespace geodisc
