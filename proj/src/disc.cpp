#include "geodisc/disc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "fft.hpp"
#include "geodisc/errors.hpp"

namespace geodisc {

namespace {
constexpr double kPi = std::numbers::pi;
}

AnalyticDisc::AnalyticDisc(Eigen::MatrixXcd coeffs, CircleGrid grid, std::optional<ConvexDomain> domain)
    : coeffs_(std::move(coeffs)), grid_(grid), domain_(std::move(domain)) {
    if (coeffs_.cols() < 1 || coeffs_.rows() < 1) throw PreconditionError("empty disc coefficients");
    if (domain_ && domain_->dimension() != dimension()) {
        throw PreconditionError("disc and domain dimensions differ");
    }
}

CVec AnalyticDisc::operator()(cplx tau) const {
    CVec acc = coeffs_.col(modes());
    for (int k = modes() - 1; k >= 0; --k) acc = acc * tau + coeffs_.col(k);
    return acc;
}

CVec AnalyticDisc::derivative(cplx tau) const {
    if (modes() == 0) return CVec::Zero(dimension());
    CVec acc = static_cast<double>(modes()) * coeffs_.col(modes());
    for (int k = modes() - 1; k >= 1; --k) acc = acc * tau + static_cast<double>(k) * coeffs_.col(k);
    return acc;
}

Eigen::MatrixXcd AnalyticDisc::boundary_values() const { return boundary_values(grid_); }

Eigen::MatrixXcd AnalyticDisc::boundary_values(const CircleGrid& grid) const {
    const int n = grid.size();
    Eigen::MatrixXcd out(dimension(), n);
    std::vector<cplx> spec(static_cast<std::size_t>(n)), vals(static_cast<std::size_t>(n));
    for (int m = 0; m < dimension(); ++m) {
        std::fill(spec.begin(), spec.end(), cplx{0.0, 0.0});
        // Modes beyond the grid band fold back (aliasing) exactly as sampling would.
        for (int k = 0; k <= modes(); ++k) spec[static_cast<std::size_t>(k % n)] += coeffs_(m, k);
        detail::fft_inverse(spec, vals);
        for (int j = 0; j < n; ++j) out(m, j) = vals[static_cast<std::size_t>(j)];
    }
    return out;
}

double AnalyticDisc::attachment_residual() const {
    if (!domain_) throw PreconditionError("disc is not attached to a domain");
    return attachment_residual(*domain_);
}

double AnalyticDisc::attachment_residual(const ConvexDomain& domain) const {
    const Eigen::MatrixXcd b = boundary_values();
    double worst = 0.0;
    for (Eigen::Index j = 0; j < b.cols(); ++j) worst = std::max(worst, std::abs(domain.rho(b.col(j))));
    return worst;
}

double AnalyticDisc::min_node_separation() const {
    const Eigen::MatrixXcd b = boundary_values();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        for (Eigen::Index l = j + 1; l < b.cols(); ++l) best = std::min(best, (b.col(j) - b.col(l)).norm());
    }
    return best;
}

cplx MoebiusMap::operator()(cplx tau) const {
    const cplx wt = rotation * tau;
    return (wt + a) / (1.0 + std::conj(a) * wt);
}

cplx MoebiusMap::derivative(cplx tau) const {
    const cplx wt = rotation * tau;
    const cplx den = 1.0 + std::conj(a) * wt;
    return rotation * (1.0 - std::norm(a)) / (den * den);
}

MoebiusMap MoebiusMap::inverse() const {
    // m^{-1}(s) = conj(w) (s - a) / (1 - conj(a) s)
    return {-std::conj(rotation) * a, std::conj(rotation)};
}

void MoebiusMap::validate() const {
    if (std::abs(a) >= 1.0) throw PreconditionError("Moebius map requires |a| < 1");
    if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw PreconditionError("Moebius rotation must be unimodular");
}

AnalyticDisc reparametrize(const AnalyticDisc& disc, const MoebiusMap& map) {
    map.validate();
    const CircleGrid& grid = disc.grid();
    const int n = grid.size();
    const int modes = std::max(disc.modes(), n / 4);
    Eigen::MatrixXcd coeffs(disc.dimension(), modes + 1);
    std::vector<cplx> samples(static_cast<std::size_t>(n));
    std::vector<CVec> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) values.push_back(disc(map(grid.node(j))));
    for (int m = 0; m < disc.dimension(); ++m) {
        for (int j = 0; j < n; ++j) samples[static_cast<std::size_t>(j)] = values[static_cast<std::size_t>(j)](m);
        const TrigSeries s = analyze(grid, samples);
        for (int k = 0; k <= modes; ++k) coeffs(m, k) = s.coeff(k);
    }
    return AnalyticDisc(std::move(coeffs), grid, disc.domain());
}

void SolverSettings::validate() const {
    if (newton_tol < 1e-12) throw PreconditionError("newton_tol must be >= 1e-12");
    if (modes < 2) throw PreconditionError("at least two modes are required");
    if (modes > grid.size() / 4) throw PreconditionError("modes must not exceed grid size / 4");
    if (max_iters < 1) throw PreconditionError("max_iters must be positive");
    if (continuation_steps < 1) throw PreconditionError("continuation_steps must be positive");
}

Location locate(const AnalyticDisc& disc, const CVec& point) {
    cplx best_tau{0.0, 0.0};
    double best = (disc(best_tau) - point).norm();
    for (int i = 1; i <= 16; ++i) {
        const double r = i / 16.0;
        for (int j = 0; j < 64; ++j) {
            const cplx tau = std::polar(r, 2.0 * kPi * j / 64.0);
            const double d = (disc(tau) - point).norm();
            if (d < best) {
                best = d;
                best_tau = tau;
            }
        }
    }
    cplx tau = best_tau;
    for (int it = 0; it < 60; ++it) {
        const CVec diff = point - disc(tau);
        const CVec dphi = disc.derivative(tau);
        const double dn = dphi.squaredNorm();
        if (dn == 0.0) break;
        const cplx step = dphi.dot(diff) / dn;  // <diff, dphi> Hermitian, conj on dphi
        cplx next = tau + step;
        if (std::abs(next) > 1.0) next /= std::abs(next);
        const double d = (disc(next) - point).norm();
        if (d >= best && std::abs(step) < 1e-15) break;
        if (d <= best) {
            best = d;
            tau = next;
        } else {
            break;
        }
        if (std::abs(step) < 1e-15) break;
    }
    return {tau, best};
}

namespace {

// Nelder-Mead on a 2-vector; f is expected to clamp its own domain.
template <class F>
std::pair<Eigen::Vector2d, double> nelder_mead(F&& f, Eigen::Vector2d start, double scale, int max_iter = 400) {
    std::array<Eigen::Vector2d, 3> p{start, start + Eigen::Vector2d(scale, 0.0), start + Eigen::Vector2d(0.0, scale)};
    std::array<double, 3> v{f(p[0]), f(p[1]), f(p[2])};
    for (int it = 0; it < max_iter; ++it) {
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
        const int lo = idx[0], mid = idx[1], hi = idx[2];
        if (std::abs(v[hi] - v[lo]) < 1e-15 && (p[hi] - p[lo]).norm() < 1e-12) break;
        const Eigen::Vector2d centroid = 0.5 * (p[lo] + p[mid]);
        const Eigen::Vector2d xr = centroid + (centroid - p[hi]);
        const double fr = f(xr);
        if (fr < v[lo]) {
            const Eigen::Vector2d xe = centroid + 2.0 * (centroid - p[hi]);
            const double fe = f(xe);
            if (fe < fr) { p[hi] = xe; v[hi] = fe; } else { p[hi] = xr; v[hi] = fr; }
        } else if (fr < v[mid]) {
            p[hi] = xr;
            v[hi] = fr;
        } else {
            const Eigen::Vector2d xc = centroid + 0.5 * (p[hi] - centroid);
            const double fc = f(xc);
            if (fc < v[hi]) {
                p[hi] = xc;
                v[hi] = fc;
            } else {
                for (int k : {mid, hi}) {
                    p[k] = p[lo] + 0.5 * (p[k] - p[lo]);
                    v[k] = f(p[k]);
                }
            }
        }
    }
    int best = 0;
    for (int k = 1; k < 3; ++k) if (v[k] < v[best]) best = k;
    return {p[best], v[best]};
}

}  // namespace

double tangency_order_constant(const ConvexDomain& rho2, const AnalyticDisc& disc) {
    constexpr double kMinRadius = 1e-3;
    auto ratio = [&](double r, double theta) {
        const cplx tau = std::polar(r, theta);
        return rho2.rho(disc(tau)) / (r * r);
    };
    auto objective = [&](const Eigen::Vector2d& x) {
        const double r = std::clamp(x(0), kMinRadius, 1.0);
        return ratio(r, x(1));
    };
    double best = std::numeric_limits<double>::infinity();
    Eigen::Vector2d best_x(1.0, 0.0);
    constexpr int kRadii = 24;
    constexpr int kAngles = 96;
    for (int i = 0; i <= kRadii; ++i) {
        const double r = kMinRadius + (1.0 - kMinRadius) * i / kRadii;
        for (int j = 0; j < kAngles; ++j) {
            const double theta = 2.0 * kPi * j / kAngles;
            const double v = ratio(r, theta);
            if (v < best) {
                best = v;
                best_x = {r, theta};
            }
        }
    }
    const auto [x, v] = nelder_mead(objective, best_x, 0.02);
    return std::min(best, v);
}

}  // namespace geodisc
