#include "geodisc/lifts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "geodisc/errors.hpp"

namespace geodisc {

namespace {

// Laurent data of tau * phi*(tau) sampled on the grid: mode 0 is the residue,
// mode k+1 is b_k. Returns the largest negative tail over the components.
double split_laurent(const CircleGrid& grid, const Eigen::MatrixXcd& regular, CVec& pole, Eigen::MatrixXcd& holo) {
    const int n = static_cast<int>(regular.rows());
    const int count = grid.size() / 2 - 1;
    pole.resize(n);
    holo.resize(n, count);
    std::vector<cplx> row(static_cast<std::size_t>(grid.size()));
    double tail = 0.0;
    for (int m = 0; m < n; ++m) {
        for (int j = 0; j < grid.size(); ++j) row[static_cast<std::size_t>(j)] = regular(m, j);
        const TrigSeries s = analyze(grid, row);
        pole(m) = s.coeff(0);
        for (int k = 0; k < count; ++k) holo(m, k) = s.coeff(k + 1);
        tail = std::max(tail, negative_tail_norm(s));
    }
    return tail;
}

double max_abs_entry(const Eigen::MatrixXcd& m) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).norm());
    return best;
}

}  // namespace

CVec ConormalLift::regularized(cplx tau) const {
    CVec acc = CVec::Zero(dimension());
    for (Eigen::Index k = holo_coeffs.cols() - 1; k >= 0; --k) acc = acc * tau + holo_coeffs.col(k);
    return acc * tau + pole_coeff;
}

CVec ConormalLift::operator()(cplx tau) const {
    if (tau == cplx{0.0, 0.0}) throw PreconditionError("lift has a pole at 0; use residue()");
    return regularized(tau) / tau;
}

CoordinateRotation unitary_with_first_row(const CVec& row) {
    const int n = static_cast<int>(row.size());
    const double len = row.norm();
    if (len == 0.0) throw PreconditionError("rotation row must be nonzero");
    // Gram-Schmidt on (row, e_1, ..., e_n) in conjugated form: rows of U are
    // orthonormal iff the columns of U^* are.
    Eigen::MatrixXcd cols(n, n);
    cols.col(0) = row.conjugate() / len;
    int filled = 1;
    for (int e = 0; e < n && filled < n; ++e) {
        CVec cand = CVec::Zero(n);
        cand(e) = 1.0;
        for (int j = 0; j < filled; ++j) cand -= cols.col(j).dot(cand) * cols.col(j);
        const double nn = cand.norm();
        if (nn < 1e-8) continue;
        cols.col(filled++) = cand / nn;
    }
    return cols.adjoint();
}

ConormalLift lift_from_disc(const ConvexDomain& domain, const AnalyticDisc& disc, const LiftOptions& options) {
    if (disc.dimension() != domain.dimension()) throw PreconditionError("disc and domain dimensions differ");
    const CircleGrid& grid = disc.grid();
    const int N = grid.size();
    const int n = disc.dimension();
    if (disc.base_direction().norm() == 0.0) throw PreconditionError("disc is constant");
    const double residual = disc.attachment_residual(domain);
    if (residual > options.attachment_tol) {
        throw PreconditionError("disc is not attached to the boundary (residual " + std::to_string(residual) + ")");
    }
    const Eigen::MatrixXcd boundary = disc.boundary_values();
    double diameter = 0.0;
    for (int j = 0; j < N; ++j) diameter = std::max(diameter, (boundary.col(j) - boundary.col(0)).norm());
    if (disc.min_node_separation() <= 1e-10 * std::max(diameter, 1.0)) {
        throw PreconditionError("disc is not injective on the grid");
    }

    Eigen::MatrixXcd grads(n, N);
    for (int j = 0; j < N; ++j) grads.col(j) = domain.grad(boundary.col(j));

    // Candidate functionals e with d_{z1'} rho = sum_j d_j rho * e_j.
    std::vector<CVec> candidates;
    if (options.rotation) {
        if (options.rotation->rows() != n || options.rotation->cols() != n) {
            throw PreconditionError("rotation has the wrong size");
        }
        candidates.push_back(options.rotation->row(0).adjoint());
    } else {
        candidates.push_back(grads.col(0).conjugate() / grads.col(0).norm());
        const CVec dir = disc.base_direction();
        candidates.push_back(dir / dir.norm());
        for (int e = 0; e < n; ++e) {
            CVec axis = CVec::Zero(n);
            axis(e) = 1.0;
            candidates.push_back(axis);
        }
    }

    std::vector<cplx> scalar(static_cast<std::size_t>(N));
    double best_quality = -1.0;
    std::vector<cplx> chosen;
    std::string failure = "no admissible coordinate rotation";
    int failed_winding = 0;
    for (const CVec& e : candidates) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int j = 0; j < N; ++j) {
            scalar[static_cast<std::size_t>(j)] = grid.node(j) * (grads.col(j).transpose() * e).value();
            const double a = std::abs(scalar[static_cast<std::size_t>(j)]);
            lo = std::min(lo, a);
            hi = std::max(hi, a);
        }
        if (!(lo > 1e-10 * hi)) {
            failure = "d_{z1} rho vanishes on the boundary of the disc";
            continue;
        }
        int w = 0;
        try {
            w = winding_number(scalar);
        } catch (const PreconditionError& ex) {
            failure = ex.what();
            continue;
        }
        if (w != 0) {
            failed_winding = w;
            failure = "tau * d_{z1} rho(phi) winds around 0";
            continue;
        }
        const double quality = lo / hi;
        if (quality > best_quality) {
            best_quality = quality;
            chosen = scalar;
        }
    }
    if (chosen.empty()) {
        if (failed_winding != 0) throw WindingError(failure, failed_winding);
        throw PreconditionError(failure);
    }

    const TrigSeries f = log_lift(analyze(grid, chosen));
    const std::vector<cplx> f_vals = synthesize(f);
    std::vector<double> im_f(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) im_f[static_cast<std::size_t>(j)] = f_vals[static_cast<std::size_t>(j)].imag();
    const TrigSeries u = analyze_real(grid, im_f);
    TrigSeries G = cplx{-1.0, 0.0} * hilbert_conjugate(u) + cplx{0.0, 1.0} * u;
    // Real constant making g(1) = 1.
    G.set_coeff(0, G.coeff(0) + f_vals[0].real());
    const std::vector<cplx> G_vals = synthesize(G);

    ConormalLift lift{CVec(), Eigen::MatrixXcd(), disc, {}, 0.0, 0.0};
    lift.multiplier.resize(static_cast<std::size_t>(N));
    double imag = 0.0;
    for (int j = 0; j < N; ++j) {
        const auto js = static_cast<std::size_t>(j);
        lift.multiplier[js] = std::exp(G_vals[js].real() - f_vals[js].real());
        const cplx ratio = std::exp(G_vals[js]) / chosen[js];
        imag = std::max(imag, std::abs(ratio.imag()) / std::abs(ratio));
    }
    lift.multiplier_imag = imag;
    const double g0 = lift.multiplier[0];
    for (double& g : lift.multiplier) g /= g0;

    const double scale = 1.0 / grads.col(0).norm();
    Eigen::MatrixXcd regular(n, N);
    for (int j = 0; j < N; ++j) regular.col(j) = (scale * lift.multiplier[static_cast<std::size_t>(j)] * grid.node(j)) * grads.col(j);
    const double tail = split_laurent(grid, regular, lift.pole_coeff, lift.holo_coeffs);
    lift.negative_tail = tail;
    if (tail > options.stationarity_tol * std::max(max_abs_entry(regular), 1e-300)) {
        throw PreconditionError("disc is not stationary: lift has a negative tail of " + std::to_string(tail));
    }
    lift.disc.attach_to(domain);
    return lift;
}

cplx pole_mover(cplx tau_o, cplx tau) {
    if (tau == cplx{0.0, 0.0}) throw PreconditionError("pole mover is singular at 0");
    return (tau - tau_o) * (1.0 - std::conj(tau_o) * tau) / tau;
}

ConormalLift move_pole(const ConormalLift& lift, cplx tau_o) {
    if (std::abs(tau_o) >= 1.0) throw PreconditionError("pole target must lie in the open disc");
    if (tau_o == cplx{0.0, 0.0}) return lift;
    const MoebiusMap m{-tau_o, cplx{1.0, 0.0}};
    const CircleGrid& grid = lift.disc.grid();
    const int N = grid.size();
    const int n = lift.dimension();
    // tau nu(tau) phi*(m(tau)) is holomorphic; m maps the circle to itself.
    Eigen::MatrixXcd regular(n, N);
    for (int j = 0; j < N; ++j) {
        const cplx t = grid.node(j);
        regular.col(j) = ((t - tau_o) * (1.0 - std::conj(tau_o) * t)) * lift(m(t));
    }
    const CVec at_one = regular.col(0);  // tau = 1
    const double norm1 = at_one.norm();
    if (norm1 == 0.0) throw PreconditionError("lift vanishes at tau = 1");
    regular /= norm1;

    ConormalLift out{CVec(), Eigen::MatrixXcd(), reparametrize(lift.disc, m), {}, lift.multiplier_imag, 0.0};
    out.negative_tail = split_laurent(grid, regular, out.pole_coeff, out.holo_coeffs);
    out.multiplier.resize(static_cast<std::size_t>(N));
    const Eigen::MatrixXcd boundary = out.disc.boundary_values();
    const std::optional<ConvexDomain>& domain = out.disc.domain();
    for (int j = 0; j < N; ++j) {
        const auto js = static_cast<std::size_t>(j);
        if (domain) {
            const CVec grad = domain->grad(boundary.col(j));
            const CVec value = regular.col(j) / grid.node(j);
            out.multiplier[js] = grad.dot(value).real() / grad.squaredNorm();
        } else {
            out.multiplier[js] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    if (domain) {
        const double g0 = out.multiplier[0];
        for (double& g : out.multiplier) g /= g0;
    }
    return out;
}

CVec projectivize(const CVec& covector) {
    double top = 0.0;
    for (Eigen::Index j = 0; j < covector.size(); ++j) top = std::max(top, std::abs(covector(j)));
    if (top == 0.0) throw PreconditionError("cannot projectivize the zero covector");
    Eigen::Index pick = 0;
    for (Eigen::Index j = 0; j < covector.size(); ++j) {
        if (std::abs(covector(j)) >= top - 1e-12) {
            pick = j;
            break;
        }
    }
    return covector / covector(pick);
}

CVec projectivize(const ConormalLift& lift, cplx tau) {
    if (std::abs(tau) > 1.0 + 1e-14) throw PreconditionError("projectivize requires |tau| <= 1");
    if (tau == cplx{0.0, 0.0}) return projectivize(lift.residue());
    return projectivize(lift(tau));
}

double boundary_conormality_residual(const ConvexDomain& domain, const AnalyticDisc& disc, const ConormalLift& lift) {
    const CircleGrid& grid = disc.grid();
    const Eigen::MatrixXcd boundary = disc.boundary_values();
    double worst = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        const CVec p = lift(grid.node(j));
        const double pn = p.norm();
        if (pn == 0.0) throw PreconditionError("lift vanishes on the circle");
        const CVec c = domain.grad(boundary.col(j));
        const double t = c.dot(p).real() / c.squaredNorm();
        worst = std::max(worst, (p - t * c).norm() / pn);
    }
    return worst;
}

double monotonicity_integral(const ConormalLift& first, const ConormalLift& second) {
    const CircleGrid& grid = first.disc.grid();
    const int N = grid.size();
    double acc = 0.0;
    for (int j = 0; j < N; ++j) {
        const cplx t = grid.node(j);
        const CVec dstar = first(t) - second(t);
        const CVec dphi = first.disc(t) - second.disc(t);
        acc += (dstar.transpose() * dphi).value().real();
    }
    return acc * 2.0 * std::numbers::pi / N;
}

}  // namespace geodisc
