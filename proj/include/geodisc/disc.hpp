#pragma once

#include <Eigen/Dense>
#include <optional>

#include "geodisc/circle.hpp"
#include "geodisc/domains.hpp"

namespace geodisc {

/// Truncated power series phi(tau) = sum_{k=0}^{M} a_k tau^k of a holomorphic
/// map from the closed unit disc into C^n. Column k of coeffs() is a_k.
class AnalyticDisc {
public:
    AnalyticDisc(Eigen::MatrixXcd coeffs, CircleGrid grid, std::optional<ConvexDomain> domain = std::nullopt);

    int dimension() const { return static_cast<int>(coeffs_.rows()); }
    int modes() const { return static_cast<int>(coeffs_.cols()) - 1; }
    const Eigen::MatrixXcd& coeffs() const { return coeffs_; }
    const CircleGrid& grid() const { return grid_; }
    const std::optional<ConvexDomain>& domain() const { return domain_; }
    void attach_to(ConvexDomain domain) { domain_ = std::move(domain); }

    CVec operator()(cplx tau) const;
    CVec derivative(cplx tau) const;
    CVec base_point() const { return coeffs_.col(0); }
    CVec base_direction() const { return modes() >= 1 ? CVec(coeffs_.col(1)) : CVec::Zero(dimension()); }

    /// phi at the grid nodes, one column per node.
    Eigen::MatrixXcd boundary_values() const;
    /// phi at the nodes of another grid.
    Eigen::MatrixXcd boundary_values(const CircleGrid& grid) const;

    /// max_j |rho(phi(e^{i theta_j}))| against the attached domain.
    double attachment_residual() const;
    double attachment_residual(const ConvexDomain& domain) const;
    /// Smallest distance between images of distinct grid nodes.
    double min_node_separation() const;

private:
    Eigen::MatrixXcd coeffs_;
    CircleGrid grid_;
    std::optional<ConvexDomain> domain_;
};

/// Disc automorphism m(tau) = (w tau + a) / (1 + conj(a) w tau), |a| < 1, |w| = 1.
struct MoebiusMap {
    cplx a{0.0, 0.0};
    cplx rotation{1.0, 0.0};

    cplx operator()(cplx tau) const;
    cplx derivative(cplx tau) const;
    MoebiusMap inverse() const;
    void validate() const;
};

/// phi o m, recomputed by sampling on the grid and re-analysis; keeps at least
/// grid / 4 modes.
AnalyticDisc reparametrize(const AnalyticDisc& disc, const MoebiusMap& map);

struct SolverSettings {
    int modes = 64;
    CircleGrid grid{256};
    double newton_tol = 1e-10;
    int max_iters = 40;
    int continuation_steps = 4;
    /// Use closed-form geodesics when the domain is a ball (disc families,
    /// tangency tracing, Lempert map). The Newton solver ignores this flag.
    bool closed_form_balls = true;

    void validate() const;
};

/// Parameter tau in the closed disc whose image is closest to point.
struct Location {
    cplx tau;
    double distance;
};
Location locate(const AnalyticDisc& disc, const CVec& point);

/// min over sampled tau in the closed disc minus {0} of rho(phi(tau)) / |tau|^2,
/// refined by local minimisation. A positive value certifies second order
/// contact at tau = 0 at sample resolution.
double tangency_order_constant(const ConvexDomain& rho2, const AnalyticDisc& disc);

}  // namespace geodisc
