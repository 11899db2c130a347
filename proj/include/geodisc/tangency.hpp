#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "geodisc/stationary.hpp"

namespace geodisc {

/// A geodesic of D1 centred at a point w of the inner boundary, complex tangent
/// there, and passing through the base point at z_parameter.
struct TangencyPoint {
    CVec w;
    AnalyticDisc disc;
    TrigSeries multiplier;
    /// Tangency happens at the disc centre.
    cplx touch_parameter{0.0, 0.0};
    /// phi(z_parameter) = base point.
    cplx z_parameter{0.0, 0.0};
    /// min rho2(phi(tau)) / |tau|^2 over the closed disc.
    double tangency_constant = 0.0;
    /// Max of the residual |rho2(w)| + |phi(z_parameter) - z_o|.
    double residual = 0.0;
    /// Direction field selector in dimension >= 3 (projected onto T^C_w).
    std::optional<CVec> reference_direction;

    StationarySolution solution() const { return {disc, multiplier, {}}; }
};

struct TangencyLocus {
    CVec base_point;
    /// Closed polyline for n = 2: the last point connects back to the first.
    std::vector<TangencyPoint> points;
    double closure_gap = 0.0;
    /// Nominal step length in w.
    double step = 0.0;
    bool closed = false;
    /// 1 when every meridian seed lies on the traced curve.
    int component_count = 0;
};

/// (rho2(w), Re <d rho2(w), d>, Im <d rho2(w), d>) with d the unit tangent of the
/// disc at w and <a, b> = sum_j a_j b_j. The disc must pass through z_o and w.
std::array<double, 3> tangency_residual(const ConvexDomain& rho2, const CVec& z_o, const CVec& w,
                                        const AnalyticDisc& disc);

/// Unit vector of T^C_w for the n = 2 field (-d_2 rho, d_1 rho), or the
/// normalised projection of reference onto T^C_w.
CVec complex_tangent_direction(const ConvexDomain& rho2, const CVec& w,
                               const std::optional<CVec>& reference = std::nullopt);

/// Tangent disc found by bisection on a meridian of directions at z_o: from the
/// direction of the interior point of D2 towards e^{i meridian} times a
/// Hermitian-orthogonal unit vector. Refined by solve_tangent_disc.
TangencyPoint seed_tangent_point(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                                 const SolverSettings& settings = {}, double meridian = 0.0);

/// Newton iteration on (w, tau): rho2(w) = 0 and phi_{w, v(w)}(tau) = z_o with
/// v(w) in T^C_w. Throws HypothesisViolation for a non-positive tangency
/// constant and SolverDivergence when the iteration stalls.
TangencyPoint solve_tangent_disc(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                                 const CVec& seed_w, const SolverSettings& settings = {},
                                 const std::optional<CVec>& reference_direction = std::nullopt);

/// Pseudo-arclength trace of the tangency curve (n = 2) with about `steps`
/// samples; for n >= 3, `steps` meridian seeds of a local patch. The component
/// check re-seeds on two more meridians.
TangencyLocus trace_locus(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o, int steps,
                          const SolverSettings& settings = {}, bool check_components = true);

/// Largest distance between two samples.
double locus_diameter(const TangencyLocus& locus);

/// Re-solved tangent discs at `count` points equally spaced in arclength along
/// the closed polyline.
std::vector<TangencyPoint> resample_locus(const ConvexDomain& domain1, const ConvexDomain& domain2,
                                          const TangencyLocus& locus, int count, const SolverSettings& settings = {});

/// Inner domain in Lempert coordinates centred at z_o: rho2 o Psi^{-1}.
ConvexDomain lempert_pullback(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                              const SolverSettings& settings = {});

/// det of the 3x3 minor (columns zbar_1, z_2, zbar_2) of the Jacobian of
/// (rho, h, conj h), h(z) = sum_j d_j rho(z) z_j, after the unitary change of
/// coordinates with d rho(z) = |d rho| e_1 and z = c e_2 and rescaling rho by
/// 1/|d rho|. Negative at regular points of the locus.
double jacobian_certificate(const ConvexDomain& rho_psi, const CVec& point);

/// Projectivised residues [phi*(0)] of the geodesics of D1 centred at z_o in
/// `count` complex tangent directions of the inner boundary.
std::vector<CVec> pi_set_sample(const ConvexDomain& domain1, const ConvexDomain& domain2, const CVec& z_o,
                                int count, const SolverSettings& settings = {});

/// CSV rows Re w_1, Im w_1, ..., tangency_constant.
void write_locus_csv(std::ostream& out, const TangencyLocus& locus);

}  // namespace geodisc
