#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "geodisc/disc.hpp"

namespace geodisc {

/// Meromorphic covector field along a disc with one simple pole at 0:
///   phi*(tau) = pole_coeff / tau + sum_k holo_coeffs.col(k) tau^k.
/// On the circle phi* is a positive multiple of the (1,0)-gradient of rho.
struct ConormalLift {
    CVec pole_coeff;
    Eigen::MatrixXcd holo_coeffs;
    AnalyticDisc disc;

    /// Real boundary multiplier g at the grid nodes, normalised by g(1) = 1,
    /// so that phi* = g * d rho(phi) / |d rho(phi(1))| on the circle.
    std::vector<double> multiplier;
    /// max over the grid of |Im| of the multiplier computed as a complex ratio.
    double multiplier_imag = 0.0;
    /// max over components of the negative tail of tau * phi*(tau).
    double negative_tail = 0.0;

    int dimension() const { return static_cast<int>(pole_coeff.size()); }
    /// Value at tau != 0.
    CVec operator()(cplx tau) const;
    /// tau * phi*(tau), holomorphic on the closed disc.
    CVec regularized(cplx tau) const;
    const CVec& residue() const { return pole_coeff; }
};

/// Unitary change of coordinates whose first row pairs the gradient into the
/// scalar used by the logarithm: d_{z1'} rho = sum_j d_j rho * conj(U(0, j)).
using CoordinateRotation = Eigen::MatrixXcd;

/// Unitary matrix with the given unit vector as its first row.
CoordinateRotation unitary_with_first_row(const CVec& row);

struct LiftOptions {
    std::optional<CoordinateRotation> rotation;
    /// Attachment residual accepted before the construction is attempted.
    double attachment_tol = 1e-8;
    /// Relative negative tail of tau * phi* above which the disc is declared
    /// not stationary.
    double stationarity_tol = 1e-6;
};

/// Lift of a stationary disc by the Hilbert-transform construction:
///   f = log(tau * d_{z1} rho(phi)),  G = -T(Im f) + i Im f (+ real constant),
///   g = exp(Re G - Re f) with g(1) = 1,  phi* = g * d rho(phi) normalised so that
///   phi*(1) is the unit outward conormal at phi(1).
/// Without an explicit rotation the candidates are the rotation taking the
/// conormal at phi(1) to e_1, the one taking the disc direction to e_1, and
/// the coordinate axes; the best conditioned one with winding zero is used.
ConormalLift lift_from_disc(const ConvexDomain& domain, const AnalyticDisc& disc, const LiftOptions& options = {});

/// nu(tau) = (tau - tau_o)(1 - conj(tau_o) tau) / tau, real on the circle.
cplx pole_mover(cplx tau_o, cplx tau);

/// Reparametrises the pair by m(tau) = (tau - tau_o)/(1 - conj(tau_o) tau), so the
/// old centre sits at tau_o and the pole of phi* o m is there, then multiplies
/// by nu to move the pole back to 0 and renormalises phi*(1) to unit length.
ConormalLift move_pole(const ConormalLift& lift, cplx tau_o);

/// Representative of [phi*(tau)] (the residue at tau = 0) scaled so that the
/// largest-modulus coordinate equals 1; ties go to the lowest index.
CVec projectivize(const ConormalLift& lift, cplx tau);
CVec projectivize(const CVec& covector);

/// max over grid nodes of the distance from phi*(e^{i theta}) to the real line
/// spanned by d rho(phi(e^{i theta})), relative to |phi*|.
double boundary_conormality_residual(const ConvexDomain& domain, const AnalyticDisc& disc, const ConormalLift& lift);

/// Trapezoid value of int_0^{2pi} Re <phi*_1 - phi*_2, phi_1 - phi_2> d theta,
/// <a, b> = sum_j a_j b_j. Strictly positive for distinct stationary discs of a
/// strongly convex domain with outward lifts.
double monotonicity_integral(const ConormalLift& first, const ConormalLift& second);

}  // namespace geodisc
