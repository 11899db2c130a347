#pragma once

#include <cstdint>

#include "geodisc/disc.hpp"
#include "geodisc/lifts.hpp"

namespace geodisc {

/// Extremal disc of the unit ball with phi(0) = z and phi'(0) a positive
/// multiple of v: the section of the ball by the complex line z + C v,
/// parametrised by a disc automorphism. Coefficients are truncated at
/// settings.modes.
AnalyticDisc ball_geodesic(const CVec& z, const CVec& v, const SolverSettings& settings = {});
/// Same for the ball with the given centre and radius.
AnalyticDisc ball_geodesic(const CVec& center, double radius, const CVec& z, const CVec& v,
                           const SolverSettings& settings = {});

struct SolveReport {
    int iterations = 0;
    int stages = 0;
    double attachment_residual = 0.0;
    /// Largest l2 norm of the negative modes of g e^{i theta} d_m rho(phi),
    /// relative to |d rho(phi(1))|.
    double stationarity_residual = 0.0;
    bool closed_form = false;
};

/// A stationary disc together with the real multiplier g (g(1) = 1) for which
/// tau g d rho(phi) extends holomorphically.
struct StationarySolution {
    AnalyticDisc disc;
    TrigSeries multiplier;
    SolveReport report;
};

/// Damped Gauss-Newton collocation for the stationary disc with phi(0) = z and
/// phi'(0) in R_+ v, continued from the geodesic of a ball inside the domain.
/// A warm start (any nearby solution of the same domain) is tried first.
/// Throws SolverDivergence when continuation fails.
StationarySolution solve_stationary(const ConvexDomain& domain, const CVec& z, const CVec& v,
                                    const SolverSettings& settings = {},
                                    const StationarySolution* warm = nullptr);

/// Closed form for balls when settings.closed_form_balls is set, otherwise
/// solve_stationary.
StationarySolution geodesic_disc(const ConvexDomain& domain, const CVec& z, const CVec& v,
                                 const SolverSettings& settings = {},
                                 const StationarySolution* warm = nullptr);

struct DiscAndLift {
    AnalyticDisc disc;
    ConormalLift lift;
    SolveReport report;
};

/// Certified interior solve followed by the lift construction.
DiscAndLift solve_from_center_direction(const ConvexDomain& domain, const CVec& z, const CVec& v,
                                        const SolverSettings& settings = {});

struct TwoPointSolution {
    StationarySolution solution;
    double xi = 0.0;
    int outer_iterations = 0;
    double residual = 0.0;
};

/// Stationary disc with phi(0) = z and phi(xi) = w, xi in (0, 1). Outer
/// Gauss-Newton over (direction, xi) with minimum-norm steps.
TwoPointSolution solve_two_point(const ConvexDomain& domain, const CVec& z, const CVec& w,
                                 const SolverSettings& settings = {});

/// Poincare distance atanh(xi) of the two-point parameter; 0 when z == w.
double kobayashi_distance(const ConvexDomain& domain, const CVec& z, const CVec& w,
                          const SolverSettings& settings = {});

/// lambda with psi'(0) = lambda phi'(0) (least-squares ratio).
cplx competitor_lambda(const AnalyticDisc& disc, const CVec& competitor_derivative);

struct ExtremalityReport {
    double max_abs_lambda = 0.0;
    int accepted = 0;
    int rejected = 0;
    /// Ball domains only: competitors with max rho(psi) <= -delta obey
    /// |lambda| <= |phi_shrunk'(0)| / |phi'(0)| where phi_shrunk is the
    /// geodesic of the ball shrunk to {rho <= -delta}.
    int schwarz_checked = 0;
    int schwarz_violations = 0;
    double min_schwarz_gap = 0.0;
};

/// Random competitor discs psi with psi(0) = phi(0), psi'(0) parallel to
/// phi'(0) and psi(closed disc) inside the domain: polynomial discs scaled to
/// the largest admissible size and scaled copies phi(s tau). Draws until
/// `trials` competitors are accepted or 20 * trials draws are spent.
ExtremalityReport extremality_probe(const ConvexDomain& domain, const AnalyticDisc& disc, int trials,
                                    std::uint64_t seed = 1);

}  // namespace geodisc
