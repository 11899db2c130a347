#pragma once

#include "geodisc/stationary.hpp"

namespace geodisc {

/// One evaluation of the Lempert map: psi_value = xi * phi'(0) / |phi'(0)| for
/// the geodesic with phi(0) = z, phi(xi) = w.
struct RiemannMapSample {
    CVec z;
    CVec w;
    CVec psi_value;
    double xi = 0.0;
};

RiemannMapSample psi(const ConvexDomain& domain, const CVec& z, const CVec& w, const SolverSettings& settings = {});

/// phi_{z, v/|v|}(|v|) for 0 < |v| < 1.
CVec psi_inverse(const ConvexDomain& domain, const CVec& z, const CVec& v, const SolverSettings& settings = {});

}  // namespace geodisc
