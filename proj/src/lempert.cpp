#include "geodisc/lempert.hpp"

#include "geodisc/errors.hpp"

namespace geodisc {

RiemannMapSample psi(const ConvexDomain& domain, const CVec& z, const CVec& w, const SolverSettings& settings) {
    const TwoPointSolution two = solve_two_point(domain, z, w, settings);
    const CVec d = two.solution.disc.base_direction();
    return {z, w, two.xi * d / d.norm(), two.xi};
}

CVec psi_inverse(const ConvexDomain& domain, const CVec& z, const CVec& v, const SolverSettings& settings) {
    const double len = v.norm();
    if (!(len > 0.0 && len < 1.0)) throw PreconditionError("psi_inverse requires 0 < |v| < 1");
    const StationarySolution sol = geodesic_disc(domain, z, v, settings);
    return sol.disc(cplx{len, 0.0});
}

}  // namespace geodisc
