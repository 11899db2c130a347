#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "geodisc/tangency.hpp"

namespace geodisc {

/// Continuous function on the outer boundary. The evaluator is called
/// concurrently and must not mutate shared state.
struct BoundaryFunction {
    std::function<cplx(const CVec&)> evaluator;
    std::string label;

    cplx operator()(const CVec& z) const { return evaluator(z); }
};

/// Catalog used by the CLI and tests:
///   "one", "z1", "conj_z1", "z1z2", "z1_sq_plus_3", "z1_sq_plus_exp_z2",
///   "z1_conj_z2_sq" (z_1 conj(z_2)^2), "z1_z2_sq" (z_1 z_2^2).
BoundaryFunction named_function(const std::string& name);
std::vector<std::string> function_names();

/// Largest |f(z) - f(z')| over `pairs` random boundary pairs with |z - z'| <= delta.
double continuity_modulus(const BoundaryFunction& f, const ConvexDomain& domain, double delta, int pairs,
                          std::uint64_t seed = 1);

struct DiscTrace {
    AnalyticDisc disc;
    TrigSeries values;
};

/// f sampled at phi(e^{i theta_j}) and analyzed. Throws PreconditionError when
/// the disc is not attached (residual above attachment_tol).
DiscTrace restrict_to_disc(const BoundaryFunction& f, const AnalyticDisc& disc, double attachment_tol = 1e-8);

/// l2 norm of the negative modes of the trace.
double extension_defect(const DiscTrace& trace);
/// 1e-6 times the l2 norm of the trace.
double extendibility_threshold(const DiscTrace& trace);
bool is_extendible(const DiscTrace& trace);

/// Holomorphic extension of the trace at tau. Throws PreconditionError when the
/// defect exceeds the threshold.
cplx extend_along_disc(const DiscTrace& trace, cplx tau);

/// int_0^{2 pi} f(phi) phi_j' i e^{i theta} d theta for j = 1..n (trapezoid rule).
std::vector<cplx> morera_integrals(const BoundaryFunction& f, const AnalyticDisc& disc);

struct ExtensionReport {
    double defect = 0.0;
    double threshold = 0.0;
    std::vector<cplx> morera;
    bool extendible = false;
};

ExtensionReport verify_disc(const BoundaryFunction& f, const AnalyticDisc& disc);

struct ConsistencyReport {
    CVec z;
    /// Extended values, one per disc; only discs that passed the defect test.
    std::vector<cplx> values;
    /// Defect of every selected disc, in locus order.
    std::vector<double> defects;
    std::vector<double> thresholds;
    int failed_discs = 0;
    cplx mean{0.0, 0.0};
    /// Largest pairwise distance between values.
    double spread = 0.0;
    /// Set when tracing or a disc solve threw; the remaining fields hold
    /// whatever was computed.
    std::string error;

    bool ok() const { return error.empty() && failed_discs == 0 && !values.empty(); }
};

struct ConsistencyOptions {
    int disc_count = 8;
    int trace_steps = 24;
    bool check_components = false;
};

/// Traces the tangency locus of z, re-solves disc_count tangent discs equally
/// spaced along it and extends f along each to the parameter of z.
ConsistencyReport consistency_check(const BoundaryFunction& f, const ConvexDomain& domain1,
                                    const ConvexDomain& domain2, const CVec& z, const SolverSettings& settings = {},
                                    const ConsistencyOptions& options = {});

struct ReconstructionReport {
    std::vector<ConsistencyReport> points;
    double max_spread = 0.0;
    int failed_points = 0;
    int failed_discs = 0;
    int total_discs = 0;
    std::string inner_domain = "filled by Hartogs (not computed)";

    double failure_rate() const { return total_discs == 0 ? 0.0 : double(failed_discs) / total_discs; }
};

/// consistency_check at every point, run on `threads` workers (0 means the
/// hardware concurrency). Results keep the order of the input points.
ReconstructionReport reconstruct(const BoundaryFunction& f, const ConvexDomain& domain1,
                                 const ConvexDomain& domain2, const std::vector<CVec>& points,
                                 const SolverSettings& settings = {}, const ConsistencyOptions& options = {},
                                 int threads = 0);

/// Deterministic quasi-random points with inner <= |z - center| <= outer.
std::vector<CVec> shell_points(int dimension, int count, double inner, double outer,
                               const CVec& center = CVec());

/// Tangent-line sections of the unit ball through points of the sphere of
/// radius r2: phi(tau) = p + sqrt(1 - r2^2) tau v, v a unit vector of T^C_p.
/// Base points p = r2 (cos a e^{i b1}, sin a e^{i b2}) with a in [pi/8, 3pi/8],
/// away from the coordinate axes.
std::vector<CVec> tangent_base_points(double r2, int count);
AnalyticDisc tangent_line_disc(const CVec& base_point, const CircleGrid& grid);

struct CounterexampleCase {
    std::string function;
    double r2 = 0.0;
    int discs = 0;
    double max_morera = 0.0;
    double min_defect = 0.0;
    double max_defect = 0.0;
    std::vector<CVec> base_points;
    std::vector<double> defects;
};

CounterexampleCase tangent_line_family(const BoundaryFunction& f, double r2, int discs, const CircleGrid& grid);

struct CounterexampleReport {
    int grid = 0;
    CounterexampleCase exceptional;
    CounterexampleCase control;
    CounterexampleCase holomorphic;
    std::vector<CounterexampleCase> sweep;
};

/// r1 = 1, f = z_1 conj(z_2)^2 at r2 = sqrt(1/3) and at the control r2 = 0.5,
/// plus the holomorphic z_1 z_2^2 at sqrt(1/3). sweep_radii adds one case per
/// radius without any claim about the outcome.
CounterexampleReport counterexample_harness(int discs = 64, int grid = 512,
                                            const std::vector<double>& sweep_radii = {});

}  // namespace geodisc
