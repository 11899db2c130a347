#pragma once

// JSON encoding of domains, discs and reports. Complex numbers are [re, im]
// pairs; every document carries "schema": 1.

#include <nlohmann/json.hpp>
#include <string>

#include "geodisc/extension.hpp"

namespace geodisc {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json encode(cplx c);
json encode(const CVec& v);
json encode(const std::vector<cplx>& values);
cplx decode_complex(const json& j);
CVec decode_vector(const json& j);

/// Domain specification:
///   {"kind": "ball", "center": [[re, im], ...], "radius": r}
///   {"kind": "ball", "dimension": n}                          (unit ball)
///   {"kind": "ellipsoid", "semi_axes": [a_1, ..., a_n]}
///   {"kind": "perturbed_ball", "dimension": n, "epsilon": e, "bump": name}
/// An optional integer "smoothness" is carried as metadata only.
/// Throws PreconditionError on malformed input.
ConvexDomain domain_from_json(const json& spec);
/// File path or inline JSON text; the bare words "ball", "unit_ball" mean the
/// unit ball of the given dimension.
json load_domain_spec(const std::string& text, int dimension);

json settings_to_json(const SolverSettings& settings);

json disc_to_json(const AnalyticDisc& disc);
/// Inverse of disc_to_json (the domain is not stored).
AnalyticDisc disc_from_json(const json& j);
json lift_to_json(const ConormalLift& lift);
json solve_report_to_json(const SolveReport& report);
json extremality_to_json(const ExtremalityReport& report);
json locus_to_json(const TangencyLocus& locus);
json extension_to_json(const ExtensionReport& report);
json consistency_to_json(const ConsistencyReport& report);
json reconstruction_to_json(const ReconstructionReport& report);
json counterexample_to_json(const CounterexampleReport& report);

}  // namespace geodisc
