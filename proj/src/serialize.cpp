#include "geodisc/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "geodisc/errors.hpp"

namespace geodisc {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) throw PreconditionError(std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

json encode_matrix_rows(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json encode_case(const CounterexampleCase& c) {
    json defects = json::array();
    for (double d : c.defects) defects.push_back(d);
    return {{"function", c.function}, {"r2", c.r2},           {"discs", c.discs},
            {"max_morera", c.max_morera}, {"min_defect", c.min_defect}, {"max_defect", c.max_defect},
            {"defects", defects}};
}

}  // namespace

json encode(cplx c) { return json::array({c.real(), c.imag()}); }

json encode(const CVec& v) {
    json out = json::array();
    for (Eigen::Index j = 0; j < v.size(); ++j) out.push_back(encode(v(j)));
    return out;
}

json encode(const std::vector<cplx>& values) {
    json out = json::array();
    for (const cplx& c : values) out.push_back(encode(c));
    return out;
}

cplx decode_complex(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw PreconditionError("complex numbers are encoded as [re, im]");
}

CVec decode_vector(const json& j) {
    if (!j.is_array() || j.empty()) throw PreconditionError("expected a non-empty array of complex numbers");
    CVec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = decode_complex(j[k]);
    return v;
}

ConvexDomain domain_from_json(const json& spec) {
    const json& kind_field = field(spec, "kind");
    if (!kind_field.is_string()) throw PreconditionError("\"kind\" must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (spec.contains("smoothness") && !spec.at("smoothness").is_number_integer())
        throw PreconditionError("\"smoothness\" must be an integer");
    if (kind == "ball") {
        if (spec.contains("center")) {
            const CVec center = decode_vector(spec.at("center"));
            const double radius = spec.contains("radius") ? number(spec, "radius") : 1.0;
            if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
            return make_ball(center, radius);
        }
        const int n = spec.contains("dimension") ? spec.at("dimension").get<int>() : 2;
        const double radius = spec.contains("radius") ? number(spec, "radius") : 1.0;
        if (n < 1) throw PreconditionError("dimension must be positive");
        if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
        return make_ball(CVec::Zero(n), radius);
    }
    if (kind == "ellipsoid") {
        const json& axes = field(spec, "semi_axes");
        if (!axes.is_array() || axes.empty()) throw PreconditionError("\"semi_axes\" must be a non-empty array");
        std::vector<double> a;
        for (const json& x : axes) {
            if (!x.is_number() || !(x.get<double>() > 0.0)) throw PreconditionError("semi-axes must be positive");
            a.push_back(x.get<double>());
        }
        return make_ellipsoid(a);
    }
    if (kind == "perturbed_ball") {
        const int n = spec.contains("dimension") ? spec.at("dimension").get<int>() : 2;
        const double eps = number(spec, "epsilon");
        const std::string bump = spec.contains("bump") ? spec.at("bump").get<std::string>() : "re_z1_squared";
        return make_perturbed_ball(eps, named_bump(bump, n), n);
    }
    throw PreconditionError("unknown domain kind: " + kind);
}

json load_domain_spec(const std::string& text, int dimension) {
    if (text == "ball" || text == "unit_ball") return {{"kind", "ball"}, {"dimension", dimension}};
    std::string body = text;
    const auto first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw PreconditionError("empty domain specification");
    if (text[first] != '{') {
        std::ifstream in{std::filesystem::path(text)};
        if (!in) throw PreconditionError("cannot read domain file: " + text);
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw PreconditionError(std::string("malformed domain JSON: ") + e.what());
    }
}

json settings_to_json(const SolverSettings& s) {
    return {{"modes", s.modes},
            {"grid", s.grid.size()},
            {"newton_tol", s.newton_tol},
            {"max_iters", s.max_iters},
            {"continuation_steps", s.continuation_steps},
            {"closed_form_balls", s.closed_form_balls}};
}

json disc_to_json(const AnalyticDisc& disc) {
    json out = {{"schema", kSchemaVersion},
                {"dimension", disc.dimension()},
                {"modes", disc.modes()},
                {"grid", disc.grid().size()},
                {"base_point", encode(disc.base_point())},
                {"coeffs", encode_matrix_rows(disc.coeffs())}};
    out["residual"] = disc.domain() ? json(disc.attachment_residual()) : json(nullptr);
    return out;
}

AnalyticDisc disc_from_json(const json& j) {
    const json& rows = field(j, "coeffs");
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty())
        throw PreconditionError("\"coeffs\" must be a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = static_cast<Eigen::Index>(rows[0].size());
    Eigen::MatrixXcd coeffs(n, m);
    for (Eigen::Index r = 0; r < n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m)
            throw PreconditionError("coefficient rows must have equal length");
        for (Eigen::Index c = 0; c < m; ++c) coeffs(r, c) = decode_complex(row[static_cast<std::size_t>(c)]);
    }
    const int grid = j.contains("grid") ? j.at("grid").get<int>() : CircleGrid::kDefaultSize;
    return AnalyticDisc(coeffs, CircleGrid(grid));
}

json lift_to_json(const ConormalLift& lift) {
    json g = json::array();
    for (double x : lift.multiplier) g.push_back(x);
    return {{"schema", kSchemaVersion},
            {"pole_coeff", encode(lift.pole_coeff)},
            {"holo_coeffs", encode_matrix_rows(lift.holo_coeffs)},
            {"multiplier", g},
            {"multiplier_imag", lift.multiplier_imag},
            {"negative_tail", lift.negative_tail}};
}

json solve_report_to_json(const SolveReport& r) {
    return {{"iterations", r.iterations},
            {"stages", r.stages},
            {"attachment_residual", r.attachment_residual},
            {"stationarity_residual", r.stationarity_residual},
            {"closed_form", r.closed_form}};
}

json extremality_to_json(const ExtremalityReport& r) {
    return {{"max_abs_lambda", r.max_abs_lambda},   {"accepted", r.accepted},
            {"rejected", r.rejected},               {"schwarz_checked", r.schwarz_checked},
            {"schwarz_violations", r.schwarz_violations}, {"min_schwarz_gap", r.min_schwarz_gap}};
}

json locus_to_json(const TangencyLocus& locus) {
    json points = json::array();
    for (const TangencyPoint& p : locus.points)
        points.push_back({{"w", encode(p.w)},
                          {"z_parameter", encode(p.z_parameter)},
                          {"tangency_constant", p.tangency_constant},
                          {"residual", p.residual}});
    return {{"base_point", encode(locus.base_point)}, {"closed", locus.closed},
            {"closure_gap", locus.closure_gap},       {"step", locus.step},
            {"component_count", locus.component_count}, {"diameter", locus_diameter(locus)},
            {"points", points}};
}

json extension_to_json(const ExtensionReport& r) {
    return {{"defect", r.defect}, {"threshold", r.threshold}, {"extendible", r.extendible}, {"morera", encode(r.morera)}};
}

json consistency_to_json(const ConsistencyReport& r) {
    json defects = json::array();
    for (double d : r.defects) defects.push_back(d);
    json out = {{"z", encode(r.z)},     {"values", encode(r.values)}, {"mean", encode(r.mean)},
                {"spread", r.spread},   {"defects", defects},         {"failed_discs", r.failed_discs},
                {"ok", r.ok()}};
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

json reconstruction_to_json(const ReconstructionReport& r) {
    json points = json::array();
    for (const ConsistencyReport& p : r.points) points.push_back(consistency_to_json(p));
    return {{"max_spread", r.max_spread},       {"failed_points", r.failed_points},
            {"failed_discs", r.failed_discs},   {"total_discs", r.total_discs},
            {"defect_failure_rate", r.failure_rate()}, {"inner_domain", r.inner_domain},
            {"points", points}};
}

json counterexample_to_json(const CounterexampleReport& r) {
    json sweep = json::array();
    for (const CounterexampleCase& c : r.sweep) sweep.push_back(encode_case(c));
    return {{"grid", r.grid},
            {"outer_radius", 1.0},
            {"max_morera", r.exceptional.max_morera},
            {"min_defect", r.exceptional.min_defect},
            {"exceptional", encode_case(r.exceptional)},
            {"control", encode_case(r.control)},
            {"holomorphic", encode_case(r.holomorphic)},
            {"sweep", sweep}};
}

}  // namespace geodisc
