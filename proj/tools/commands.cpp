#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "geodisc/errors.hpp"
#include "geodisc/lempert.hpp"
#include "geodisc/serialize.hpp"

namespace geodisc::cli {

namespace {

struct RunConfig {
    std::string domain1 = "ball";
    std::string domain2;
    int modes = 64;
    int grid = 256;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out;
    std::string csv;

    std::string z, v, w, u;
    std::string function = "z1_sq_plus_exp_z2";
    int trials = 100;
    int steps = 32;
    int count = 16;
    int discs = 8;
    int points = 50;
    double inner = 0.0;
    double outer = 0.0;
    std::vector<double> sweep;
};

cplx parse_scalar(std::string s) {
    std::erase_if(s, [](char c) { return c == ' '; });
    if (s.empty()) throw PreconditionError("empty coordinate");
    const char* begin = s.c_str();
    char* end = nullptr;
    auto fail = [&]() { return PreconditionError("cannot parse complex number: " + s); };
    if (s.back() != 'i') {
        const double re = std::strtod(begin, &end);
        if (end != begin + s.size()) throw fail();
        return {re, 0.0};
    }
    // a+bi, a-bi, bi, i, -i
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto parse_imag = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        char* e = nullptr;
        const double x = std::strtod(t.c_str(), &e);
        if (e != t.c_str() + t.size()) throw fail();
        return x;
    };
    if (split == std::string::npos) return {0.0, parse_imag(body)};
    const std::string re_part = body.substr(0, split);
    const double re = std::strtod(re_part.c_str(), &end);
    if (end != re_part.c_str() + re_part.size()) throw fail();
    return {re, parse_imag(body.substr(split))};
}

struct Context {
    RunConfig cfg;
    json domain1_spec;
    json domain2_spec;
    std::optional<ConvexDomain> domain1;
    std::optional<ConvexDomain> domain2;
    SolverSettings settings;
    json parameters = json::object();

    int dimension() const { return cfg.z.empty() ? 2 : static_cast<int>(parse_point(cfg.z).size()); }

    void load() {
        settings.modes = cfg.modes;
        settings.grid = CircleGrid(cfg.grid);
        settings.newton_tol = cfg.tol;
        settings.validate();
        domain1_spec = load_domain_spec(cfg.domain1, dimension());
        domain1 = domain_from_json(domain1_spec);
        if (!cfg.domain2.empty()) {
            domain2_spec = load_domain_spec(cfg.domain2, dimension());
            domain2 = domain_from_json(domain2_spec);
        }
    }

    CVec point(const std::string& name, const std::string& text) {
        if (text.empty()) throw PreconditionError("--" + name + " is required");
        const CVec p = parse_point(text);
        if (p.size() != domain1->dimension())
            throw PreconditionError("--" + name + " has the wrong dimension");
        parameters[name] = encode(p);
        return p;
    }

    const ConvexDomain& inner() const {
        if (!domain2) throw PreconditionError("--domain2 is required");
        return *domain2;
    }

    BoundaryFunction function() {
        parameters["function"] = cfg.function;
        return named_function(cfg.function);
    }

    json report(const std::string& command, json result) const {
        json config = {{"domain1", domain1_spec},
                       {"domain2", domain2_spec.is_null() ? json(nullptr) : domain2_spec},
                       {"settings", settings_to_json(settings)},
                       {"seed", cfg.seed},
                       {"threads", cfg.threads},
                       {"parameters", parameters}};
        json tolerances = {{"newton_tol", settings.newton_tol},
                           {"attachment_tol", 1e-8},
                           {"lift_stationarity_tol", 1e-6},
                           {"extendibility_relative_threshold", 1e-6},
                           {"two_point_tol", std::max(10.0 * settings.newton_tol, 1e-11)}};
        return {{"schema", kSchemaVersion}, {"command", command},       {"version", GEODISC_VERSION},
                {"config", config},         {"tolerances", tolerances}, {"result", std::move(result)}};
    }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw PreconditionError("cannot write " + path);
    file << text;
}

json cmd_disc_solve(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    if (!ctx.cfg.w.empty()) {
        const CVec w = ctx.point("w", ctx.cfg.w);
        const TwoPointSolution s = solve_two_point(*ctx.domain1, z, w, ctx.settings);
        return {{"disc", disc_to_json(s.solution.disc)},
                {"xi", s.xi},
                {"outer_iterations", s.outer_iterations},
                {"two_point_residual", s.residual},
                {"solve", solve_report_to_json(s.solution.report)}};
    }
    const CVec v = ctx.point("v", ctx.cfg.v);
    const StationarySolution s = geodesic_disc(*ctx.domain1, z, v, ctx.settings);
    return {{"disc", disc_to_json(s.disc)}, {"solve", solve_report_to_json(s.report)}};
}

json cmd_disc_lift(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    const CVec v = ctx.point("v", ctx.cfg.v);
    const DiscAndLift r = solve_from_center_direction(*ctx.domain1, z, v, ctx.settings);
    return {{"disc", disc_to_json(r.disc)},
            {"lift", lift_to_json(r.lift)},
            {"boundary_conormality_residual", boundary_conormality_residual(*ctx.domain1, r.disc, r.lift)},
            {"solve", solve_report_to_json(r.report)}};
}

json cmd_disc_probe(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    const CVec v = ctx.point("v", ctx.cfg.v);
    ctx.parameters["trials"] = ctx.cfg.trials;
    const StationarySolution s = geodesic_disc(*ctx.domain1, z, v, ctx.settings);
    return {{"disc", disc_to_json(s.disc)},
            {"extremality", extremality_to_json(extremality_probe(*ctx.domain1, s.disc, ctx.cfg.trials, ctx.cfg.seed))}};
}

json cmd_geodesic_distance(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    const CVec w = ctx.point("w", ctx.cfg.w);
    if ((z - w).norm() == 0.0) return {{"distance", 0.0}, {"xi", 0.0}};
    const TwoPointSolution s = solve_two_point(*ctx.domain1, z, w, ctx.settings);
    return {{"distance", std::atanh(s.xi)}, {"xi", s.xi}, {"two_point_residual", s.residual}};
}

json cmd_riemann_psi(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    if (!ctx.cfg.u.empty()) {
        const CVec u = ctx.point("u", ctx.cfg.u);
        return {{"inverse", encode(psi_inverse(*ctx.domain1, z, u, ctx.settings))}};
    }
    const CVec w = ctx.point("w", ctx.cfg.w);
    const RiemannMapSample s = psi(*ctx.domain1, z, w, ctx.settings);
    return {{"psi", encode(s.psi_value)}, {"xi", s.xi}};
}

json cmd_tangency_trace(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    ctx.parameters["steps"] = ctx.cfg.steps;
    const TangencyLocus locus = trace_locus(*ctx.domain1, ctx.inner(), z, ctx.cfg.steps, ctx.settings);
    if (!ctx.cfg.csv.empty()) {
        std::ostringstream csv;
        write_locus_csv(csv, locus);
        write_text(ctx.cfg.csv, csv.str());
    }
    return locus_to_json(locus);
}

json cmd_tangency_pi(Context& ctx) {
    const CVec z = ctx.point("z", ctx.cfg.z);
    ctx.parameters["count"] = ctx.cfg.count;
    json classes = json::array();
    for (const CVec& c : pi_set_sample(*ctx.domain1, ctx.inner(), z, ctx.cfg.count, ctx.settings))
        classes.push_back(encode(c));
    return {{"projective_residues", classes}};
}

json cmd_extension_verify(Context& ctx) {
    const BoundaryFunction f = ctx.function();
    const CVec z = ctx.point("z", ctx.cfg.z);
    if (ctx.domain2) {
        ctx.parameters["discs"] = ctx.cfg.discs;
        ConsistencyOptions options;
        options.disc_count = ctx.cfg.discs;
        return consistency_to_json(consistency_check(f, *ctx.domain1, *ctx.domain2, z, ctx.settings, options));
    }
    const CVec v = ctx.point("v", ctx.cfg.v);
    const StationarySolution s = geodesic_disc(*ctx.domain1, z, v, ctx.settings);
    return extension_to_json(verify_disc(f, s.disc));
}

std::pair<double, double> shell_radii(const Context& ctx) {
    if (ctx.cfg.inner > 0.0 && ctx.cfg.outer > ctx.cfg.inner) return {ctx.cfg.inner, ctx.cfg.outer};
    const ConvexDomain& d1 = *ctx.domain1;
    const ConvexDomain& d2 = ctx.inner();
    if (d1.is_ball() && d2.is_ball() && (d1.ball_center() - d2.ball_center()).norm() == 0.0) {
        const double r1 = d1.ball_radius(), r2 = d2.ball_radius();
        return {r2 + 0.2 * (r1 - r2), r2 + 0.8 * (r1 - r2)};
    }
    throw PreconditionError("--inner and --outer are required unless both domains are concentric balls");
}

json cmd_extension_reconstruct(Context& ctx) {
    const BoundaryFunction f = ctx.function();
    const auto [inner, outer] = shell_radii(ctx);
    ctx.parameters["points"] = ctx.cfg.points;
    ctx.parameters["discs"] = ctx.cfg.discs;
    ctx.parameters["inner"] = inner;
    ctx.parameters["outer"] = outer;
    const ConvexDomain& d2 = ctx.inner();
    const CVec center = d2.is_ball() ? d2.ball_center() : d2.interior_point();
    const std::vector<CVec> pts = shell_points(ctx.domain1->dimension(), ctx.cfg.points, inner, outer, center);
    ConsistencyOptions options;
    options.disc_count = ctx.cfg.discs;
    const ReconstructionReport r = reconstruct(f, *ctx.domain1, d2, pts, ctx.settings, options, ctx.cfg.threads);
    if (!ctx.cfg.csv.empty()) {
        std::ostringstream csv;
        csv.precision(17);
        for (const ConsistencyReport& p : r.points) {
            for (Eigen::Index j = 0; j < p.z.size(); ++j) csv << p.z(j).real() << ',' << p.z(j).imag() << ',';
            csv << p.mean.real() << ',' << p.mean.imag() << ',' << p.spread << '\n';
        }
        write_text(ctx.cfg.csv, csv.str());
    }
    return reconstruction_to_json(r);
}

json cmd_morera(Context& ctx) {
    const BoundaryFunction f = ctx.function();
    const CVec z = ctx.point("z", ctx.cfg.z);
    const CVec v = ctx.point("v", ctx.cfg.v);
    const StationarySolution s = geodesic_disc(*ctx.domain1, z, v, ctx.settings);
    return {{"morera", encode(morera_integrals(f, s.disc))}};
}

json cmd_repro_counterexample(Context& ctx, bool grid_given, bool discs_given) {
    const int grid = grid_given ? ctx.cfg.grid : 512;
    const int discs = discs_given ? ctx.cfg.discs : 64;
    ctx.parameters["discs"] = discs;
    ctx.parameters["grid"] = grid;
    ctx.parameters["sweep"] = ctx.cfg.sweep;
    const CounterexampleReport r = counterexample_harness(discs, grid, ctx.cfg.sweep);
    if (!ctx.cfg.csv.empty()) {
        std::ostringstream csv;
        csv.precision(17);
        auto rows = [&](const CounterexampleCase& c) {
            for (std::size_t k = 0; k < c.base_points.size(); ++k) {
                csv << c.function << ',' << c.r2;
                for (Eigen::Index j = 0; j < c.base_points[k].size(); ++j)
                    csv << ',' << c.base_points[k](j).real() << ',' << c.base_points[k](j).imag();
                csv << ',' << c.defects[k] << '\n';
            }
        };
        rows(r.exceptional);
        rows(r.control);
        rows(r.holomorphic);
        for (const CounterexampleCase& c : r.sweep) rows(c);
        write_text(ctx.cfg.csv, csv.str());
    }
    return counterexample_to_json(r);
}

}  // namespace

CVec parse_point(const std::string& text) {
    std::vector<cplx> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_scalar(item));
    if (values.empty()) throw PreconditionError("empty point");
    CVec p(static_cast<Eigen::Index>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k) p(static_cast<Eigen::Index>(k)) = values[k];
    return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    RunConfig& cfg = ctx.cfg;
    CLI::App app{"Complex geodesics, tangency loci and disc-wise extension in strongly convex domains", "geodisc"};
    app.set_version_flag("--version", std::string(GEODISC_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--domain1,--domain", cfg.domain1, "Outer domain: JSON file, inline JSON or 'ball'");
    app.add_option("--domain2", cfg.domain2, "Inner domain: JSON file, inline JSON or 'ball'");
    CLI::Option* grid_opt = app.add_option("--grid", cfg.grid, "Circle grid size N (power of two)");
    app.add_option("--modes", cfg.modes, "Truncation order M");
    app.add_option("--tol", cfg.tol, "Newton tolerance");
    app.add_option("--seed", cfg.seed, "Seed for randomized sampling");
    app.add_option("--threads", cfg.threads, "Worker threads (0: available parallelism)");
    app.add_option("--out", cfg.out, "Write the JSON report here instead of standard output");

    std::map<const CLI::App*, std::function<json()>> handlers;
    std::map<const CLI::App*, std::string> names;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                    std::function<json()> handler) {
        CLI::App* sub = parent->add_subcommand(name, description);
        handlers[sub] = std::move(handler);
        names[sub] = parent == &app ? name : parent->get_name() + " " + name;
        return sub;
    };
    auto add_z = [&](CLI::App* sub) { sub->add_option("--z", cfg.z, "Base point, e.g. 0.5,0.1+0.2i"); };
    auto add_v = [&](CLI::App* sub) { sub->add_option("--v", cfg.v, "Direction"); };
    auto add_w = [&](CLI::App* sub) { sub->add_option("--w", cfg.w, "Second point"); };
    auto add_function = [&](CLI::App* sub) {
        sub->add_option("--function", cfg.function, "Boundary function")
            ->check(CLI::IsMember(function_names()));
    };

    CLI::App* disc = app.add_subcommand("disc", "Stationary discs")->require_subcommand(1);
    CLI::App* solve = leaf(disc, "solve", "Geodesic by centre and direction, or through two points",
                           [&] { return cmd_disc_solve(ctx); });
    add_z(solve), add_v(solve), add_w(solve);
    CLI::App* lift = leaf(disc, "lift", "Stationary disc and its conormal lift", [&] { return cmd_disc_lift(ctx); });
    add_z(lift), add_v(lift);
    CLI::App* probe = leaf(disc, "probe", "Extremality probe with random competitors", [&] { return cmd_disc_probe(ctx); });
    add_z(probe), add_v(probe);
    probe->add_option("--trials", cfg.trials, "Number of competitors");

    CLI::App* geodesic = app.add_subcommand("geodesic", "Kobayashi geometry")->require_subcommand(1);
    CLI::App* distance = leaf(geodesic, "distance", "Kobayashi distance between two points",
                              [&] { return cmd_geodesic_distance(ctx); });
    add_z(distance), add_w(distance);

    CLI::App* riemann = app.add_subcommand("riemann", "Lempert map")->require_subcommand(1);
    CLI::App* psi_cmd = leaf(riemann, "psi", "Lempert map at w, or its inverse at u", [&] { return cmd_riemann_psi(ctx); });
    add_z(psi_cmd), add_w(psi_cmd);
    psi_cmd->add_option("--u", cfg.u, "Point of the unit ball for the inverse map");

    CLI::App* tangency = app.add_subcommand("tangency", "Tangency loci against the inner domain")->require_subcommand(1);
    CLI::App* trace = leaf(tangency, "trace", "Trace the tangency locus of a base point",
                           [&] { return cmd_tangency_trace(ctx); });
    add_z(trace);
    trace->add_option("--steps", cfg.steps, "Approximate number of samples");
    trace->add_option("--csv", cfg.csv, "CSV of the traced points");
    CLI::App* pi = leaf(tangency, "pi", "Projectivised residues of tangent geodesics", [&] { return cmd_tangency_pi(ctx); });
    add_z(pi);
    pi->add_option("--count", cfg.count, "Number of directions");

    CLI::App* extension = app.add_subcommand("extension", "Disc-wise holomorphic extension")->require_subcommand(1);
    CLI::App* verify = leaf(extension, "verify", "Defect on one disc, or consistency across tangent discs",
                            [&] { return cmd_extension_verify(ctx); });
    add_function(verify), add_z(verify), add_v(verify);
    verify->add_option("--discs", cfg.discs, "Tangent discs per point");
    CLI::App* recon = leaf(extension, "reconstruct", "Extension at quasi-random points between the domains",
                           [&] { return cmd_extension_reconstruct(ctx); });
    add_function(recon);
    recon->add_option("--points", cfg.points, "Number of points");
    recon->add_option("--discs", cfg.discs, "Tangent discs per point");
    recon->add_option("--inner", cfg.inner, "Smallest distance from the inner centre");
    recon->add_option("--outer", cfg.outer, "Largest distance from the inner centre");
    recon->add_option("--csv", cfg.csv, "CSV of point, value and spread");

    CLI::App* morera = leaf(&app, "morera", "Morera integrals of f dz_j along a disc", [&] { return cmd_morera(ctx); });
    add_function(morera), add_z(morera), add_v(morera);

    CLI::App* repro = app.add_subcommand("repro", "Reproductions")->require_subcommand(1);
    bool discs_given = false;
    CLI::App* counter = leaf(repro, "counterexample", "Morera versus disc-wise extension on tangent lines",
                             [&] { return cmd_repro_counterexample(ctx, grid_opt->count() > 0, discs_given); });
    CLI::Option* counter_discs = counter->add_option("--discs", cfg.discs, "Tangent lines per radius");
    counter->add_option("--sweep", cfg.sweep, "Extra inner radii");
    counter->add_option("--csv", cfg.csv, "CSV of base points and defects");

    std::vector<const char*> argv{"geodisc"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kPrecondition;
    }
    discs_given = counter_discs->count() > 0;

    const CLI::App* selected = &app;
    while (!selected->get_subcommands().empty()) selected = selected->get_subcommands().front();
    const auto handler = handlers.find(selected);
    if (handler == handlers.end()) {
        err << "geodisc: no command selected\n";
        return kPrecondition;
    }
    try {
        ctx.load();
        json result = handler->second();
        const std::string text = ctx.report(names[selected], std::move(result)).dump(2) + "\n";
        if (cfg.out.empty()) {
            out << text;
        } else {
            write_text(cfg.out, text);
        }
        return kSuccess;
    } catch (const HypothesisViolation& e) {
        err << "geodisc: hypothesis violation: " << e.what() << '\n';
        return kHypothesis;
    } catch (const SolverDivergence& e) {
        err << "geodisc: solver divergence: " << e.what() << " (last residual " << e.last_residual() << ")\n";
        return kDivergence;
    } catch (const PreconditionError& e) {
        err << "geodisc: precondition error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const json::exception& e) {
        err << "geodisc: malformed configuration: " << e.what() << '\n';
        return kPrecondition;
    }
}

}  // namespace geodisc::cli
