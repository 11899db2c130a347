#include "geodisc/extension.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include "geodisc/errors.hpp"

namespace geodisc {

namespace {

constexpr double kPi = std::numbers::pi;

double halton(int index, int base) {
    double f = 1.0;
    double r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

double trace_norm(const TrigSeries& s) {
    double sum = 0.0;
    for (const cplx& c : s.raw()) sum += std::norm(c);
    return std::sqrt(sum);
}

}  // namespace

BoundaryFunction named_function(const std::string& name) {
    static const std::map<std::string, std::function<cplx(const CVec&)>> catalog = {
        {"one", [](const CVec&) { return cplx(1.0, 0.0); }},
        {"z1", [](const CVec& z) { return z(0); }},
        {"conj_z1", [](const CVec& z) { return std::conj(z(0)); }},
        {"z1z2", [](const CVec& z) { return z(0) * z(1); }},
        {"z1_sq_plus_3", [](const CVec& z) { return z(0) * z(0) + 3.0; }},
        {"z1_sq_plus_exp_z2", [](const CVec& z) { return z(0) * z(0) + std::exp(z(1)); }},
        {"z1_conj_z2_sq", [](const CVec& z) { return z(0) * std::conj(z(1)) * std::conj(z(1)); }},
        {"z1_z2_sq", [](const CVec& z) { return z(0) * z(1) * z(1); }},
    };
    const auto it = catalog.find(name);
    if (it == catalog.end()) throw PreconditionError("unknown boundary function: " + name);
    const bool needs_two = name.find("z2") != std::string::npos;
    auto eval = it->second;
    return {[eval, needs_two, name](const CVec& z) {
                if (needs_two && z.size() < 2) throw PreconditionError(name + " needs dimension >= 2");
                return eval(z);
            },
            name};
}

std::vector<std::string> function_names() {
    return {"one", "z1", "conj_z1", "z1z2", "z1_sq_plus_3", "z1_sq_plus_exp_z2", "z1_conj_z2_sq", "z1_z2_sq"};
}

double continuity_modulus(const BoundaryFunction& f, const ConvexDomain& domain, double delta, int pairs,
                          std::uint64_t seed) {
    if (!(delta > 0.0) || pairs < 1) throw PreconditionError("continuity_modulus needs delta > 0 and pairs >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const int n = domain.dimension();
    const CVec origin = domain.interior_point();
    double worst = 0.0;
    for (const CVec& z : boundary_samples(domain, pairs)) {
        CVec step(n);
        for (int j = 0; j < n; ++j) step(j) = cplx(normal(rng), normal(rng));
        CVec moved = z + (0.5 * delta / step.norm()) * step;
        CVec projected;
        if (!radial_boundary_point(domain, origin, moved - origin, projected)) continue;
        if ((projected - z).norm() > delta) continue;
        worst = std::max(worst, std::abs(f(projected) - f(z)));
    }
    return worst;
}

DiscTrace restrict_to_disc(const BoundaryFunction& f, const AnalyticDisc& disc, double attachment_tol) {
    if (!disc.domain()) throw PreconditionError("disc has no attached domain");
    const double residual = disc.attachment_residual();
    if (!(residual <= attachment_tol))
        throw PreconditionError("disc not attached: residual " + std::to_string(residual));
    const Eigen::MatrixXcd values = disc.boundary_values();
    std::vector<cplx> samples(static_cast<std::size_t>(values.cols()));
    for (Eigen::Index j = 0; j < values.cols(); ++j) samples[static_cast<std::size_t>(j)] = f(values.col(j));
    return {disc, analyze(disc.grid(), samples)};
}

double extension_defect(const DiscTrace& trace) { return negative_tail_norm(trace.values); }

double extendibility_threshold(const DiscTrace& trace) { return 1e-6 * trace_norm(trace.values); }

bool is_extendible(const DiscTrace& trace) { return extension_defect(trace) <= extendibility_threshold(trace); }

cplx extend_along_disc(const DiscTrace& trace, cplx tau) {
    if (!(std::abs(tau) < 1.0)) throw PreconditionError("extension parameter must lie in the open disc");
    const double defect = extension_defect(trace);
    if (!(defect <= extendibility_threshold(trace)))
        throw PreconditionError("boundary values do not extend along the disc: defect " + std::to_string(defect));
    return cauchy_extend(trace.values, tau);
}

std::vector<cplx> morera_integrals(const BoundaryFunction& f, const AnalyticDisc& disc) {
    const CircleGrid& grid = disc.grid();
    const int n = disc.dimension();
    const Eigen::MatrixXcd values = disc.boundary_values();
    std::vector<cplx> out(static_cast<std::size_t>(n), cplx(0.0, 0.0));
    const double weight = 2.0 * kPi / grid.size();
    for (int j = 0; j < grid.size(); ++j) {
        const cplx node = grid.node(j);
        const cplx fz = f(values.col(j));
        const CVec d = disc.derivative(node);
        for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += weight * fz * d(k) * cplx(0.0, 1.0) * node;
    }
    return out;
}

ExtensionReport verify_disc(const BoundaryFunction& f, const AnalyticDisc& disc) {
    const DiscTrace trace = restrict_to_disc(f, disc);
    ExtensionReport report;
    report.defect = extension_defect(trace);
    report.threshold = extendibility_threshold(trace);
    report.extendible = report.defect <= report.threshold;
    report.morera = morera_integrals(f, disc);
    return report;
}

ConsistencyReport consistency_check(const BoundaryFunction& f, const ConvexDomain& domain1,
                                    const ConvexDomain& domain2, const CVec& z, const SolverSettings& settings,
                                    const ConsistencyOptions& options) {
    if (options.disc_count < 1) throw PreconditionError("disc_count must be positive");
    if (!(domain1.rho(z) < 0.0) || !(domain2.rho(z) > 0.0))
        throw PreconditionError("point must lie strictly between the domains");
    ConsistencyReport report;
    report.z = z;
    const double attach_tol = std::max(1e-8, 100.0 * settings.newton_tol);
    try {
        const TangencyLocus locus =
            trace_locus(domain1, domain2, z, options.trace_steps, settings, options.check_components);
        const std::vector<TangencyPoint> discs =
            resample_locus(domain1, domain2, locus, options.disc_count, settings);
        for (const TangencyPoint& tp : discs) {
            const DiscTrace trace = restrict_to_disc(f, tp.disc, attach_tol);
            const double defect = extension_defect(trace);
            const double threshold = extendibility_threshold(trace);
            report.defects.push_back(defect);
            report.thresholds.push_back(threshold);
            if (defect <= threshold) {
                report.values.push_back(cauchy_extend(trace.values, tp.z_parameter));
            } else {
                ++report.failed_discs;
            }
        }
    } catch (const Error& e) {
        report.error = e.what();
    }
    if (!report.values.empty()) {
        cplx sum(0.0, 0.0);
        for (const cplx& v : report.values) sum += v;
        report.mean = sum / double(report.values.size());
        for (std::size_t i = 0; i < report.values.size(); ++i)
            for (std::size_t j = i + 1; j < report.values.size(); ++j)
                report.spread = std::max(report.spread, std::abs(report.values[i] - report.values[j]));
    }
    return report;
}

ReconstructionReport reconstruct(const BoundaryFunction& f, const ConvexDomain& domain1,
                                 const ConvexDomain& domain2, const std::vector<CVec>& points,
                                 const SolverSettings& settings, const ConsistencyOptions& options, int threads) {
    for (const CVec& z : points)
        if (!(domain1.rho(z) < 0.0) || !(domain2.rho(z) > 0.0))
            throw PreconditionError("reconstruction points must lie strictly between the domains");
    ReconstructionReport report;
    report.points.resize(points.size());
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<int>(threads, std::max<int>(1, static_cast<int>(points.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < points.size(); i = next++)
            report.points[i] = consistency_check(f, domain1, domain2, points[i], settings, options);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const ConsistencyReport& r : report.points) {
        report.max_spread = std::max(report.max_spread, r.spread);
        report.failed_discs += r.failed_discs;
        report.total_discs += static_cast<int>(r.defects.size());
        if (!r.ok()) ++report.failed_points;
    }
    return report;
}

std::vector<CVec> shell_points(int dimension, int count, double inner, double outer, const CVec& center) {
    if (dimension < 1 || count < 0 || !(0.0 <= inner && inner <= outer))
        throw PreconditionError("shell_points needs 0 <= inner <= outer");
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const CVec c = center.size() == 0 ? CVec::Zero(dimension) : center;
    std::vector<CVec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        CVec dir(dimension);
        for (int j = 0; j < dimension; ++j) dir(j) = cplx(normal(rng), normal(rng));
        const double r = inner + (outer - inner) * uniform(rng);
        out.push_back(c + (r / dir.norm()) * dir);
    }
    return out;
}

std::vector<CVec> tangent_base_points(double r2, int count) {
    if (!(r2 > 0.0 && r2 < 1.0)) throw PreconditionError("inner radius must lie in (0, 1)");
    std::vector<CVec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) {
        const double a = 0.125 * kPi + 0.25 * kPi * halton(k, 2);
        const double b1 = 2.0 * kPi * halton(k, 3);
        const double b2 = 2.0 * kPi * halton(k, 5);
        CVec p(2);
        p << r2 * std::cos(a) * std::polar(1.0, b1), r2 * std::sin(a) * std::polar(1.0, b2);
        out.push_back(p);
    }
    return out;
}

AnalyticDisc tangent_line_disc(const CVec& base_point, const CircleGrid& grid) {
    if (base_point.size() != 2) throw PreconditionError("tangent lines are built in C^2");
    const double r = base_point.norm();
    if (!(r > 0.0 && r < 1.0)) throw PreconditionError("base point must lie in the punctured unit ball");
    CVec v(2);
    v << -std::conj(base_point(1)), std::conj(base_point(0));
    v /= r;
    Eigen::MatrixXcd coeffs(2, 2);
    coeffs.col(0) = base_point;
    coeffs.col(1) = std::sqrt(1.0 - r * r) * v;
    return AnalyticDisc(coeffs, grid, make_ball(CVec::Zero(2), 1.0));
}

CounterexampleCase tangent_line_family(const BoundaryFunction& f, double r2, int discs, const CircleGrid& grid) {
    CounterexampleCase out;
    out.function = f.label;
    out.r2 = r2;
    out.discs = discs;
    out.base_points = tangent_base_points(r2, discs);
    out.min_defect = discs > 0 ? INFINITY : 0.0;
    for (const CVec& p : out.base_points) {
        const AnalyticDisc disc = tangent_line_disc(p, grid);
        const ExtensionReport r = verify_disc(f, disc);
        for (const cplx& m : r.morera) out.max_morera = std::max(out.max_morera, std::abs(m));
        out.defects.push_back(r.defect);
        out.min_defect = std::min(out.min_defect, r.defect);
        out.max_defect = std::max(out.max_defect, r.defect);
    }
    return out;
}

CounterexampleReport counterexample_harness(int discs, int grid_size, const std::vector<double>& sweep_radii) {
    const CircleGrid grid(grid_size);
    const BoundaryFunction f = named_function("z1_conj_z2_sq");
    const double exceptional = std::sqrt(1.0 / 3.0);
    CounterexampleReport report;
    report.grid = grid_size;
    report.exceptional = tangent_line_family(f, exceptional, discs, grid);
    report.control = tangent_line_family(f, 0.5, discs, grid);
    report.holomorphic = tangent_line_family(named_function("z1_z2_sq"), exceptional, discs, grid);
    for (double r2 : sweep_radii) report.sweep.push_back(tangent_line_family(f, r2, discs, grid));
    return report;
}

}  // namespace geodisc
