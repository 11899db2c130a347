#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "geodisc/circle.hpp"
#include "geodisc/errors.hpp"
#include "geodisc/lempert.hpp"
#include "geodisc/serialize.hpp"

namespace py = pybind11;
using namespace geodisc;

namespace {

SolverSettings make_settings(int modes, int grid, double tol) {
    SolverSettings s;
    s.modes = modes;
    s.grid = CircleGrid(grid);
    s.newton_tol = tol;
    s.validate();
    return s;
}

ConvexDomain parse_domain(const std::string& spec) { return domain_from_json(json::parse(spec)); }

}  // namespace

PYBIND11_MODULE(_geodisc, m) {
    m.doc() = "Complex geodesics of strongly convex domains";
    m.attr("__version__") = GEODISC_VERSION;

    auto base = py::register_exception<Error>(m, "GeodiscError");
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<SolverDivergence>(m, "SolverDivergence", base.ptr());
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base.ptr());

    py::class_<ConvexDomain>(m, "Domain")
        .def_static("from_json", &parse_domain, py::arg("spec"))
        .def_static("ball", [](const CVec& center, double radius) { return make_ball(center, radius); },
                    py::arg("center"), py::arg("radius") = 1.0)
        .def_property_readonly("dimension", &ConvexDomain::dimension)
        .def_property_readonly("kind", [](const ConvexDomain& d) { return to_string(d.kind()); })
        .def("rho", &ConvexDomain::rho)
        .def("grad", &ConvexDomain::grad);

    py::class_<AnalyticDisc>(m, "Disc")
        .def_property_readonly("coeffs", &AnalyticDisc::coeffs)
        .def_property_readonly("grid", [](const AnalyticDisc& d) { return d.grid().size(); })
        .def("__call__", &AnalyticDisc::operator(), py::arg("tau"))
        .def("derivative", &AnalyticDisc::derivative, py::arg("tau"))
        .def("attachment_residual", py::overload_cast<>(&AnalyticDisc::attachment_residual, py::const_))
        .def("to_json", [](const AnalyticDisc& d) { return disc_to_json(d).dump(); });

    m.def("hilbert_conjugate",
          [](const std::vector<double>& samples) {
              const TrigSeries u = analyze_real(CircleGrid(static_cast<int>(samples.size())), samples);
              std::vector<double> out;
              for (const cplx& c : synthesize(hilbert_conjugate(u))) out.push_back(c.real());
              return out;
          },
          py::arg("samples"), "Harmonic conjugate of real samples on an equispaced circle grid.");

    m.def("ball_geodesic",
          [](const CVec& z, const CVec& v, int modes, int grid) { return ball_geodesic(z, v, make_settings(modes, grid, 1e-10)); },
          py::arg("z"), py::arg("v"), py::arg("modes") = 64, py::arg("grid") = 256);

    m.def("geodesic_disc",
          [](const ConvexDomain& d, const CVec& z, const CVec& v, int modes, int grid, double tol) {
              return geodesic_disc(d, z, v, make_settings(modes, grid, tol)).disc;
          },
          py::arg("domain"), py::arg("z"), py::arg("v"), py::arg("modes") = 64, py::arg("grid") = 256,
          py::arg("tol") = 1e-10);

    m.def("kobayashi_distance",
          [](const ConvexDomain& d, const CVec& z, const CVec& w) { return kobayashi_distance(d, z, w); },
          py::arg("domain"), py::arg("z"), py::arg("w"));

    m.def("tangency_locus",
          [](const ConvexDomain& d1, const ConvexDomain& d2, const CVec& z, int steps) {
              std::vector<CVec> out;
              for (const TangencyPoint& p : trace_locus(d1, d2, z, steps).points) out.push_back(p.w);
              return out;
          },
          py::arg("domain1"), py::arg("domain2"), py::arg("z"), py::arg("steps") = 32);

    m.def("counterexample_json",
          [](int discs, int grid) { return counterexample_to_json(counterexample_harness(discs, grid)).dump(); },
          py::arg("discs") = 64, py::arg("grid") = 512);
}
