#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropcount/acceptance.hpp"
#include "tropcount/count.hpp"
#include "tropcount/errors.hpp"
#include "tropcount/io.hpp"
#include "tropcount/quadcusp.hpp"
#include "tropcount/svg.hpp"

namespace py = pybind11;
using namespace tropcount;

namespace {

using Vertices = std::vector<std::pair<Int, Int>>;
using Points = std::vector<std::pair<std::string, std::string>>;

LatticePolygon polygon(const Vertices& v) {
    std::vector<LatticePoint> pts;
    for (auto [x, y] : v) pts.push_back({x, y});
    return LatticePolygon(pts);
}

std::vector<std::pair<Int, Int>> pairs(const std::vector<LatticePoint>& pts) {
    std::vector<std::pair<Int, Int>> out;
    for (auto p : pts) out.emplace_back(p.x, p.y);
    return out;
}

// JSON text of the count, plus one SVG per curve when requested.
std::pair<std::string, std::vector<std::string>> count(const Vertices& vertices, const std::string& mode,
                                                       const std::optional<Points>& points, std::uint64_t seed,
                                                       bool svg, std::size_t max_cells) {
    LatticePolygon poly = polygon(vertices);
    CountOptions opt;
    opt.enumeration.max_cells = max_cells;
    CurveCounter counter(poly, parse_mode(mode), opt);
    CountResult r = [&] {
        if (!points) return random_generic_configuration(counter, seed).result;
        std::vector<RationalPoint> pts;
        for (const auto& [x, y] : *points) pts.push_back({parse_rational(x), parse_rational(y)});
        return counter.count(MarkedConfiguration(pts));
    }();
    std::vector<std::string> svgs;
    if (svg)
        for (const auto& c : r.curves) svgs.push_back(render_svg(c.curve, r.configuration));
    return {to_json(r).dump(), svgs};
}

NormalQuadrilateral quad(Int m, Int p, Int q, Int r, Int s) { return NormalQuadrilateral({m, p, q, r, s}); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tropical counts of rational nodal and one-cuspidal curves on toric surfaces";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidProblem>(m, "InvalidProblem", base.ptr());
    py::register_exception<NonGenericConfiguration>(m, "NonGenericConfiguration", base.ptr());
    py::register_exception<ViolatedStructure>(m, "ViolatedStructure", base.ptr());
    py::register_exception<DegenerateParameters>(m, "DegenerateParameters", base.ptr());
    py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());

    m.def("lattice_points", [](const Vertices& v) {
        auto lp = lattice_points(polygon(v));
        return std::make_pair(pairs(lp.boundary), pairs(lp.interior));
    }, py::arg("vertices"), "(boundary, interior) lattice points, each sorted");
    m.def("normalized_area", [](const Vertices& v) { return normalized_area(polygon(v)); }, py::arg("vertices"));
    m.def("problem_parameters", [](const Vertices& v) {
        auto p = problem_parameters(polygon(v));
        return std::make_pair(p.nodes, p.points);
    }, py::arg("vertices"), "(n, s): nodes and marked points for one cusp");
    m.def("marked_point_count", [](const Vertices& v, const std::string& mode) {
        return marked_point_count(polygon(v), parse_mode(mode));
    }, py::arg("vertices"), py::arg("mode"));
    m.def("kontsevich", [](int d) { return kontsevich_oracle(d).get_str(); }, py::arg("d"));

    m.def("_count", &count, py::arg("vertices"), py::arg("mode"), py::arg("points") = std::nullopt,
          py::arg("seed") = 1, py::arg("svg") = false, py::arg("max_cells") = 64,
          py::call_guard<py::gil_scoped_release>());

    m.def("count_adjacent", [](Int m_, Int p, Int q, Int r, Int s) { return count_adjacent(quad(m_, p, q, r, s)).get_str(); });
    m.def("count_opposite", [](Int m_, Int p, Int q, Int r, Int s) { return count_opposite(quad(m_, p, q, r, s)).get_str(); });
    m.def("binomial_oracle", [](Int m_, Int p, Int q, Int r, Int s) { return binomial_oracle(quad(m_, p, q, r, s)).get_str(); });
    m.def("_eta_xi", [](Int m_, Int p, Int q, Int r, Int s) {
        auto c = eta_xi(QuadParameters{m_, p, q, r, s});
        return std::make_pair(format_rational(c.eta), format_rational(c.xi));
    });
    m.def("_certificate", [](const std::string& shape, Int p, Int q, Int r, Int k) {
        NonexistenceCertificate c = shape == "trapezoid" ? nonexistence_certificate(TrapezoidParams{p, q, r, k})
                                                         : nonexistence_certificate(TriangleParams{p, q, r});
        return to_json(c).dump();
    });
    m.def("_run_acceptance", [](const std::string& suite) { return to_json(run_acceptance(suite)).dump(); },
          py::call_guard<py::gil_scoped_release>());
}
