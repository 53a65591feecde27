#include "tropcount/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tropcount/errors.hpp"
#include "tropcount/log.hpp"
#include "tropcount/quadcusp.hpp"

namespace tropcount {

bool AcceptanceReport::passed() const {
    for (const auto& r : records)
        if (!r.passed) return false;
    return !records.empty();
}

const std::vector<std::string>& acceptance_suites() {
    static const std::vector<std::string> names{"nodal-oracle", "cusp-invariance", "quad-oracle",
                                                "rank-audit",   "structural",      "obstruction"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

LatticePolygon degree_triangle(Int d) { return LatticePolygon({{0, 0}, {d, 0}, {0, d}}); }

constexpr double kNodalSeconds = 300;    // degree 3
constexpr double kCuspSeconds = 1800;    // degree 3, all configurations
constexpr double kQuadSeconds = 10;

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << " s";
    return os.str();
}

}  // namespace

LatticePolygon cusp_test_polygon(const std::string& name) {
    if (name == "degree-3") return degree_triangle(3);
    if (name == "Q") return LatticePolygon({{0, 0}, {2, 0}, {2, 1}, {0, 2}});
    throw std::invalid_argument("unknown cusp test polygon '" + name + "'");
}

struct AcceptanceSession::Impl {
    AcceptanceOptions options;
    std::map<int, CountResult> nodal;
    std::map<int, double> nodal_seconds;
    std::map<std::string, std::vector<CountResult>> cusp;
    std::map<std::string, double> cusp_seconds;
    std::map<std::string, std::string> cusp_errors;

    AcceptanceReport nodal_oracle(AcceptanceSession& self);
    AcceptanceReport cusp_invariance(AcceptanceSession& self);
    AcceptanceReport quad_oracle();
    AcceptanceReport rank_audit();
    AcceptanceReport structural(AcceptanceSession& self);
    AcceptanceReport obstruction();
};

AcceptanceSession::AcceptanceSession(AcceptanceOptions options) : impl_(std::make_unique<Impl>()) {
    impl_->options = options;
}

AcceptanceSession::~AcceptanceSession() = default;

const CountResult& AcceptanceSession::nodal_result(int degree) {
    auto it = impl_->nodal.find(degree);
    if (it != impl_->nodal.end()) return it->second;
    auto t0 = Clock::now();
    CountResult r = random_generic_configuration(degree_triangle(degree), AdmissibilityMode::Nodal,
                                                 impl_->options.first_seed)
                        .result;
    impl_->nodal_seconds[degree] = since(t0);
    return impl_->nodal.emplace(degree, std::move(r)).first->second;
}

const std::vector<CountResult>& AcceptanceSession::cusp_results(const std::string& name) {
    auto it = impl_->cusp.find(name);
    if (it != impl_->cusp.end()) return it->second;
    auto t0 = Clock::now();
    std::vector<CountResult> out;
    CurveCounter counter(cusp_test_polygon(name), AdmissibilityMode::OneCusp);
    for (int i = 0; i < impl_->options.seeds; ++i) {
        std::uint64_t seed = impl_->options.first_seed + static_cast<std::uint64_t>(i);
        try {
            out.push_back(random_generic_configuration(counter, seed).result);
            log(LogLevel::Info, "acceptance: " + name + " seed " + std::to_string(seed) + " total " +
                                    out.back().total.get_str());
        } catch (const NonGenericConfiguration& err) {
            impl_->cusp_errors[name] += "seed " + std::to_string(seed) + ": " + err.what() + "; ";
        }
    }
    impl_->cusp_seconds[name] = since(t0);
    return impl_->cusp.emplace(name, std::move(out)).first->second;
}

AcceptanceReport AcceptanceSession::Impl::nodal_oracle(AcceptanceSession& self) {
    AcceptanceReport rep{"nodal-oracle", {}, 0};
    for (int d = 1; d <= 3; ++d) {
        const CountResult& r = self.nodal_result(d);
        Integer expected = kontsevich_oracle(d);
        rep.records.push_back({"nodal-oracle", "d=" + std::to_string(d), r.total == expected,
                               "tropical " + r.total.get_str() + ", Kontsevich " + expected.get_str() + ", " +
                                   fmt_seconds(nodal_seconds[d])});
    }
    rep.records.push_back({"nodal-oracle", "runtime d=3", nodal_seconds[3] <= kNodalSeconds,
                           fmt_seconds(nodal_seconds[3]) + " (limit " + fmt_seconds(kNodalSeconds) + ")"});
    return rep;
}

AcceptanceReport AcceptanceSession::Impl::cusp_invariance(AcceptanceSession& self) {
    AcceptanceReport rep{"cusp-invariance", {}, 0};
    for (const std::string name : {"degree-3", "Q"}) {
        const auto& results = self.cusp_results(name);
        std::string totals;
        bool same = results.size() >= 5;
        for (const auto& r : results) {
            totals += (totals.empty() ? "" : " ") + r.total.get_str();
            if (r.total != results.front().total) same = false;
        }
        std::string detail = std::to_string(results.size()) + " configurations, totals [" + totals + "]";
        if (cusp_errors.count(name)) detail += "; " + cusp_errors[name];
        rep.records.push_back({"cusp-invariance", name, same, detail});
    }
    rep.records.push_back({"cusp-invariance", "runtime degree-3", cusp_seconds["degree-3"] <= kCuspSeconds,
                           fmt_seconds(cusp_seconds["degree-3"]) + " (limit " + fmt_seconds(kCuspSeconds) + ")"});
    return rep;
}

AcceptanceReport AcceptanceSession::Impl::quad_oracle() {
    AcceptanceReport rep{"quad-oracle", {}, 0};
    auto t0 = Clock::now();
    std::mt19937_64 rng(options.quad_seed);
    std::uniform_int_distribution<Int> dist(1, 12);
    int adjacent_ok = 0, opposite_ok = 0, tried = 0;
    std::string first_bad;
    while (tried < options.quad_instances) {
        QuadParameters qp{dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
        std::optional<NormalQuadrilateral> quad;
        try {
            quad.emplace(qp);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++tried;
        Integer adj = count_adjacent(*quad), adj_oracle = binomial_oracle(*quad);
        Integer opp = count_opposite(*quad), opp_oracle = binomial_oracle_opposite(*quad);
        adjacent_ok += adj == adj_oracle;
        opposite_ok += opp == opp_oracle;
        if ((adj != adj_oracle || opp != opp_oracle) && first_bad.empty())
            first_bad = "m,p,q,r,s = " + std::to_string(qp.m) + "," + std::to_string(qp.p) + "," +
                        std::to_string(qp.q) + "," + std::to_string(qp.r) + "," + std::to_string(qp.s);
    }
    double secs = since(t0);
    auto frac = [&](int ok) { return std::to_string(ok) + "/" + std::to_string(tried) + " matched"; };
    rep.records.push_back({"quad-oracle", "count_adjacent", adjacent_ok == tried,
                           frac(adjacent_ok) + (first_bad.empty() ? "" : "; first mismatch " + first_bad)});
    rep.records.push_back({"quad-oracle", "count_opposite", opposite_ok == tried, frac(opposite_ok)});
    rep.records.push_back({"quad-oracle", "runtime", secs <= kQuadSeconds,
                           fmt_seconds(secs) + " (limit " + fmt_seconds(kQuadSeconds) + ")"});
    return rep;
}

AcceptanceReport AcceptanceSession::Impl::rank_audit() {
    AcceptanceReport rep{"rank-audit", {}, 0};
    struct Case {
        std::string name;
        LatticePolygon polygon;
        AdmissibilityMode mode;
    };
    std::vector<Case> cases{{"nodal d=1", degree_triangle(1), AdmissibilityMode::Nodal},
                            {"nodal d=2", degree_triangle(2), AdmissibilityMode::Nodal},
                            {"nodal d=3", degree_triangle(3), AdmissibilityMode::Nodal},
                            {"cusp degree-3", cusp_test_polygon("degree-3"), AdmissibilityMode::OneCusp},
                            {"cusp Q", cusp_test_polygon("Q"), AdmissibilityMode::OneCusp}};
    for (const auto& c : cases) {
        long audited = 0, simple = 0, bad = 0;
        std::string first_bad;
        for (const auto& s : enumerate_subdivision_shapes(c.polygon, c.mode)) {
            if (!admissible(s, c.mode) || !is_regular(s)) continue;
            ++audited;
            std::string problem;
            try {
                RankReport r = rank_report(s);
                if (r.simple) {
                    ++simple;
                    if (r.rank != r.rank_exp)
                        problem = "rank " + std::to_string(r.rank) + " != rank_exp " + std::to_string(r.rank_exp);
                } else if (r.d < 0 || 2 * r.d > r.d_bound) {
                    problem = "d = " + std::to_string(r.d) + " outside [0, " + std::to_string(r.d_bound) + "/2]";
                }
            } catch (const InternalError& err) {
                problem = err.what();
            }
            if (!problem.empty()) {
                ++bad;
                if (first_bad.empty()) first_bad = to_string(s) + ": " + problem;
            }
        }
        rep.records.push_back({"rank-audit", c.name, bad == 0 && audited > 0,
                               std::to_string(audited) + " regular admissible subdivisions (" +
                                   std::to_string(simple) + " simple), " + std::to_string(bad) + " violations" +
                                   (first_bad.empty() ? "" : "; " + first_bad)});
    }
    return rep;
}

namespace {

// Empty string when every structural invariant holds for the curve.
std::string check_curve(const SolvedCurve& sc, const MarkedConfiguration& marks, AdmissibilityMode mode) {
    const PlaneTropicalCurve& c = sc.curve;
    for (std::size_t v = 0; v < c.vertices().size(); ++v)
        if (c.balance(v) != LatticePoint{0, 0}) return "unbalanced vertex " + std::to_string(v);

    PlaneTropicalCurve back = corner_locus(polynomial_from_lift(sc.lift()));
    if (back.dual() != sc.subdivision()) return "corner locus has a different dual subdivision";
    for (std::size_t v = 0; v < c.vertices().size(); ++v)
        if (!(back.vertices()[v].position == c.vertices()[v].position)) return "corner locus moved a vertex";

    OrientedForest f = orient(c, marks, mode);
    for (std::size_t v = 0; v < f.indegree.size(); ++v)
        if (f.indegree[v] != 2) return "vertex " + std::to_string(v) + " has indegree " + std::to_string(f.indegree[v]);

    for (std::size_t i = 0; i < marks.size(); ++i) {
        auto inc = incidence(c, marks.points[i]);
        if (!inc || inc->kind != Incidence::Kind::Edge || !inc->interior || inc->index != sc.assignment[i])
            return "marked point " + std::to_string(i) + " is not interior to its edge";
    }

    Integer w = 1;
    for (const auto& cell : sc.subdivision().cells())
        if (cell.size() == 3) w *= normalized_area(cell);
    if (mode == AdmissibilityMode::OneCusp) {
        if (!f.sigma) return "no distinguished quadrilateral edges";
        const Subdivision& s = sc.subdivision();
        LatticeSegment a = s.segment(f.sigma->first), b = s.segment(f.sigma->second);
        w *= abs(Integer(cross(a.b - a.a, b.b - b.a)));
    }
    if (w <= 0) return "non-positive weight";
    if (w != sc.weight) return "weight " + sc.weight.get_str() + " differs from recomputed " + w.get_str();
    return {};
}

}  // namespace

AcceptanceReport AcceptanceSession::Impl::structural(AcceptanceSession& self) {
    AcceptanceReport rep{"structural", {}, 0};
    auto audit = [&](const std::string& name, const CountResult& r) {
        long bad = 0;
        std::string first_bad;
        for (const auto& sc : r.curves) {
            std::string problem;
            try {
                problem = check_curve(sc, r.configuration, r.mode);
            } catch (const Error& err) {
                problem = err.what();
            } catch (const std::invalid_argument& err) {
                problem = err.what();
            }
            if (!problem.empty() && bad++ == 0) first_bad = problem;
        }
        rep.records.push_back({"structural", name, bad == 0,
                               std::to_string(r.curves.size()) + " curves, " + std::to_string(bad) + " failures" +
                                   (first_bad.empty() ? "" : "; " + first_bad)});
    };
    for (int d = 1; d <= 3; ++d) audit("nodal d=" + std::to_string(d), self.nodal_result(d));
    for (const std::string name : {"degree-3", "Q"}) {
        const auto& results = self.cusp_results(name);
        for (std::size_t i = 0; i < results.size(); ++i)
            audit("cusp " + name + " #" + std::to_string(i + 1), results[i]);
    }
    return rep;
}

AcceptanceReport AcceptanceSession::Impl::obstruction() {
    AcceptanceReport rep{"obstruction", {}, 0};
    int ok = 0, total = 0;
    for (Int p = 1; p <= 20; ++p)
        for (Int q = 1; q <= 20; ++q) {
            for (const auto& cert : {nonexistence_certificate(TrapezoidParams{p, q, 0, 1}),
                                     nonexistence_certificate(TriangleParams{p, q, 1})}) {
                ++total;
                ok += cert.lower - cert.upper == 1 && cert.forbidden();
            }
        }
    rep.records.push_back({"obstruction", "LB - UB = 1 on [1,20]^2", ok == total,
                           std::to_string(ok) + "/" + std::to_string(total) + " certificates"});
    for (const std::string name : {"degree-3", "Q"}) {
        long subs = 0, trapezoids = 0;
        for (const auto& s : enumerate_subdivision_shapes(cusp_test_polygon(name), AdmissibilityMode::OneCusp)) {
            if (!admissible(s, AdmissibilityMode::OneCusp)) continue;
            ++subs;
            for (const auto& cell : s.cells()) trapezoids += classify_cell(cell).kind == CellKind::Trapezoid;
        }
        rep.records.push_back({"obstruction", "no trapezoid cells, " + name, trapezoids == 0 && subs > 0,
                               std::to_string(subs) + " admissible subdivisions, " + std::to_string(trapezoids) +
                                   " trapezoid cells"});
    }
    return rep;
}

AcceptanceReport AcceptanceSession::run(const std::string& suite) {
    auto t0 = Clock::now();
    AcceptanceReport rep;
    if (suite == "nodal-oracle") rep = impl_->nodal_oracle(*this);
    else if (suite == "cusp-invariance") rep = impl_->cusp_invariance(*this);
    else if (suite == "quad-oracle") rep = impl_->quad_oracle();
    else if (suite == "rank-audit") rep = impl_->rank_audit();
    else if (suite == "structural") rep = impl_->structural(*this);
    else if (suite == "obstruction") rep = impl_->obstruction();
    else throw std::invalid_argument("unknown acceptance suite '" + suite + "'");
    rep.seconds = since(t0);
    return rep;
}

AcceptanceReport run_acceptance(const std::string& suite, const AcceptanceOptions& options) {
    return AcceptanceSession(options).run(suite);
}

}  // namespace tropcount
