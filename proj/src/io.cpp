#include "tropcount/io.hpp"

#include <fstream>
#include <sstream>

#include "tropcount/errors.hpp"

namespace tropcount {

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return SchemaError("malformed rational '" + std::string(text) + "'"); };
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
    if (num[0] == '+') num.remove_prefix(1);
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw bad();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

Int read_int(const Json& j) {
    if (!j.is_number_integer()) throw SchemaError("expected an integer, got " + j.dump());
    return j.get<Int>();
}

LatticePoint read_point(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("expected [x, y], got " + j.dump());
    return {read_int(j[0]), read_int(j[1])};
}

Rational read_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError("expected a \"p/q\" string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

Json point_json(LatticePoint p) { return Json::array({p.x, p.y}); }

Json rational_point_json(const RationalPoint& p) {
    return Json::array({format_rational(p.x), format_rational(p.y)});
}

Json cells_json(const Subdivision& s) {
    Json cells = Json::array();
    for (const auto& c : s.cells()) {
        Json cell = Json::array();
        for (const auto& v : c.vertices()) cell.push_back(point_json(v));
        cells.push_back(cell);
    }
    return cells;
}

Json nu_json(const LiftingFunction& nu) {
    Json out = Json::array();
    for (const auto& [p, v] : nu.values) out.push_back(Json::array({p.x, p.y, format_rational(v)}));
    return out;
}

Json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

template <class F>
auto schema_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& err) {
        throw SchemaError(err.what());
    }
}

}  // namespace

Json to_json(const LatticePolygon& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(point_json(v));
    return Json{{"vertices", verts}};
}

LatticePolygon polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw SchemaError("polygon JSON needs a \"vertices\" array");
    std::vector<LatticePoint> pts;
    for (const auto& v : j["vertices"]) pts.push_back(read_point(v));
    return schema_guard([&] { return LatticePolygon(pts); });
}

Json to_json(const Subdivision& s, const LiftingFunction* nu) {
    Json out{{"cells", cells_json(s)}};
    if (nu) out["nu"] = nu_json(*nu);
    return out;
}

std::pair<Subdivision, std::optional<LiftingFunction>> subdivision_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw SchemaError("subdivision JSON needs a \"cells\" array");
    std::vector<LatticePolygon> cells;
    std::vector<LatticePoint> all;
    for (const auto& c : j["cells"]) {
        if (!c.is_array()) throw SchemaError("cell must be an array of points");
        std::vector<LatticePoint> pts;
        for (const auto& v : c) pts.push_back(read_point(v));
        all.insert(all.end(), pts.begin(), pts.end());
        cells.push_back(schema_guard([&] { return LatticePolygon(pts); }));
    }
    Subdivision sub = schema_guard([&] { return Subdivision(LatticePolygon::convex_hull(all), cells); });
    std::optional<LiftingFunction> nu;
    if (j.contains("nu")) {
        nu.emplace();
        for (const auto& e : j["nu"]) {
            if (!e.is_array() || e.size() != 3) throw SchemaError("nu entries are [x, y, \"p/q\"]");
            nu->values[{read_int(e[0]), read_int(e[1])}] = read_rational(e[2]);
        }
    }
    return {std::move(sub), std::move(nu)};
}

Json to_json(const MarkedConfiguration& m) {
    Json pts = Json::array();
    for (const auto& p : m.points) pts.push_back(rational_point_json(p));
    return Json{{"points", pts}};
}

MarkedConfiguration configuration_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw SchemaError("points JSON needs a \"points\" array");
    std::vector<RationalPoint> pts;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("point must be [\"p/q\", \"p/q\"]");
        pts.push_back({read_rational(p[0]), read_rational(p[1])});
    }
    return schema_guard([&] { return MarkedConfiguration(pts); });
}

Json to_json(const PlaneTropicalCurve& c) {
    Json vertices = Json::array();
    for (const auto& v : c.vertices())
        vertices.push_back(Json{{"position", rational_point_json(v.position)}, {"cell", v.cell}});
    Json edges = Json::array(), rays = Json::array();
    for (std::size_t e = 0; e < c.edges().size(); ++e) {
        const auto& ce = c.edges()[e];
        Json item{{"from", ce.tail}};
        if (ce.head) item["to"] = *ce.head;
        item["direction"] = point_json(ce.direction);
        item["weight"] = ce.weight;
        item["dual_edge"] = e;
        (ce.head ? edges : rays).push_back(item);
    }
    return Json{{"vertices", vertices}, {"edges", edges}, {"rays", rays}};
}

Json to_json(const CountResult& r) {
    Json curves = Json::array();
    for (const auto& c : r.curves) {
        const Subdivision& s = c.subdivision();
        Json assignment = Json::array();
        for (auto e : c.assignment) {
            auto seg = s.segment(e);
            assignment.push_back(Json::array({point_json(seg.a), point_json(seg.b)}));
        }
        Json item{{"cells", cells_json(s)}, {"nu", nu_json(c.lift())}, {"assignment", assignment}};
        if (c.forest.sigma) {
            auto s1 = s.segment(c.forest.sigma->first), s2 = s.segment(c.forest.sigma->second);
            item["sigma"] = Json::array({Json::array({point_json(s1.a), point_json(s1.b)}),
                                         Json::array({point_json(s2.a), point_json(s2.b)})});
        }
        item["weight"] = integer_json(c.weight);
        curves.push_back(item);
    }
    return Json{{"mode", to_string(r.mode)},
                {"polygon", to_json(r.polygon)},
                {"points", to_json(r.configuration)["points"]},
                {"curves", curves},
                {"total", integer_json(r.total)}};
}

Json to_json(const NonexistenceCertificate& c) {
    return Json{{"shape", to_string(c.shape)},
                {"p", c.p},
                {"q", c.q},
                {"upper", integer_json(c.upper)},
                {"lower", integer_json(c.lower)},
                {"forbidden", c.forbidden()}};
}

Json to_json(const AcceptanceReport& r) {
    Json records = Json::array();
    for (const auto& c : r.records)
        records.push_back(Json{{"criterion", c.criterion}, {"instance", c.instance}, {"passed", c.passed},
                               {"detail", c.detail}});
    return Json{{"suite", r.suite}, {"passed", r.passed()}, {"seconds", r.seconds}, {"records", records}};
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& err) {
        throw SchemaError(path.string() + ": " + err.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace tropcount
