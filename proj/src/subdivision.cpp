#include "tropcount/subdivision.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tropcount/errors.hpp"
#include "tropcount/simplex.hpp"

namespace tropcount {

std::string to_string(AdmissibilityMode mode) { return mode == AdmissibilityMode::Nodal ? "nodal" : "cusp"; }

AdmissibilityMode parse_mode(const std::string& text) {
    if (text == "nodal") return AdmissibilityMode::Nodal;
    if (text == "cusp") return AdmissibilityMode::OneCusp;
    throw std::invalid_argument("unknown mode '" + text + "' (expected nodal|cusp)");
}

namespace {

bool segment_on_boundary(const LatticePolygon& polygon, LatticePoint a, LatticePoint b) {
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        if (orient(polygon.vertex(i), polygon.vertex(i + 1), a) == 0 &&
            orient(polygon.vertex(i), polygon.vertex(i + 1), b) == 0)
            return true;
    }
    return false;
}

}  // namespace

Subdivision::Subdivision(LatticePolygon polygon, std::vector<LatticePolygon> cells)
    : polygon_(std::move(polygon)), cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("Subdivision: no cells");
    std::sort(cells_.begin(), cells_.end());

    Int area = 0;
    for (const auto& c : cells_) {
        for (const auto& v : c.vertices())
            if (!polygon_.contains(v))
                throw std::invalid_argument("Subdivision: cell " + to_string(c) + " leaves the polygon");
        area += normalized_area(c);
    }
    if (area != normalized_area(polygon_)) throw std::invalid_argument("Subdivision: cell areas do not sum up");

    for (std::size_t i = 0; i < cells_.size(); ++i) {
        for (std::size_t j = i + 1; j < cells_.size(); ++j) {
            if (interiors_overlap(cells_[i], cells_[j]))
                throw std::invalid_argument("Subdivision: overlapping cells " + to_string(cells_[i]) + " and " +
                                            to_string(cells_[j]));
        }
    }
    for (const auto& c : cells_) {
        for (const auto& v : c.vertices()) vertices_.push_back(v);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (const auto& c : cells_) {
        for (const auto& v : vertices_) {
            if (c.contains(v) && !c.has_vertex(v))
                throw std::invalid_argument("Subdivision: vertex " + to_string(v) + " touches cell " + to_string(c) +
                                            " without being its vertex");
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    cell_edges_.resize(cells_.size());
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        const auto& c = cells_[ci];
        for (std::size_t k = 0; k < c.size(); ++k) {
            std::size_t a = vertex_index(c.vertex(k)), b = vertex_index(c.vertex(k + 1));
            auto key = std::minmax(a, b);
            auto [it, fresh] = index.emplace(key, 0);
            if (fresh) {
                it->second = edges_.size();
                edges_.push_back({key.first, key.second, {static_cast<int>(ci), -1}});
            } else {
                auto& e = edges_[it->second];
                if (e.cells[1] >= 0) throw std::invalid_argument("Subdivision: edge shared by three cells");
                e.cells[1] = static_cast<int>(ci);
            }
        }
    }
    // renumber edges in (a,b) order
    std::vector<std::size_t> order(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(edges_[x].a, edges_[x].b) < std::tie(edges_[y].a, edges_[y].b);
    });
    std::vector<SubdivisionEdge> sorted;
    std::vector<std::size_t> new_id(edges_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_id[order[i]] = i;
        sorted.push_back(edges_[order[i]]);
    }
    edges_ = std::move(sorted);
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
        const auto& c = cells_[ci];
        for (std::size_t k = 0; k < c.size(); ++k) {
            std::size_t a = vertex_index(c.vertex(k)), b = vertex_index(c.vertex(k + 1));
            cell_edges_[ci].push_back(new_id[index.at(std::minmax(a, b))]);
        }
    }
    for (const auto& e : edges_) {
        bool on_bd = segment_on_boundary(polygon_, vertices_[e.a], vertices_[e.b]);
        if (on_bd != e.on_boundary())
            throw std::invalid_argument("Subdivision: edge " + to_string(vertices_[e.a]) + "-" +
                                        to_string(vertices_[e.b]) + " has the wrong number of cells");
    }
}

std::optional<std::size_t> Subdivision::find_vertex(LatticePoint p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Subdivision::vertex_index(LatticePoint p) const {
    auto i = find_vertex(p);
    if (!i) throw std::out_of_range("Subdivision: " + to_string(p) + " is not a vertex");
    return *i;
}

std::optional<std::size_t> Subdivision::find_edge(LatticePoint p, LatticePoint q) const {
    auto a = find_vertex(p), b = find_vertex(q);
    if (!a || !b) return std::nullopt;
    auto key = std::minmax(*a, *b);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].a == key.first && edges_[i].b == key.second) return i;
    return std::nullopt;
}

std::size_t Subdivision::internal_edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const SubdivisionEdge& e) { return !e.on_boundary(); }));
}

std::string to_string(const Subdivision& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.cells().size(); ++i) os << (i ? " " : "") << to_string(s.cells()[i]);
    os << "]";
    return os.str();
}

LiftingFunction LiftingFunction::normalized() const {
    LiftingFunction out = *this;
    if (values.empty()) return out;
    Rational shift = values.begin()->second;
    for (auto& [p, v] : out.values) v -= shift;
    return out;
}

RationalMatrix coplanarity_system(const Subdivision& s) {
    RationalMatrix out(0, s.vertices().size());
    for (const auto& c : s.cells()) {
        if (c.size() <= 3) continue;
        LatticePoint v0 = c.vertex(0), v1 = c.vertex(1), v2 = c.vertex(2);
        Int det = cross(v1 - v0, v2 - v0);
        for (std::size_t j = 3; j < c.size(); ++j) {
            LatticePoint vj = c.vertex(j);
            Int c1 = cross(vj - v0, v2 - v0);
            Int c2 = cross(v1 - v0, vj - v0);
            std::vector<Rational> row(s.vertices().size());
            row[s.vertex_index(vj)] += det;
            row[s.vertex_index(v0)] -= det - c1 - c2;
            row[s.vertex_index(v1)] -= c1;
            row[s.vertex_index(v2)] -= c2;
            out.append_row(row);
        }
    }
    return out;
}

namespace {

LatticePoint off_line_vertex(const LatticePolygon& cell, LatticePoint a, LatticePoint b) {
    for (const auto& v : cell.vertices())
        if (orient(a, b, v) != 0) return v;
    throw InternalError("cell without a vertex off its own edge");
}

}  // namespace

RationalMatrix folding_system(const Subdivision& s) {
    RationalMatrix out(0, s.vertices().size());
    for (const auto& e : s.edges()) {
        if (e.on_boundary()) continue;
        LatticePoint a = s.vertex(e.a), b = s.vertex(e.b);
        LatticePoint c = off_line_vertex(s.cells()[e.cells[0]], a, b);
        LatticePoint d = off_line_vertex(s.cells()[e.cells[1]], a, b);
        // d = a + lb (b - a) + lc (c - a); convexity: nu(d) above the plane of the first cell
        Int det = cross(b - a, c - a);
        Int cb = cross(d - a, c - a);
        Int cc = cross(b - a, d - a);
        Int sign = det > 0 ? 1 : -1;
        std::vector<Rational> row(s.vertices().size());
        row[e.a] -= sign * (det - cb - cc);
        row[e.b] -= sign * cb;
        row[s.vertex_index(c)] -= sign * cc;
        row[s.vertex_index(d)] += sign * det;
        out.append_row(row);
    }
    return out;
}

std::pair<Subdivision, LiftingFunction> lower_hull_subdivision(std::span<const LatticePoint> support,
                                                               const std::map<LatticePoint, Rational>& lift) {
    std::vector<LatticePoint> pts(support.begin(), support.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    std::vector<Rational> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = lift.at(pts[i]);

    LatticePolygon polygon = LatticePolygon::convex_hull(pts);  // throws on collinear support

    struct Face {
        LatticePolygon cell;
        Rational alpha, beta, gamma;  // z = alpha x + beta y + gamma
    };
    std::vector<Face> faces;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                LatticePoint p = pts[i], q = pts[j], r = pts[k];
                Int det = cross(q - p, r - p);
                if (det == 0) continue;
                // solve for the plane through the three lifted points
                Rational dq = h[j] - h[i], dr = h[k] - h[i];
                LatticePoint u = q - p, v = r - p;
                Rational alpha = (dq * v.y - dr * u.y) / det;
                Rational beta = (dr * u.x - dq * v.x) / det;
                Rational gamma = h[i] - alpha * p.x - beta * p.y;
                std::vector<std::size_t> on_plane;
                bool lower = true;
                for (std::size_t t = 0; t < n; ++t) {
                    Rational z = alpha * pts[t].x + beta * pts[t].y + gamma;
                    int c = cmp(h[t], z);
                    if (c < 0) {
                        lower = false;
                        break;
                    }
                    if (c == 0) on_plane.push_back(t);
                }
                if (!lower || !seen.insert(on_plane).second) continue;
                std::vector<LatticePoint> face_pts;
                for (auto t : on_plane) face_pts.push_back(pts[t]);
                faces.push_back({LatticePolygon::convex_hull(face_pts), alpha, beta, gamma});
            }
        }
    }

    std::vector<LatticePolygon> cells;
    for (const auto& f : faces) cells.push_back(f.cell);
    Subdivision sub(polygon, std::move(cells));

    LiftingFunction nu;
    for (std::size_t t = 0; t < n; ++t) {
        for (const auto& f : faces) {
            if (f.cell.contains(pts[t])) {
                nu.values[pts[t]] = f.alpha * pts[t].x + f.beta * pts[t].y + f.gamma;
                break;
            }
        }
    }
    return {std::move(sub), std::move(nu)};
}

std::optional<LiftingFunction> is_regular(const Subdivision& s) {
    const std::size_t nv = s.vertices().size();
    RationalMatrix eq = coplanarity_system(s);
    const auto& first = s.cells().front();
    for (std::size_t k = 0; k < 3; ++k) {
        std::vector<Rational> pin(nv);
        pin[s.vertex_index(first.vertex(k))] = 1;
        eq.append_row(pin);
    }
    std::vector<std::vector<Rational>> basis = nullspace(eq);
    RationalMatrix fold = folding_system(s);

    std::vector<std::vector<Rational>> A(fold.rows(), std::vector<Rational>(basis.size()));
    for (std::size_t i = 0; i < fold.rows(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) A[i][j] = dot(fold.row(i), basis[j]);
    MarginResult<Rational> lp = maximize_margin<Rational>(A, std::vector<Rational>(fold.rows()));
    if (!lp.strictly_feasible()) return std::nullopt;

    LiftingFunction nu;
    for (std::size_t v = 0; v < nv; ++v) {
        Rational value = 0;
        for (std::size_t j = 0; j < basis.size(); ++j) value += basis[j][v] * lp.point[j];
        nu.values[s.vertex(v)] = value;
    }
    return nu;
}

RankReport rank_report(const Subdivision& s) {
    RankReport rep;
    const long nv = static_cast<long>(s.vertices().size());
    RationalMatrix eq = coplanarity_system(s);
    rep.rank = nv - static_cast<long>(rank(eq)) - 1;
    long excess = 0;
    for (const auto& c : s.cells()) {
        const std::size_t k = c.size();
        excess += static_cast<long>(k) - 3;
        ++rep.gon_counts[k];
        CellKind kind = classify_cell(c).kind;
        if (kind != CellKind::Triangle && kind != CellKind::Parallelogram) rep.simple = false;
        if (k % 2 == 0) {
            bool all_parallel = true;
            for (std::size_t i = 0; i < k / 2; ++i)
                if (cross(c.edge_vector(i), c.edge_vector(i + k / 2)) != 0) all_parallel = false;
            if (all_parallel) ++rep.parallel_counts[k];
        }
    }
    rep.rank_exp = nv - 1 - excess;
    rep.d = rep.rank - rep.rank_exp;

    long bound = -1;
    for (const auto& [k, count] : rep.gon_counts) {
        if (k < 4) continue;
        const long m = static_cast<long>(k / 2);
        if (k % 2 == 0) {
            auto it = rep.parallel_counts.find(k);
            long par = it == rep.parallel_counts.end() ? 0 : it->second;
            bound += (2 * m - 3) * count - par;
        } else {
            bound += (2 * m - 2) * count;
        }
    }
    rep.d_bound = bound;
    if (rep.simple) {
        if (rep.d != 0)
            throw InternalError("rank_report: d = " + std::to_string(rep.d) + " for a simple subdivision " +
                                to_string(s));
    } else if (rep.d < 0 || 2 * rep.d > bound) {
        throw InternalError("rank_report: d = " + std::to_string(rep.d) + " outside [0, " + std::to_string(bound) +
                            "/2] for " + to_string(s));
    }
    return rep;
}

Admissibility admissible(const Subdivision& s, AdmissibilityMode mode) {
    for (const auto& p : lattice_points(s.polygon()).boundary) {
        if (!s.find_vertex(p)) return {false, "boundary lattice point " + to_string(p) + " is not a vertex"};
    }
    int quads = 0;
    for (const auto& c : s.cells()) {
        CellClass cls = classify_cell(c);
        switch (cls.kind) {
            case CellKind::Triangle:
            case CellKind::Parallelogram:
                break;
            case CellKind::GenericQuadrilateral:
                if (mode == AdmissibilityMode::Nodal)
                    return {false, "cell " + to_string(c) + " is a generic quadrilateral (nodal mode)"};
                ++quads;
                break;
            case CellKind::Trapezoid:
                return {false, "trapezoid forbidden: " + to_string(c) + " has a pair of parallel edges"};
            case CellKind::Other:
                return {false, "cell " + to_string(c) + " is " + to_string(cls)};
        }
    }
    if (mode == AdmissibilityMode::OneCusp && quads != 1)
        return {false, "expected exactly one generic quadrilateral, found " + std::to_string(quads)};
    return {true, ""};
}

}  // namespace tropcount
