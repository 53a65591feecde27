#include "tropcount/tropical_curve.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "tropcount/errors.hpp"

namespace tropcount {

namespace {

LatticePoint off_line_vertex(const LatticePolygon& cell, LatticePoint a, LatticePoint b) {
    for (const auto& v : cell.vertices())
        if (orient(a, b, v) != 0) return v;
    throw InternalError("cell without a vertex off its own edge");
}

Rational rdot(LatticePoint u, const RationalPoint& p) { return p.x * u.x + p.y * u.y; }

}  // namespace

RationalPoint dual_vertex(const LatticePolygon& cell, const LiftingFunction& nu) {
    LatticePoint v0 = cell.vertex(0);
    LatticePoint u = cell.vertex(1) - v0, w = cell.vertex(2) - v0;
    Rational alpha = nu.at(cell.vertex(1)) - nu.at(v0);
    Rational beta = nu.at(cell.vertex(2)) - nu.at(v0);
    Int det = cross(u, w);
    RationalPoint x{(alpha * w.y - beta * u.y) / det, (beta * u.x - alpha * w.x) / det};
    for (const auto& v : cell.vertices()) {
        if (rdot(v - v0, x) != nu.at(v) - nu.at(v0))
            throw std::invalid_argument("lifted vertices of " + to_string(cell) + " are not coplanar");
    }
    return x;
}

PlaneTropicalCurve::PlaneTropicalCurve(Subdivision dual, LiftingFunction nu) : dual_(std::move(dual)), nu_(std::move(nu)) {
    const auto& cells = dual_.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) vertices_.push_back({dual_vertex(cells[i], nu_), i});

    for (const auto& e : dual_.edges()) {
        LatticePoint a = dual_.vertex(e.a), b = dual_.vertex(e.b);
        LatticePoint normal = primitive({(b - a).y, -(b - a).x});
        CurveEdge ce;
        ce.tail = static_cast<std::size_t>(e.cells[0]);
        ce.weight = integer_length(LatticeSegment(a, b));
        if (e.on_boundary()) {
            LatticePoint c = off_line_vertex(cells[ce.tail], a, b);
            ce.direction = dot(normal, c - a) > 0 ? -normal : normal;
        } else {
            ce.head = static_cast<std::size_t>(e.cells[1]);
            LatticePoint d = off_line_vertex(cells[*ce.head], a, b);
            ce.direction = dot(normal, d - a) > 0 ? normal : -normal;
            const RationalPoint& p = vertices_[ce.tail].position;
            const RationalPoint& q = vertices_[*ce.head].position;
            RationalPoint diff{q.x - p.x, q.y - p.y};
            bool parallel = diff.x * ce.direction.y == diff.y * ce.direction.x;
            if (!parallel || rdot(ce.direction, diff) <= 0)
                throw std::invalid_argument("lift does not bend convexly across " + to_string(a) + "-" + to_string(b));
        }
        edges_.push_back(ce);
    }
}

LatticePoint PlaneTropicalCurve::balance(std::size_t v) const {
    LatticePoint sum{0, 0};
    for (const auto& e : edges_) {
        if (e.tail == v) sum = sum + e.direction * e.weight;
        if (e.head && *e.head == v) sum = sum - e.direction * e.weight;
    }
    return sum;
}

TropicalPolynomial polynomial_from_lift(const LiftingFunction& nu) {
    TropicalPolynomial f;
    for (const auto& [w, v] : nu.values) f.coefficients[w] = -v;
    return f;
}

PlaneTropicalCurve corner_locus(const TropicalPolynomial& f) {
    std::vector<LatticePoint> support;
    std::map<LatticePoint, Rational> lift;
    for (const auto& [w, c] : f.coefficients) {
        support.push_back(w);
        lift[w] = -c;
    }
    auto [sub, hull] = lower_hull_subdivision(support, lift);
    LiftingFunction nu;
    for (const auto& v : sub.vertices()) nu.values[v] = hull.at(v);
    return PlaneTropicalCurve(std::move(sub), std::move(nu));
}

namespace {

}  // namespace

GammaGraph gamma_graph(const Subdivision& s) {
    GammaGraph g;
    std::vector<bool> parallelogram(s.cells().size());
    for (std::size_t i = 0; i < s.cells().size(); ++i) {
        CellKind kind = classify_cell(s.cells()[i]).kind;
        g.cell_base.push_back(g.is_leaf.size());
        g.is_leaf.push_back(false);
        if (kind == CellKind::Parallelogram) {
            parallelogram[i] = true;
            g.is_leaf.push_back(false);
        } else if (kind == CellKind::GenericQuadrilateral || kind == CellKind::Trapezoid) {
            g.quad_cell = i;
        } else if (kind != CellKind::Triangle) {
            throw std::invalid_argument("parameterizing graph undefined for cell " + to_string(s.cells()[i]));
        }
    }
    auto node = [&](std::size_t cell, std::size_t edge) {
        const auto& ce = s.cell_edges(cell);
        std::size_t k = static_cast<std::size_t>(std::find(ce.begin(), ce.end(), edge) - ce.begin());
        return g.cell_base[cell] + (parallelogram[cell] ? k % 2 : 0);
    };
    for (std::size_t e = 0; e < s.edges().size(); ++e) {
        const auto& se = s.edges()[e];
        std::size_t tail = node(static_cast<std::size_t>(se.cells[0]), e);
        std::size_t head;
        if (!se.on_boundary()) {
            head = node(static_cast<std::size_t>(se.cells[1]), e);
        } else {
            head = g.is_leaf.size();
            g.is_leaf.push_back(true);
        }
        g.ends.emplace_back(tail, head);
    }
    return g;
}

namespace {

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

GammaStructure gamma_structure(const PlaneTropicalCurve& c) {
    GammaGraph g = gamma_graph(c.dual());
    Dsu dsu(g.size());
    long cycles = 0;
    for (const auto& [a, b] : g.ends)
        if (!dsu.unite(a, b)) ++cycles;
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < g.size(); ++i) roots.insert(dsu.find(i));
    return {cycles, static_cast<long>(roots.size())};
}

long genus(const PlaneTropicalCurve& c) { return gamma_structure(c).betti; }

std::optional<Incidence> incidence(const PlaneTropicalCurve& c, const RationalPoint& x) {
    for (std::size_t v = 0; v < c.vertices().size(); ++v)
        if (c.vertices()[v].position == x) return Incidence{Incidence::Kind::Vertex, v, false};
    for (std::size_t e = 0; e < c.edges().size(); ++e) {
        const auto& ce = c.edges()[e];
        const RationalPoint& p = c.vertices()[ce.tail].position;
        RationalPoint diff{x.x - p.x, x.y - p.y};
        if (diff.x * ce.direction.y != diff.y * ce.direction.x) continue;
        Rational lambda = rdot(ce.direction, diff);
        if (lambda <= 0) continue;
        if (ce.head) {
            const RationalPoint& q = c.vertices()[*ce.head].position;
            Rational end = rdot(ce.direction, RationalPoint{q.x - p.x, q.y - p.y});
            if (lambda >= end) continue;
        }
        return Incidence{Incidence::Kind::Edge, e, true};
    }
    return std::nullopt;
}

MarkedConfiguration::MarkedConfiguration(std::vector<RationalPoint> pts) : points(std::move(pts)) {
    std::vector<RationalPoint> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("marked configuration has repeated points");
}

OrientedForest orient(const PlaneTropicalCurve& c, const MarkedConfiguration& marks, AdmissibilityMode mode) {
    const std::size_t ne = c.edges().size();
    OrientedForest out;
    out.direction.assign(ne, EdgeDirection::TowardHead);
    std::vector<bool> marked(ne, false);
    for (const auto& x : marks.points) {
        auto inc = incidence(c, x);
        if (!inc || inc->kind != Incidence::Kind::Edge || !inc->interior)
            throw ViolatedStructure("marked point is not interior to a curve edge");
        if (marked[inc->index]) throw ViolatedStructure("two marked points on one curve edge");
        marked[inc->index] = true;
        out.mark_edge.push_back(inc->index);
        out.direction[inc->index] = EdgeDirection::FromMark;
    }

    GammaGraph g = gamma_graph(c.dual());
    if (mode == AdmissibilityMode::OneCusp && !g.quad_cell)
        throw ViolatedStructure("no quadrilateral vertex in cusp mode");
    std::optional<std::size_t> cusp_node;
    if (mode == AdmissibilityMode::OneCusp) cusp_node = g.cell_base[*g.quad_cell];

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.size());  // (neighbor, edge)
    for (std::size_t e = 0; e < ne; ++e) {
        if (marked[e]) continue;
        auto [a, b] = g.ends[e];
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }

    std::vector<std::optional<std::size_t>> target(ne);  // node each unmarked edge points to
    std::vector<int> comp(g.size(), -1);

    // Edges point toward the sources of a breadth-first search; `blocked` is never entered.
    auto flow_toward = [&](const std::vector<std::size_t>& sources, std::optional<std::size_t> blocked) {
        std::deque<std::size_t> queue(sources.begin(), sources.end());
        std::set<std::size_t> seen(sources.begin(), sources.end());
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (auto [w, e] : adj[u]) {
                if (target[e] || (blocked && w == *blocked)) continue;
                target[e] = u;
                if (!seen.insert(w).second) throw ViolatedStructure("component of the marked curve has a cycle");
                queue.push_back(w);
            }
        }
        return seen;
    };

    for (std::size_t start = 0; start < g.size(); ++start) {
        if (comp[start] >= 0 || g.is_leaf[start]) continue;
        int id = static_cast<int>(out.components.size());
        std::vector<std::size_t> nodes{start}, leaves;
        std::set<std::size_t> edges;
        comp[start] = id;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (auto [w, e] : adj[nodes[i]]) {
                edges.insert(e);
                if (comp[w] < 0) {
                    comp[w] = id;
                    nodes.push_back(w);
                }
            }
        }
        for (auto n : nodes)
            if (g.is_leaf[n]) leaves.push_back(n);
        if (edges.size() + 1 != nodes.size()) throw ViolatedStructure("component of the marked curve has a cycle");
        out.components.emplace_back(edges.begin(), edges.end());

        bool has_cusp = cusp_node && comp[*cusp_node] == id;
        if (!has_cusp) {
            if (leaves.size() != 1)
                throw ViolatedStructure("component with " + std::to_string(leaves.size()) + " free ends");
            flow_toward(leaves, std::nullopt);
            continue;
        }
        if (leaves.size() != 2)
            throw ViolatedStructure("quadrilateral component with " + std::to_string(leaves.size()) + " free ends");
        std::set<std::size_t> path_nodes = flow_toward({leaves[0]}, cusp_node);
        path_nodes.merge(flow_toward({leaves[1]}, cusp_node));
        // the free-end path must pass through the quadrilateral vertex
        int path_sides = 0;
        for (auto [w, e] : adj[*cusp_node]) {
            if (path_nodes.count(w)) {
                target[e] = w;
                ++path_sides;
            }
        }
        if (path_sides != 2) throw ViolatedStructure("free-end path avoids the quadrilateral vertex");
        flow_toward({*cusp_node}, std::nullopt);
    }

    for (std::size_t e = 0; e < ne; ++e) {
        if (marked[e]) continue;
        if (!target[e]) throw InternalError("orient: unoriented edge");
        out.direction[e] = *target[e] == g.ends[e].second ? EdgeDirection::TowardHead : EdgeDirection::TowardTail;
    }

    out.indegree.assign(c.vertices().size(), 0);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& ce = c.edges()[e];
        switch (out.direction[e]) {
            case EdgeDirection::FromMark:
                ++out.indegree[ce.tail];
                if (ce.head) ++out.indegree[*ce.head];
                break;
            case EdgeDirection::TowardHead:
                if (ce.head) ++out.indegree[*ce.head];
                break;
            case EdgeDirection::TowardTail:
                ++out.indegree[ce.tail];
                break;
        }
    }
    for (std::size_t v = 0; v < out.indegree.size(); ++v)
        if (out.indegree[v] != 2)
            throw ViolatedStructure("vertex " + std::to_string(v) + " has indegree " + std::to_string(out.indegree[v]));

    if (cusp_node) {
        out.cusp_vertex = *g.quad_cell;
        std::vector<std::size_t> incoming;
        for (std::size_t e : c.dual().cell_edges(*g.quad_cell)) {
            const auto& ce = c.edges()[e];
            bool into = out.direction[e] == EdgeDirection::FromMark ||
                        (out.direction[e] == EdgeDirection::TowardHead && ce.head && *ce.head == *g.quad_cell) ||
                        (out.direction[e] == EdgeDirection::TowardTail && ce.tail == *g.quad_cell);
            if (into) incoming.push_back(e);
        }
        std::sort(incoming.begin(), incoming.end());
        out.sigma = std::make_pair(incoming[0], incoming[1]);
    }
    return out;
}

}  // namespace tropcount
