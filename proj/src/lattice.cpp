#include "tropcount/lattice.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tropcount/errors.hpp"

namespace tropcount {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

LatticePoint primitive(LatticePoint v) {
    Int g = gcd(v.x, v.y);
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    return {v.x / g, v.y / g};
}

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

LatticeSegment::LatticeSegment(LatticePoint first, LatticePoint second) : a(first), b(second) {
    if (a == b) throw std::invalid_argument("LatticeSegment: coincident endpoints " + to_string(a));
}

bool LatticeSegment::contains(LatticePoint p) const {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

Int integer_length(const LatticeSegment& s) {
    LatticePoint v = s.vector();
    return gcd(v.x, v.y);
}

LatticePolygon::LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw std::invalid_argument("LatticePolygon: fewer than 3 vertices");
    Int area2 = 0;
    for (std::size_t i = 0; i < n; ++i) area2 += cross(vertices_[i], vertices_[(i + 1) % n]);
    if (area2 == 0) throw std::invalid_argument("LatticePolygon: zero area");
    if (area2 < 0) std::reverse(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) <= 0)
            throw std::invalid_argument("LatticePolygon: not strictly convex at " +
                                        to_string(vertices_[(i + 1) % n]));
    }
    // locally convex chains winding more than once fail the fan test
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (orient(vertices_[0], vertices_[i], vertices_[i + 1]) <= 0)
            throw std::invalid_argument("LatticePolygon: self-intersecting");
    }
    auto least = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), least, vertices_.end());
}

LatticePolygon LatticePolygon::convex_hull(std::span<const LatticePoint> points) {
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw std::invalid_argument("convex_hull: fewer than 3 distinct points");
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return LatticePolygon(std::move(hull));
}

bool LatticePolygon::contains(LatticePoint p) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (orient(vertex(i), vertex(i + 1), p) < 0) return false;
    return true;
}

bool LatticePolygon::contains_interior(LatticePoint p) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (orient(vertex(i), vertex(i + 1), p) <= 0) return false;
    return true;
}

bool LatticePolygon::on_boundary(LatticePoint p) const { return contains(p) && !contains_interior(p); }

bool LatticePolygon::has_vertex(LatticePoint p) const {
    return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

int LatticePolygon::find_edge(LatticePoint a, LatticePoint b) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (vertex(i) == a && vertex(i + 1) == b) return static_cast<int>(i);
    return -1;
}

std::string to_string(const LatticePolygon& p) {
    std::ostringstream os;
    os << "conv{";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << to_string(p.vertex(i));
    os << "}";
    return os.str();
}

std::vector<LatticePoint> LatticePointSet::all() const {
    std::vector<LatticePoint> out;
    out.reserve(size());
    std::merge(boundary.begin(), boundary.end(), interior.begin(), interior.end(), std::back_inserter(out));
    return out;
}

LatticePointSet lattice_points(const LatticePolygon& p) {
    Int xmin = p.vertex(0).x, xmax = xmin, ymin = p.vertex(0).y, ymax = ymin;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    LatticePointSet out;
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            LatticePoint q{x, y};
            if (p.contains_interior(q))
                out.interior.push_back(q);
            else if (p.contains(q))
                out.boundary.push_back(q);
        }
    }
    return out;
}

Int normalized_area(const LatticePolygon& p) {
    Int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += cross(p.vertex(i), p.vertex(i + 1));
    return s;
}

namespace {

// True if some edge line of `a` has all of `b` on its closed outer side.
bool has_separating_edge(const LatticePolygon& a, const LatticePolygon& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool separated = true;
        for (const auto& v : b.vertices()) {
            if (orient(a.vertex(i), a.vertex(i + 1), v) > 0) {
                separated = false;
                break;
            }
        }
        if (separated) return true;
    }
    return false;
}

}  // namespace

bool interiors_overlap(const LatticePolygon& p, const LatticePolygon& q) {
    return !has_separating_edge(p, q) && !has_separating_edge(q, p);
}

CellClass classify_cell(const LatticePolygon& p) {
    const std::size_t n = p.size();
    if (n == 3) return {CellKind::Triangle, 3};
    if (n != 4) return {CellKind::Other, n};
    int parallel_pairs = 0;
    for (std::size_t i = 0; i < 2; ++i)
        if (cross(p.edge_vector(i), p.edge_vector(i + 2)) == 0) ++parallel_pairs;
    // adjacent edges of a strictly convex polygon are never parallel
    switch (parallel_pairs) {
        case 2: return {CellKind::Parallelogram, 4};
        case 1: return {CellKind::Trapezoid, 4};
        default: return {CellKind::GenericQuadrilateral, 4};
    }
}

std::string to_string(CellClass c) {
    switch (c.kind) {
        case CellKind::Triangle: return "Triangle";
        case CellKind::Parallelogram: return "Parallelogram";
        case CellKind::GenericQuadrilateral: return "GenericQuadrilateral";
        case CellKind::Trapezoid: return "Trapezoid";
        case CellKind::Other: return "Other(" + std::to_string(c.vertex_count) + "-gon)";
    }
    return "?";
}

UnimodularAffineMap::UnimodularAffineMap(Int a, Int b, Int c, Int d, LatticePoint translation)
    : a_(a), b_(b), c_(c), d_(d), t_(translation) {
    Int det = a * d - b * c;
    if (det != 1 && det != -1) throw std::invalid_argument("UnimodularAffineMap: |det| != 1");
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    Int det = this->det();
    // inverse of an integral matrix with det +-1 is det * adjugate
    Int ia = det * d_, ib = -det * b_, ic = -det * c_, id = det * a_;
    LatticePoint t{-(ia * t_.x + ib * t_.y), -(ic * t_.x + id * t_.y)};
    return {ia, ib, ic, id, t};
}

UnimodularAffineMap UnimodularAffineMap::compose(const UnimodularAffineMap& inner) const {
    Int na = a_ * inner.a_ + b_ * inner.c_;
    Int nb = a_ * inner.b_ + b_ * inner.d_;
    Int nc = c_ * inner.a_ + d_ * inner.c_;
    Int nd = c_ * inner.b_ + d_ * inner.d_;
    return {na, nb, nc, nd, (*this)(inner.t_)};
}

LatticePolygon UnimodularAffineMap::operator()(const LatticePolygon& p) const {
    std::vector<LatticePoint> out;
    out.reserve(p.size());
    for (const auto& v : p.vertices()) out.push_back((*this)(v));
    return LatticePolygon(std::move(out));
}

std::vector<LatticePoint> normal_quadrilateral_vertices(const QuadParameters& qp) {
    return {{0, qp.m}, {qp.p, qp.q}, {qp.p + qp.r, 0}, {qp.p + qp.r + qp.s, 0}};
}

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Returns (g, s, t) with s*a + t*b = g = gcd(a,b) >= 0.
std::array<Int, 3> extended_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

}  // namespace

QuadNormalization normalize_quadrilateral(const LatticePolygon& quad, std::size_t e1, std::size_t e2) {
    if (classify_cell(quad).kind != CellKind::GenericQuadrilateral)
        throw std::invalid_argument("normalize_quadrilateral: not a generic quadrilateral");
    if (e1 >= 4 || e2 >= 4) throw std::invalid_argument("normalize_quadrilateral: edge index out of range");
    LatticePoint far_a, shared, far_b, opposite;
    if ((e1 + 1) % 4 == e2) {
        far_a = quad.vertex(e1);
        shared = quad.vertex(e1 + 1);
        far_b = quad.vertex(e1 + 2);
        opposite = quad.vertex(e1 + 3);
    } else if ((e2 + 1) % 4 == e1) {
        far_a = quad.vertex(e1 + 1);
        shared = quad.vertex(e1);
        far_b = quad.vertex(e1 + 3);
        opposite = quad.vertex(e1 + 2);
    } else {
        throw std::invalid_argument("normalize_quadrilateral: edges are not adjacent");
    }

    // rotate the base edge far_b -> opposite onto the positive x axis
    LatticePoint base = opposite - far_b;
    Int s = gcd(base.x, base.y);
    LatticePoint u{base.x / s, base.y / s};
    auto [g, alpha, beta] = extended_gcd(u.x, u.y);
    (void)g;
    UnimodularAffineMap rotate(alpha, beta, -u.y, u.x);
    UnimodularAffineMap to_origin(1, 0, 0, 1, -rotate(far_b));
    UnimodularAffineMap step = to_origin.compose(rotate);
    if (step(far_a).y < 0) step = UnimodularAffineMap(1, 0, 0, -1).compose(step);

    LatticePoint a = step(far_a), w = step(shared);
    const Int m = a.y, q = w.y;
    if (!(0 < q && q < m))
        throw DegenerateParameters("normalize_quadrilateral: shared vertex height " + std::to_string(q) +
                                   " not strictly below " + std::to_string(m));

    // shear x -> x + k y, then translate far_a onto the y axis; largest k
    // keeping p > 0 and r > 0 gives the minimal representative
    Int k = std::min(floor_div(w.x - a.x - 1, m - q), floor_div(-w.x - 1, q));
    UnimodularAffineMap shear(1, k, 0, 1);
    LatticePoint sheared_a = shear(a);
    UnimodularAffineMap shift(1, 0, 0, 1, {-sheared_a.x, 0});
    UnimodularAffineMap map = shift.compose(shear).compose(step);

    LatticePoint pw = map(shared), pb = map(far_b);
    QuadParameters params{m, pw.x, q, pb.x - pw.x, s};
    std::vector<LatticePoint> expected = normal_quadrilateral_vertices(params);
    if (map(far_a) != expected[0] || map(shared) != expected[1] || map(far_b) != expected[2] ||
        map(opposite) != expected[3] || params.p <= 0 || params.r <= 0)
        throw InternalError("normalize_quadrilateral: construction failed for " + to_string(quad));
    return {map, params};
}

ProblemParameters problem_parameters(const LatticePolygon& polygon) {
    LatticePointSet pts = lattice_points(polygon);
    Int n = static_cast<Int>(pts.interior.size()) - 1;
    if (n < 0) throw InvalidProblem("polygon " + to_string(polygon) + " has no interior lattice points (n = -1)");
    Int s = static_cast<Int>(pts.size()) - n - 3;
    return {n, s};
}

}  // namespace tropcount
