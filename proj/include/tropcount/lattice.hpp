#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tropcount {

using Int = std::int64_t;

struct LatticePoint {
    Int x = 0;
    Int y = 0;

    auto operator<=>(const LatticePoint&) const = default;

    LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    LatticePoint operator*(Int k) const { return {x * k, y * k}; }
};

inline Int cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
inline Int dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }

/// Orientation of c relative to the directed line a -> b (positive: left).
inline Int orient(LatticePoint a, LatticePoint b, LatticePoint c) { return cross(b - a, c - a); }

Int gcd(Int a, Int b);

/// v divided by the gcd of its coordinates. v must be nonzero.
LatticePoint primitive(LatticePoint v);

std::string to_string(LatticePoint p);

struct LatticeSegment {
    LatticePoint a;
    LatticePoint b;

    LatticeSegment(LatticePoint first, LatticePoint second);

    LatticePoint vector() const { return b - a; }
    bool contains(LatticePoint p) const;  // closed segment
};

/// Number of lattice points on the segment minus one.
Int integer_length(const LatticeSegment& s);

/// Strictly convex lattice polygon, stored counterclockwise starting at its
/// lexicographically least vertex.
class LatticePolygon {
public:
    /// Accepts the vertices in either cyclic orientation. Throws
    /// std::invalid_argument unless they form a strictly convex polygon.
    explicit LatticePolygon(std::vector<LatticePoint> vertices);

    /// Convex hull of a point set (collinear points dropped).
    static LatticePolygon convex_hull(std::span<const LatticePoint> points);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    LatticePoint vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    /// Edge i runs from vertex i to vertex i+1.
    LatticeSegment edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }
    LatticePoint edge_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }

    bool contains(LatticePoint p) const;           // closed polygon
    bool contains_interior(LatticePoint p) const;  // open polygon
    bool on_boundary(LatticePoint p) const;
    bool has_vertex(LatticePoint p) const;

    /// Index of the edge (a,b) in counterclockwise direction, or -1.
    int find_edge(LatticePoint a, LatticePoint b) const;

    auto operator<=>(const LatticePolygon& o) const { return vertices_ <=> o.vertices_; }
    bool operator==(const LatticePolygon& o) const { return vertices_ == o.vertices_; }

private:
    std::vector<LatticePoint> vertices_;
};

std::string to_string(const LatticePolygon& p);

struct LatticePointSet {
    std::vector<LatticePoint> boundary;  // lexicographically sorted
    std::vector<LatticePoint> interior;  // lexicographically sorted

    std::size_t size() const { return boundary.size() + interior.size(); }
    std::vector<LatticePoint> all() const;
};

LatticePointSet lattice_points(const LatticePolygon& p);

/// Twice the Euclidean area.
Int normalized_area(const LatticePolygon& p);

/// True if the two polygons have intersecting interiors.
bool interiors_overlap(const LatticePolygon& p, const LatticePolygon& q);

enum class CellKind { Triangle, Parallelogram, GenericQuadrilateral, Trapezoid, Other };

struct CellClass {
    CellKind kind;
    std::size_t vertex_count;

    bool operator==(const CellClass&) const = default;
};

CellClass classify_cell(const LatticePolygon& p);
std::string to_string(CellClass c);

/// x -> M x + t with M integral and |det M| = 1.
class UnimodularAffineMap {
public:
    UnimodularAffineMap() = default;
    /// Throws std::invalid_argument unless |a d - b c| = 1.
    UnimodularAffineMap(Int a, Int b, Int c, Int d, LatticePoint translation = {});

    LatticePoint operator()(LatticePoint p) const {
        return {a_ * p.x + b_ * p.y + t_.x, c_ * p.x + d_ * p.y + t_.y};
    }
    /// Applies only the linear part.
    LatticePoint linear(LatticePoint v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }

    Int det() const { return a_ * d_ - b_ * c_; }
    UnimodularAffineMap inverse() const;
    /// (*this) after `inner`.
    UnimodularAffineMap compose(const UnimodularAffineMap& inner) const;

    LatticePolygon operator()(const LatticePolygon& p) const;

    Int a() const { return a_; }
    Int b() const { return b_; }
    Int c() const { return c_; }
    Int d() const { return d_; }
    LatticePoint translation() const { return t_; }

    bool operator==(const UnimodularAffineMap&) const = default;

private:
    Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
    LatticePoint t_{};
};

/// Parameters of the quadrilateral (0,m), (p,q), (p+r,0), (p+r+s,0).
struct QuadParameters {
    Int m = 0, p = 0, q = 0, r = 0, s = 0;

    bool operator==(const QuadParameters&) const = default;
};

std::vector<LatticePoint> normal_quadrilateral_vertices(const QuadParameters& qp);

struct QuadNormalization {
    UnimodularAffineMap map;
    QuadParameters params;
};

/// Finds a unimodular map taking Q to (0,m),(p,q),(p+r,0),(p+r+s,0) with edge
/// e1 onto [(0,m),(p,q)] and the adjacent edge e2 onto [(p,q),(p+r,0)].
/// Among the shear-equivalent solutions the one with the smallest p is returned.
/// Throws std::invalid_argument for non-adjacent edges or a quad that is not
/// generic, and DegenerateParameters when the shared vertex of e1,e2 is not
/// strictly lower than the far end of e1 over the line of the following edge
/// (no normal position exists then).
QuadNormalization normalize_quadrilateral(const LatticePolygon& quad, std::size_t e1, std::size_t e2);

struct ProblemParameters {
    Int nodes;   // n = #interior lattice points - 1
    Int points;  // s = #lattice points - n - 3
};

/// Throws InvalidProblem when n < 0.
ProblemParameters problem_parameters(const LatticePolygon& polygon);

}  // namespace tropcount
