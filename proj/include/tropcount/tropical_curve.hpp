#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/rational.hpp"
#include "tropcount/subdivision.hpp"

namespace tropcount {

/// N_f(x) = max over the support of (w . x + c_w).
struct TropicalPolynomial {
    std::map<LatticePoint, Rational> coefficients;
};

struct CurveVertex {
    RationalPoint position;
    std::size_t cell;  // dual cell of the subdivision
};

/// Curve edges are numbered like the edges of the dual subdivision. A bounded
/// edge runs from `tail` to `*head`; a ray leaves `tail` along `direction`.
struct CurveEdge {
    std::size_t tail = 0;
    std::optional<std::size_t> head;
    LatticePoint direction;  // primitive
    Int weight = 1;

    bool is_ray() const { return !head.has_value(); }
};

class PlaneTropicalCurve {
public:
    /// Curve dual to (S, nu) where nu is convex with linearity domains the
    /// cells of S. Throws std::invalid_argument if nu does not induce S.
    PlaneTropicalCurve(Subdivision dual, LiftingFunction nu);

    const Subdivision& dual() const { return dual_; }
    const LiftingFunction& lift() const { return nu_; }
    const std::vector<CurveVertex>& vertices() const { return vertices_; }
    const std::vector<CurveEdge>& edges() const { return edges_; }

    /// Sum of weight * outgoing direction over the edges at vertex v.
    LatticePoint balance(std::size_t v) const;

private:
    Subdivision dual_;
    LiftingFunction nu_;
    std::vector<CurveVertex> vertices_;
    std::vector<CurveEdge> edges_;
};

/// Curve vertex dual to the cell, solved from the tie of the cell's monomials.
RationalPoint dual_vertex(const LatticePolygon& cell, const LiftingFunction& nu);

/// Throws std::invalid_argument for collinear support.
PlaneTropicalCurve corner_locus(const TropicalPolynomial& f);

/// Coefficients c_w = -nu(w).
TropicalPolynomial polynomial_from_lift(const LiftingFunction& nu);

/// The parameterizing graph: parallelogram-dual vertices are split into two
/// crossing lines (opposite edges paired), every other vertex is kept, and
/// each ray ends in a leaf. Edge i of the graph is dual to subdivision edge i.
struct GammaGraph {
    std::vector<std::size_t> cell_base;  // node of each cell (first line for parallelograms)
    std::vector<bool> is_leaf;
    std::vector<std::pair<std::size_t, std::size_t>> ends;  // (tail side, head side or leaf)
    std::optional<std::size_t> quad_cell;

    std::size_t size() const { return is_leaf.size(); }
};

/// Throws std::invalid_argument when a cell is neither a triangle, a
/// parallelogram nor a quadrilateral.
GammaGraph gamma_graph(const Subdivision& s);

struct GammaStructure {
    long betti = 0;       // first Betti number
    long components = 0;  // connected components
};

GammaStructure gamma_structure(const PlaneTropicalCurve& c);
long genus(const PlaneTropicalCurve& c);

struct Incidence {
    enum class Kind { Vertex, Edge };
    Kind kind;
    std::size_t index;  // vertex or edge index
    bool interior;      // relative interior of an edge or ray
};

/// Where x lies on the curve; nullopt when off the curve. A vertex wins over
/// the edges through it; crossings of two edges report the lower edge index.
std::optional<Incidence> incidence(const PlaneTropicalCurve& c, const RationalPoint& x);

/// Distinct marked points with rational coordinates.
struct MarkedConfiguration {
    std::vector<RationalPoint> points;

    MarkedConfiguration() = default;
    /// Throws std::invalid_argument on repeated points.
    explicit MarkedConfiguration(std::vector<RationalPoint> pts);
    std::size_t size() const { return points.size(); }
};

enum class EdgeDirection { TowardHead, TowardTail, FromMark };

struct OrientedForest {
    std::vector<EdgeDirection> direction;     // per curve edge; TowardHead on a ray = outward
    std::vector<std::size_t> mark_edge;       // curve edge carrying each marked point
    std::vector<std::vector<std::size_t>> components;  // unmarked curve edges per component
    std::vector<int> indegree;                // per curve vertex, counting marked edges
    std::optional<std::size_t> cusp_vertex;   // vertex dual to the generic quadrilateral
    std::optional<std::pair<std::size_t, std::size_t>> sigma;  // edges sigma', sigma'' (sorted)
};

/// Orients the curve minus the marked points. Throws ViolatedStructure when a
/// mark is not interior to an edge, two marks share an edge, a component is
/// not a tree or the free ends are not as required by the mode.
OrientedForest orient(const PlaneTropicalCurve& c, const MarkedConfiguration& marks, AdmissibilityMode mode);

}  // namespace tropcount
