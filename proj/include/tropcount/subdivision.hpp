#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/linalg.hpp"
#include "tropcount/rational.hpp"

namespace tropcount {

enum class AdmissibilityMode { Nodal, OneCusp };

std::string to_string(AdmissibilityMode mode);
AdmissibilityMode parse_mode(const std::string& text);  // "nodal" | "cusp"

struct SubdivisionEdge {
    std::size_t a;  // vertex indices, a < b
    std::size_t b;
    std::array<int, 2> cells{-1, -1};  // cells[1] == -1 on the boundary of the polygon

    bool on_boundary() const { return cells[1] < 0; }
};

/// A polyhedral subdivision of a lattice polygon into lattice cells. Cells are
/// kept in canonical (sorted) order so equal subdivisions compare equal.
class Subdivision {
public:
    /// Throws std::invalid_argument unless the cells tile the polygon face to face.
    Subdivision(LatticePolygon polygon, std::vector<LatticePolygon> cells);

    const LatticePolygon& polygon() const { return polygon_; }
    const std::vector<LatticePolygon>& cells() const { return cells_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<SubdivisionEdge>& edges() const { return edges_; }

    /// Edge indices of cell i, aligned with the cell's edge numbering.
    const std::vector<std::size_t>& cell_edges(std::size_t cell) const { return cell_edges_[cell]; }

    std::optional<std::size_t> find_vertex(LatticePoint p) const;
    std::size_t vertex_index(LatticePoint p) const;  // throws std::out_of_range
    std::optional<std::size_t> find_edge(LatticePoint p, LatticePoint q) const;

    LatticePoint vertex(std::size_t i) const { return vertices_[i]; }
    LatticeSegment segment(std::size_t edge) const {
        return {vertices_[edges_[edge].a], vertices_[edges_[edge].b]};
    }

    std::size_t internal_edge_count() const;

    auto operator<=>(const Subdivision& o) const { return cells_ <=> o.cells_; }
    bool operator==(const Subdivision& o) const { return cells_ == o.cells_; }

private:
    LatticePolygon polygon_;
    std::vector<LatticePolygon> cells_;
    std::vector<LatticePoint> vertices_;
    std::vector<SubdivisionEdge> edges_;
    std::vector<std::vector<std::size_t>> cell_edges_;
};

std::string to_string(const Subdivision& s);

/// Heights over lattice points. For a subdivision, keyed by its vertices.
struct LiftingFunction {
    std::map<LatticePoint, Rational> values;

    const Rational& at(LatticePoint p) const { return values.at(p); }
    /// Shifted so the least point has height 0.
    LiftingFunction normalized() const;

    bool operator==(const LiftingFunction&) const = default;
};

/// Rows express "lifted cell vertices are coplanar"; columns index
/// Subdivision::vertices(). k-3 rows per k-gon.
RationalMatrix coplanarity_system(const Subdivision& s);

/// One row g per internal edge with g . nu > 0 iff nu bends convexly there.
RationalMatrix folding_system(const Subdivision& s);

/// Regular subdivision read off the lower hull of the lifted support, and
/// the lower-hull heights at every support point. Throws
/// std::invalid_argument for collinear support.
std::pair<Subdivision, LiftingFunction> lower_hull_subdivision(std::span<const LatticePoint> support,
                                                               const std::map<LatticePoint, Rational>& lift);

/// A lifting function inducing exactly this subdivision, with height 0 at
/// the first three vertices of the first cell; nullopt if none exists.
std::optional<LiftingFunction> is_regular(const Subdivision& s);

struct RankReport {
    long rank = 0;      // dimension of the family of curves of this type
    long rank_exp = 0;  // |V| - 1 - sum(|V(cell)| - 3)
    long d = 0;         // rank - rank_exp
    std::map<std::size_t, long> gon_counts;       // N_m
    std::map<std::size_t, long> parallel_counts;  // N'_{2m}: 2m-gons with parallel opposite edges
    long d_bound = 0;   // upper bound on 2d when some cell is not a triangle/parallelogram
    bool simple = true; // all cells triangles or parallelograms
};

/// rank = dim{nu satisfying coplanarity} - 1 (constant shift). Throws
/// InternalError if d violates its known bounds.
RankReport rank_report(const Subdivision& s);

struct Admissibility {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Nodal: every boundary lattice point is a vertex and every cell is a
/// triangle or parallelogram. OneCusp: additionally exactly one generic
/// quadrilateral (trapezoids are obstructed).
Admissibility admissible(const Subdivision& s, AdmissibilityMode mode);

struct EnumerationOptions {
    std::size_t max_cells = 64;
};

/// Every subdivision whose cells have the admissible shapes for `mode`
/// (regularity and rank are not checked). Canonically sorted.
std::vector<Subdivision> enumerate_subdivision_shapes(const LatticePolygon& polygon, AdmissibilityMode mode,
                                                      const EnumerationOptions& options = {});

/// Every regular, admissible subdivision with the given rank, sorted.
std::vector<Subdivision> enumerate_admissible_subdivisions(const LatticePolygon& polygon, AdmissibilityMode mode,
                                                           long rank, const EnumerationOptions& options = {});

}  // namespace tropcount
