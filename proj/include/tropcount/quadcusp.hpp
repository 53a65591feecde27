#pragma once

#include <string>
#include <vector>

#include "tropcount/lattice.hpp"
#include "tropcount/rational.hpp"

namespace tropcount {

/// Quadrilateral (0,m), (p,q), (p+r,0), (p+r+s,0) with no pair of parallel edges.
class NormalQuadrilateral {
public:
    /// Throws std::invalid_argument unless the parameters are positive,
    /// q < m, the vertices are strictly convex and no two edges are parallel.
    explicit NormalQuadrilateral(const QuadParameters& params);

    const QuadParameters& params() const { return params_; }
    Int d1() const { return d1_; }  // gcd(p, m - q)
    Int d2() const { return d2_; }  // gcd(q, r)
    LatticePolygon polygon() const { return LatticePolygon(normal_quadrilateral_vertices(params_)); }

private:
    QuadParameters params_;
    Int d1_ = 1, d2_ = 1;
};

struct CuspParameters {
    Rational eta;
    Rational xi;
};

/// eta = q/m and xi = ((p+r+s) eta^2 - (r+s) eta) / ((p+r) eta - r). Throws
/// DegenerateParameters when the denominator vanishes, eta is 0 or 1, or xi = eta.
CuspParameters eta_xi(const QuadParameters& params);
CuspParameters eta_xi(const NormalQuadrilateral& quad);

/// |pq - (m-q) r| / (d1 d2): cuspidal curves with fixed points on the two
/// edges meeting at (p,q).
Integer count_adjacent(const NormalQuadrilateral& quad);

/// (m-q)/d1: fixed points on [(0,m),(p,q)] and the opposite edge on the x-axis.
Integer count_opposite(const NormalQuadrilateral& quad);

/// Diagonal of the Smith normal form (nonnegative, each dividing the next).
std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> matrix);

/// Solutions in the torus of x^{row_i} = c_i for a square integral exponent
/// matrix: the product of its invariant factors. Throws std::invalid_argument
/// when the matrix is singular (positive-dimensional solution set).
Integer binomial_solution_count(const std::vector<std::vector<Int>>& exponents);

/// Solutions of the binomial system for the two adjacent edges at (p,q), whose
/// exponent rows are the primitive edge vectors, for one choice of the roots
/// of unity. Summed over all d1*d2 choices the count is d1*d2 times larger.
Integer binomial_oracle(const NormalQuadrilateral& quad);

/// Same for the edge [(0,m),(p,q)] and the opposite edge on the x-axis.
Integer binomial_oracle_opposite(const NormalQuadrilateral& quad);

enum class ObstructionShape { Trapezoid, Triangle };

/// Trapezoid (0,0), (r,q), (p,q), (0,k) with 0 <= r < p, q > 0, 0 < k <= p+q.
struct TrapezoidParams {
    Int p = 1, q = 1, r = 0, k = 1;
};

/// Triangle (0,0), (0,r), (p,q) with p, q > 0 and 0 < r < p+q.
struct TriangleParams {
    Int p = 1, q = 1, r = 1;
};

/// Upper and lower bounds on the intersection of a curve with its polar.
/// The shape is forbidden when lower > upper.
struct NonexistenceCertificate {
    ObstructionShape shape;
    Int p = 0, q = 0;
    Integer upper;  // (p+q)(p+q-1)
    Integer lower;  // (p+q-1)(p+q-2) + 2(p+q) - 1

    bool forbidden() const { return lower > upper; }
};

/// Throws std::invalid_argument on parameters outside the stated ranges.
NonexistenceCertificate nonexistence_certificate(const TrapezoidParams& params);
NonexistenceCertificate nonexistence_certificate(const TriangleParams& params);

std::string to_string(ObstructionShape shape);

}  // namespace tropcount
