#include "tropcount/quadcusp.hpp"

#include <stdexcept>
#include <utility>

#include "tropcount/errors.hpp"

namespace tropcount {

NormalQuadrilateral::NormalQuadrilateral(const QuadParameters& qp) : params_(qp) {
    if (qp.m <= 0 || qp.p <= 0 || qp.q <= 0 || qp.r <= 0 || qp.s <= 0 || qp.q >= qp.m)
        throw std::invalid_argument("normal quadrilateral needs positive parameters with q < m");
    LatticePolygon poly(normal_quadrilateral_vertices(qp));  // throws unless strictly convex
    if (poly.size() != 4) throw std::invalid_argument("normal quadrilateral is degenerate");
    CellKind kind = classify_cell(poly).kind;
    if (kind != CellKind::GenericQuadrilateral)
        throw std::invalid_argument("normal quadrilateral has a pair of parallel edges");
    d1_ = gcd(qp.p, qp.m - qp.q);
    d2_ = gcd(qp.q, qp.r);
}

CuspParameters eta_xi(const QuadParameters& qp) {
    if (qp.m == 0) throw DegenerateParameters("eta undefined for m = 0");
    Rational eta(qp.q, qp.m);
    eta.canonicalize();
    Rational den = (qp.p + qp.r) * eta - qp.r;
    if (den == 0) throw DegenerateParameters("xi denominator (p+r) eta - r vanishes");
    Rational xi = ((qp.p + qp.r + qp.s) * eta * eta - (qp.r + qp.s) * eta) / den;
    if (eta == 0 || eta == 1) throw DegenerateParameters("eta is 0 or 1");
    if (xi == eta) throw DegenerateParameters("xi equals eta");
    return {eta, xi};
}

CuspParameters eta_xi(const NormalQuadrilateral& quad) { return eta_xi(quad.params()); }

namespace {

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
    if (num % den != 0) throw InternalError(std::string(what) + ": non-integral quotient");
    return num / den;
}

}  // namespace

Integer count_adjacent(const NormalQuadrilateral& quad) {
    const auto& qp = quad.params();
    Integer det = Integer(qp.p) * qp.q - Integer(qp.m - qp.q) * qp.r;
    return exact_div(abs(det), Integer(quad.d1()) * quad.d2(), "count_adjacent");
}

Integer count_opposite(const NormalQuadrilateral& quad) {
    const auto& qp = quad.params();
    Integer det = Integer(qp.s) * (qp.m - qp.q);  // |det((p, q-m), (s, 0))|
    return exact_div(det, Integer(quad.d1()) * qp.s, "count_opposite");
}

std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        // move a nonzero entry of least absolute value to (t,t), then clear row and column
        for (;;) {
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
            if (bi == rows) break;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer f = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer f = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<Integer> diag(n);
    for (std::size_t t = 0; t < n; ++t) diag[t] = abs(a[t][t]);
    return diag;
}

Integer binomial_solution_count(const std::vector<std::vector<Int>>& exponents) {
    std::vector<std::vector<Integer>> m;
    for (const auto& row : exponents) {
        if (row.size() != exponents.size()) throw std::invalid_argument("exponent matrix must be square");
        std::vector<Integer> r;
        for (Int v : row) r.emplace_back(v);
        m.push_back(std::move(r));
    }
    Integer count = 1;
    for (const auto& d : smith_normal_form(m)) {
        if (d == 0) throw std::invalid_argument("singular exponent matrix");
        count *= d;
    }
    return count;
}

Integer binomial_oracle(const NormalQuadrilateral& quad) {
    const auto& qp = quad.params();
    LatticePoint e1 = primitive({qp.p, qp.q - qp.m});
    LatticePoint e2 = primitive({qp.r, -qp.q});
    return binomial_solution_count({{e1.x, e1.y}, {e2.x, e2.y}});
}

Integer binomial_oracle_opposite(const NormalQuadrilateral& quad) {
    const auto& qp = quad.params();
    LatticePoint e1 = primitive({qp.p, qp.q - qp.m});
    LatticePoint e3 = primitive({qp.s, 0});
    return binomial_solution_count({{e1.x, e1.y}, {e3.x, e3.y}});
}

namespace {

NonexistenceCertificate certificate(ObstructionShape shape, Int p, Int q) {
    NonexistenceCertificate c{shape, p, q, 0, 0};
    Integer sum = Integer(p) + q;
    c.upper = sum * (sum - 1);
    c.lower = (sum - 1) * (sum - 2) + 2 * sum - 1;
    return c;
}

}  // namespace

NonexistenceCertificate nonexistence_certificate(const TrapezoidParams& t) {
    if (!(0 <= t.r && t.r < t.p) || t.q <= 0 || !(0 < t.k && t.k <= t.p + t.q))
        throw std::invalid_argument("trapezoid parameters need 0 <= r < p, q > 0, 0 < k <= p+q");
    return certificate(ObstructionShape::Trapezoid, t.p, t.q);
}

NonexistenceCertificate nonexistence_certificate(const TriangleParams& t) {
    if (t.p <= 0 || t.q <= 0 || !(0 < t.r && t.r < t.p + t.q))
        throw std::invalid_argument("triangle parameters need p, q > 0 and 0 < r < p+q");
    return certificate(ObstructionShape::Triangle, t.p, t.q);
}

std::string to_string(ObstructionShape shape) { return shape == ObstructionShape::Trapezoid ? "trapezoid" : "triangle"; }

}  // namespace tropcount
