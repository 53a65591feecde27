#include <doctest.h>

#include <random>

#include "../oracles/lattice_oracles.hpp"
#include "tropcount/errors.hpp"
#include "tropcount/lattice.hpp"

using namespace tropcount;

namespace {

std::vector<oracle::Pt> pts(const LatticePolygon& p) {
    std::vector<oracle::Pt> out;
    for (auto v : p.vertices()) out.emplace_back(v.x, v.y);
    return out;
}

LatticePolygon tri(Int d) { return LatticePolygon({{0, 0}, {d, 0}, {0, d}}); }

}  // namespace

TEST_CASE("lattice points of the small polygons") {
    auto unit = lattice_points(tri(1));
    CHECK(unit.all() == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(unit.interior.empty());

    auto cubic = lattice_points(tri(3));
    CHECK(cubic.size() == 10);
    CHECK(cubic.interior == std::vector<LatticePoint>{{1, 1}});

    LatticePolygon q({{0, 0}, {2, 0}, {2, 1}, {0, 2}});
    auto qp = lattice_points(q);
    CHECK(qp.size() == 7);
    CHECK(qp.interior == std::vector<LatticePoint>{{1, 1}});
}

TEST_CASE("lattice points agree with a bounding-box scan and Pick") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<LatticePoint> cloud;
        for (int i = 0; i < 6; ++i) cloud.push_back({c(rng), c(rng)});
        LatticePolygon p = [&] {
            try {
                return LatticePolygon::convex_hull(cloud);
            } catch (const std::invalid_argument&) {
                return tri(1);
            }
        }();
        auto [b, i] = oracle::scan_points(pts(p));
        auto lp = lattice_points(p);
        CHECK(static_cast<long long>(lp.boundary.size()) == b);
        CHECK(static_cast<long long>(lp.interior.size()) == i);
        CHECK(normalized_area(p) == oracle::shoelace2(pts(p)));
        CHECK(normalized_area(p) == 2 * i + b - 2);
    }
}

TEST_CASE("integer length") {
    CHECK(integer_length({{0, 0}, {4, 6}}) == 2);
    CHECK(integer_length({{0, 0}, {1, 0}}) == 1);
    CHECK(integer_length({{0, 3}, {1, 1}}) == 1);
}

TEST_CASE("normalized area") {
    CHECK(normalized_area(tri(1)) == 1);
    CHECK(normalized_area(tri(3)) == 9);
    LatticePolygon par({{0, 0}, {2, 0}, {3, 1}, {1, 1}});
    CHECK(normalized_area(par) == oracle::shoelace2(pts(par)));
    CHECK(normalized_area(par) == 4);
}

TEST_CASE("cell classification") {
    CHECK(classify_cell(tri(2)).kind == CellKind::Triangle);
    CHECK(classify_cell(LatticePolygon({{0, 0}, {2, 0}, {3, 1}, {1, 1}})).kind == CellKind::Parallelogram);
    CHECK(classify_cell(LatticePolygon({{0, 0}, {3, 0}, {2, 1}, {0, 1}})).kind == CellKind::Trapezoid);
    CHECK(classify_cell(LatticePolygon({{0, 3}, {1, 1}, {3, 0}, {4, 0}})).kind == CellKind::GenericQuadrilateral);
    CHECK(classify_cell(LatticePolygon({{0, 0}, {1, 0}, {2, 1}, {1, 2}, {0, 1}})).kind == CellKind::Other);
}

TEST_CASE("polygon rejects non-convex input") {
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LatticePolygon({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("normal position of a generic quadrilateral") {
    const QuadParameters base{3, 1, 1, 2, 1};
    LatticePolygon q(normal_quadrilateral_vertices(base));
    auto id = normalize_quadrilateral(q, 0, 1);
    CHECK(id.params == base);
    CHECK(id.map == UnimodularAffineMap());

    UnimodularAffineMap shear(1, 1, 0, 1);
    LatticePolygon sheared = shear(q);
    int e1 = sheared.find_edge(shear(LatticePoint{0, 3}), shear(LatticePoint{1, 1}));
    int e2 = sheared.find_edge(shear(LatticePoint{1, 1}), shear(LatticePoint{3, 0}));
    REQUIRE(e1 >= 0);
    REQUIRE(e2 >= 0);
    auto back = normalize_quadrilateral(sheared, e1, e2);
    CHECK(back.params == base);
    CHECK(back.map == shear.inverse());

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    int done = 0;
    while (done < 25) {
        Int a = c(rng), b = c(rng), cc = c(rng), d = c(rng);
        if (std::llabs(a * d - b * cc) != 1) continue;
        UnimodularAffineMap g(a, b, cc, d, {c(rng), c(rng)});
        LatticePolygon img = g(q);
        int f1 = img.find_edge(g(LatticePoint{0, 3}), g(LatticePoint{1, 1}));
        int f2 = img.find_edge(g(LatticePoint{1, 1}), g(LatticePoint{3, 0}));
        if (f1 < 0) {  // orientation reversed
            f1 = img.find_edge(g(LatticePoint{1, 1}), g(LatticePoint{0, 3}));
            f2 = img.find_edge(g(LatticePoint{3, 0}), g(LatticePoint{1, 1}));
        }
        REQUIRE(f1 >= 0);
        REQUIRE(f2 >= 0);
        auto n = normalize_quadrilateral(img, f1, f2);
        CHECK(n.params == base);
        CHECK(n.map(img) == q);
        ++done;
    }
}

TEST_CASE("problem parameters") {
    auto p3 = problem_parameters(tri(3));
    CHECK(p3.nodes == 0);
    CHECK(p3.points == 7);
    auto pq = problem_parameters(LatticePolygon({{0, 0}, {2, 0}, {2, 1}, {0, 2}}));
    CHECK(pq.nodes == 0);
    CHECK(pq.points == 4);
    CHECK_THROWS_AS(problem_parameters(tri(2)), InvalidProblem);
}

TEST_CASE("unimodular maps") {
    CHECK_THROWS_AS(UnimodularAffineMap(2, 0, 0, 1), std::invalid_argument);
    UnimodularAffineMap g(2, 1, 1, 1, {3, -1});
    CHECK(g.compose(g.inverse()) == UnimodularAffineMap());
    CHECK(g.inverse()(g(LatticePoint{5, 7})) == LatticePoint{5, 7});
}
