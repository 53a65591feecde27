#include <doctest.h>

#include <algorithm>

#include "../oracles/hull_oracle.hpp"
#include "tropcount/errors.hpp"
#include "tropcount/subdivision.hpp"

using namespace tropcount;

namespace {

LatticePolygon tri(Int d) { return LatticePolygon({{0, 0}, {d, 0}, {0, d}}); }

LatticePolygon poly(std::vector<LatticePoint> v) { return LatticePolygon(std::move(v)); }

std::vector<LatticePoint> support(const LatticePolygon& p) { return lattice_points(p).all(); }

template <class F>
std::map<LatticePoint, Rational> lift_by(const std::vector<LatticePoint>& pts, F f) {
    std::map<LatticePoint, Rational> out;
    for (auto p : pts) out[p] = Rational(static_cast<long>(f(p.x, p.y)));
    return out;
}

std::size_t oracle_cell_count(const std::vector<LatticePoint>& pts, const std::map<LatticePoint, Rational>& lift) {
    std::vector<oracle::Lifted> lifted;
    for (auto p : pts) lifted.push_back({p.x, p.y, lift.at(p).get_num().get_si()});
    return oracle::lower_faces(lifted).size();
}

long oracle_rank(const Subdivision& s) {
    std::vector<std::vector<std::array<long long, 2>>> cells;
    for (const auto& c : s.cells()) {
        cells.emplace_back();
        for (auto v : c.vertices()) cells.back().push_back({v.x, v.y});
    }
    return oracle::cone_dimension(cells);
}

Subdivision four_triangles() {
    return Subdivision(tri(2), {poly({{0, 0}, {1, 0}, {0, 1}}), poly({{1, 0}, {2, 0}, {1, 1}}),
                                poly({{0, 1}, {1, 1}, {0, 2}}), poly({{1, 0}, {1, 1}, {0, 1}})});
}

// Outer triangle with a rotated inner triangle, joined by a twisted fan.
Subdivision pinwheel() {
    LatticePoint A{0, 0}, B{6, 0}, C{0, 6}, a{1, 1}, b{4, 1}, c{1, 4};
    return Subdivision(poly({A, B, C}), {poly({a, b, c}), poly({A, B, b}), poly({A, b, a}), poly({B, C, c}),
                                         poly({B, c, b}), poly({C, A, a}), poly({C, a, c})});
}

}  // namespace

TEST_CASE("subdivision validation") {
    CHECK_NOTHROW(four_triangles());
    CHECK(four_triangles().edges().size() == 9);
    CHECK(four_triangles().internal_edge_count() == 3);
    // does not cover
    CHECK_THROWS_AS(Subdivision(tri(2), {poly({{0, 0}, {1, 0}, {0, 1}})}), std::invalid_argument);
    // overlapping cells
    CHECK_THROWS_AS(Subdivision(tri(2), {tri(2), poly({{0, 0}, {1, 0}, {0, 1}})}), std::invalid_argument);
    // vertex in the middle of a neighbouring edge
    CHECK_THROWS_AS(Subdivision(poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}}),
                                {poly({{0, 0}, {2, 0}, {2, 1}, {0, 1}}), poly({{0, 1}, {1, 1}, {1, 2}, {0, 2}}),
                                 poly({{1, 1}, {2, 1}, {2, 2}, {1, 2}})}),
                    std::invalid_argument);
}

TEST_CASE("lower hull on the unit triangle") {
    auto pts = support(tri(1));
    auto [s, nu] = lower_hull_subdivision(pts, lift_by(pts, [](Int, Int) { return 0; }));
    CHECK(s.cells().size() == 1);
    for (auto p : pts) CHECK(nu.at(p) == 0);
}

TEST_CASE("lower hull of quadratic lifts on the degree-2 triangle") {
    auto pts = support(tri(2));
    auto sq = lift_by(pts, [](Int i, Int j) { return i * i + j * j; });
    auto [s1, nu1] = lower_hull_subdivision(pts, sq);
    CHECK(s1.cells().size() == oracle_cell_count(pts, sq));
    CHECK(s1.cells().size() == 3);  // the unit square is flat under i^2 + j^2

    auto mixed = lift_by(pts, [](Int i, Int j) { return i * i + i * j + j * j; });
    auto [s2, nu2] = lower_hull_subdivision(pts, mixed);
    CHECK(s2.cells().size() == oracle_cell_count(pts, mixed));
    CHECK(s2 == four_triangles());

    auto mids = lift_by(pts, [](Int i, Int j) { return (i == 1 || j == 1) ? -1 : 0; });
    auto [s3, nu3] = lower_hull_subdivision(pts, mids);
    CHECK(s3.cells().size() == oracle_cell_count(pts, mids));
    CHECK(s3 == four_triangles());

    std::vector<LatticePoint> line{{0, 0}, {1, 0}, {2, 0}};
    CHECK_THROWS_AS(lower_hull_subdivision(line, lift_by(line, [](Int, Int) { return 0; })), std::invalid_argument);
}

TEST_CASE("lower hull on the degree-3 triangle is unimodular for i^2+ij+j^2") {
    auto pts = support(tri(3));
    auto lift = lift_by(pts, [](Int i, Int j) { return i * i + i * j + j * j; });
    auto [s, nu] = lower_hull_subdivision(pts, lift);
    CHECK(s.cells().size() == 9);
    CHECK(s.cells().size() == oracle_cell_count(pts, lift));
}

TEST_CASE("regularity") {
    auto w = is_regular(four_triangles());
    REQUIRE(w);
    std::vector<LatticePoint> verts = four_triangles().vertices();
    CHECK(lower_hull_subdivision(verts, w->values).first == four_triangles());

    auto single = is_regular(Subdivision(tri(3), {tri(3)}));
    REQUIRE(single);
    for (const auto& [p, v] : single->values) CHECK(v == 0);

    CHECK_FALSE(is_regular(pinwheel()));
}

TEST_CASE("rank reports") {
    auto r4 = rank_report(four_triangles());
    CHECK(r4.rank_exp == 5);
    CHECK(r4.d == 0);
    CHECK(r4.rank == 5);
    CHECK(r4.rank == oracle_rank(four_triangles()));

    Subdivision par(poly({{0, 0}, {2, 0}, {3, 1}, {1, 1}}), {poly({{0, 0}, {2, 0}, {3, 1}, {1, 1}})});
    auto rp = rank_report(par);
    CHECK(rp.rank_exp == 2);
    CHECK(rp.d == 0);
    CHECK(rp.rank == oracle_rank(par));

    for (auto s : enumerate_subdivision_shapes(tri(3), AdmissibilityMode::OneCusp)) {
        if (!admissible(s, AdmissibilityMode::OneCusp)) continue;
        auto r = rank_report(s);
        CHECK(r.rank == oracle_rank(s));
        CHECK_FALSE(r.simple);
        CHECK(r.d >= 0);
        CHECK(2 * r.d <= r.d_bound);
    }
}

TEST_CASE("admissibility") {
    CHECK(admissible(four_triangles(), AdmissibilityMode::Nodal));

    Subdivision trap(poly({{0, 0}, {1, -1}, {2, 0}, {1, 1}, {0, 1}}),
                     {poly({{0, 0}, {1, -1}, {2, 0}}), poly({{0, 0}, {2, 0}, {1, 1}, {0, 1}})});
    auto a = admissible(trap, AdmissibilityMode::OneCusp);
    CHECK_FALSE(a);
    CHECK(a.reason.find("trapezoid forbidden") == 0);

    Subdivision two(poly({{0, 0}, {1, 0}, {2, 2}, {2, 3}, {1, 3}, {0, 1}}),
                    {poly({{0, 0}, {1, 0}, {2, 2}, {2, 3}}), poly({{2, 3}, {1, 3}, {0, 1}, {0, 0}})});
    REQUIRE(classify_cell(two.cells()[0]).kind == CellKind::GenericQuadrilateral);
    REQUIRE(classify_cell(two.cells()[1]).kind == CellKind::GenericQuadrilateral);
    CHECK_FALSE(admissible(two, AdmissibilityMode::OneCusp));
    CHECK_FALSE(admissible(two, AdmissibilityMode::Nodal));

    // unit boundary points must be vertices
    CHECK_FALSE(admissible(Subdivision(tri(2), {tri(2)}), AdmissibilityMode::Nodal));
}

TEST_CASE("enumeration of admissible subdivisions") {
    auto unit = enumerate_admissible_subdivisions(tri(1), AdmissibilityMode::Nodal, 2);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].cells().size() == 1);

    auto deg2 = enumerate_admissible_subdivisions(tri(2), AdmissibilityMode::Nodal, 5);
    CHECK(std::find(deg2.begin(), deg2.end(), four_triangles()) != deg2.end());
    for (const auto& s : deg2) CHECK(rank_report(s).rank == 5);

    auto cusp = enumerate_admissible_subdivisions(tri(3), AdmissibilityMode::OneCusp, 7);
    CHECK_FALSE(cusp.empty());
    for (const auto& s : cusp) {
        long quads = std::count_if(s.cells().begin(), s.cells().end(), [](const LatticePolygon& c) {
            return classify_cell(c).kind == CellKind::GenericQuadrilateral;
        });
        CHECK(quads == 1);
        CHECK(is_regular(s));
    }

    CHECK_THROWS_AS(enumerate_subdivision_shapes(tri(3), AdmissibilityMode::Nodal, EnumerationOptions{3}),
                    ResourceLimit);
}

TEST_CASE("mode names") {
    CHECK(parse_mode("nodal") == AdmissibilityMode::Nodal);
    CHECK(parse_mode("cusp") == AdmissibilityMode::OneCusp);
    CHECK(to_string(AdmissibilityMode::OneCusp) == "cusp");
    CHECK_THROWS(parse_mode("tacnode"));
}
