#include <doctest.h>

#include "cubic_net.hpp"
#include "lattice_oracles.hpp"
#include "hull_oracle.hpp"

TEST_CASE("a pencil of plane cubics has 12 singular members") {
    for (std::uint64_t seed : {11u, 12u}) {
        oracle::RootSearchOptions opt;
        opt.seed = seed;
        auto r = oracle::singular_members_of_pencil(oracle::random_cubic(seed * 10), oracle::random_cubic(seed * 10 + 1), opt);
        CHECK(r.stabilized);
        CHECK(r.roots.size() == 12);
    }
}

TEST_CASE("lattice index by fundamental domain") {
    CHECK(oracle::lattice_index(1, 0, 0, 1) == 1);
    CHECK(oracle::lattice_index(1, 2, 2, 1) == 3);
    CHECK(oracle::lattice_index(2, 0, 0, 3) == 6);
    CHECK(oracle::lattice_index(3, 1, -2, 5) == 17);
}

TEST_CASE("brute-force lower faces") {
    // square with a raised corner splits along the other diagonal
    std::vector<oracle::Lifted> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
    auto faces = oracle::lower_faces(pts);
    CHECK(faces.size() == 2);
    CHECK(faces.count({0, 1, 2}) == 1);
    CHECK(faces.count({1, 2, 3}) == 1);
}

TEST_CASE("continuous cellwise-affine dimension") {
    // two triangles sharing an edge: 4 vertex values, minus constants
    CHECK(oracle::cone_dimension({{{0, 0}, {1, 0}, {0, 1}}, {{1, 0}, {1, 1}, {0, 1}}}) == 3);
    CHECK(oracle::cone_dimension({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}) == 2);
}
