#include <doctest.h>

#include <optional>
#include <random>

#include "../oracles/lattice_oracles.hpp"
#include "tropcount/errors.hpp"
#include "tropcount/quadcusp.hpp"

using namespace tropcount;

namespace {

long g(long a, long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

}  // namespace

TEST_CASE("eta and xi") {
    NormalQuadrilateral q({3, 1, 1, 2, 1});
    auto cp = eta_xi(q);
    CHECK(cp.eta == Rational(1, 3));
    CHECK(cp.xi == Rational(5, 9));
    // (p+r) q = r m
    CHECK_THROWS_AS(eta_xi(QuadParameters{2, 1, 1, 1, 1}), DegenerateParameters);
}

TEST_CASE("xi by plain fractions on random quadrilaterals") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(1, 12);
    int seen = 0;
    while (seen < 40) {
        QuadParameters qp{c(rng), c(rng), c(rng), c(rng), c(rng)};
        try {
            NormalQuadrilateral quad(qp);
            auto cp = eta_xi(quad);
            // xi = ((p+r+s) q^2 - (r+s) q m) / (m ((p+r) q - r m))
            long num = (qp.p + qp.r + qp.s) * qp.q * qp.q - (qp.r + qp.s) * qp.q * qp.m;
            long den = qp.m * ((qp.p + qp.r) * qp.q - qp.r * qp.m);
            Rational expected(static_cast<long>(num), static_cast<long>(den));
            expected.canonicalize();
            CHECK(cp.xi == expected);
            ++seen;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("quadrilateral counts") {
    NormalQuadrilateral q({3, 1, 1, 2, 1});
    CHECK(q.d1() == 1);
    CHECK(q.d2() == 1);
    CHECK(count_adjacent(q) == 3);
    CHECK(count_opposite(q) == 2);
    CHECK(binomial_oracle(q) == 3);
    CHECK_THROWS_AS(NormalQuadrilateral({2, 1, 1, 1, 1}), std::invalid_argument);
    // m - q = d1
    NormalQuadrilateral minimal({3, 2, 1, 3, 1});
    CHECK(minimal.d1() == 2);
    CHECK(count_opposite(minimal) == 1);
}

TEST_CASE("binomial systems") {
    CHECK(binomial_solution_count({{1, 0}, {0, 1}}) == 1);
    CHECK(binomial_solution_count({{1, 2}, {2, 1}}) == 3);
    CHECK(binomial_solution_count({{2, 0}, {0, 3}}) == 6);
    CHECK_THROWS_AS(binomial_solution_count({{1, 2}, {2, 4}}), std::invalid_argument);
    // invariants: gcd of entries first, product |det|, each dividing the next
    auto snf = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    REQUIRE(snf.size() == 3);
    long det = 2 * (6 * 16 - 12 * 4) - 4 * (-6 * 16 - 12 * 10) + 4 * (-6 * 4 - 6 * 10);
    CHECK(snf[0] == 2);
    CHECK(snf[0] * snf[1] * snf[2] == static_cast<long>(std::llabs(det)));
    CHECK(snf[1] % snf[0] == 0);
    CHECK(snf[2] % snf[1] == 0);
}

TEST_CASE("counts match fundamental-domain lattice indices") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(1, 12);
    int seen = 0;
    while (seen < 60) {
        QuadParameters qp{c(rng), c(rng), c(rng), c(rng), c(rng)};
        std::optional<NormalQuadrilateral> quad;
        try {
            quad.emplace(qp);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++seen;
        long d1 = g(qp.p, qp.m - qp.q), d2 = g(qp.q, qp.r);
        long adj = oracle::lattice_index(qp.p / d1, (qp.q - qp.m) / d1, qp.r / d2, -qp.q / d2);
        long opp = oracle::lattice_index(qp.p / d1, (qp.q - qp.m) / d1, 1, 0);
        CHECK(count_adjacent(*quad) == adj);
        CHECK(binomial_oracle(*quad) == adj);
        CHECK(count_opposite(*quad) == opp);
        CHECK(binomial_oracle_opposite(*quad) == opp);
    }
}

TEST_CASE("nonexistence certificates") {
    auto c21 = nonexistence_certificate(TrapezoidParams{2, 1, 0, 1});
    CHECK(c21.upper == 6);
    CHECK(c21.lower == 7);
    CHECK(c21.forbidden());
    auto c11 = nonexistence_certificate(TriangleParams{1, 1, 1});
    CHECK(c11.upper == 2);
    CHECK(c11.lower == 3);
    CHECK(c11.forbidden());
    for (Int p = 1; p <= 20; ++p)
        for (Int q = 1; q <= 20; ++q) {
            auto c = nonexistence_certificate(TriangleParams{p, q, 1});
            long n = p + q;
            CHECK(c.upper == n * (n - 1));
            CHECK(c.lower == (n - 1) * (n - 2) + 2 * n - 1);
            CHECK(c.lower - c.upper == 1);
        }
    CHECK_THROWS_AS(nonexistence_certificate(TrapezoidParams{1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(nonexistence_certificate(TriangleParams{1, 1, 2}), std::invalid_argument);
}
