#pragma once

// Numeric count of special members of linear systems of plane cubics by
// multi-start Newton iteration in complex affine coordinates.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// Coefficients of x^i y^j for i + j <= 3, in the order of monomial_exponents().
using Cubic = std::array<cd, 10>;

const std::array<std::array<int, 2>, 10>& monomial_exponents();

Cubic random_cubic(std::uint64_t seed);

struct RootSearchOptions {
    int batch = 400;            // starts per batch
    int stable_batches = 6;     // stop after this many batches without a new root
    int max_batches = 200;
    int max_iterations = 80;
    std::uint64_t seed = 1;
};

struct RootSearchResult {
    std::vector<std::vector<cd>> roots;  // nonsingular, deduplicated
    int batches = 0;
    long starts = 0;
    bool stabilized = false;
};

// Singular members F0 + t F1 of a pencil: unknowns (x, y, t), equations g = g_x = g_y = 0.
RootSearchResult singular_members_of_pencil(const Cubic& f0, const Cubic& f1, const RootSearchOptions& opt);

// Cuspidal members F0 + a F1 + b F2 of a net: unknowns (x, y, a, b), equations
// g = g_x = g_y = 0 and g_xx g_yy - g_xy^2 = 0.
RootSearchResult cuspidal_members_of_net(const Cubic& f0, const Cubic& f1, const Cubic& f2,
                                         const RootSearchOptions& opt);

}  // namespace oracle
