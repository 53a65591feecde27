#pragma once

// Lower faces of a lifted point set by testing every triple, and the
// dimension of continuous cellwise-affine functions on a subdivision.

#include <array>
#include <cmath>
#include <set>
#include <vector>

namespace oracle {

struct Lifted {
    long long x, y, z;
};

// Each lower face is reported once, as the sorted indices of the points on it.
inline std::set<std::vector<std::size_t>> lower_faces(const std::vector<Lifted>& pts) {
    std::set<std::vector<std::size_t>> faces;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto &a = pts[i], &b = pts[j], &c = pts[k];
                long long ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
                long long vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
                long long nx = uy * vz - uz * vy, ny = uz * vx - ux * vz, nz = ux * vy - uy * vx;
                if (nz == 0) continue;
                if (nz < 0) nx = -nx, ny = -ny, nz = -nz;
                std::vector<std::size_t> on;
                bool lower = true;
                for (std::size_t t = 0; t < n && lower; ++t) {
                    long long s = nx * (pts[t].x - a.x) + ny * (pts[t].y - a.y) + nz * (pts[t].z - a.z);
                    if (s < 0) lower = false;
                    if (s == 0) on.push_back(t);
                }
                if (lower) faces.insert(on);
            }
    return faces;
}

// Rank of a small real matrix by partial pivoting.
inline std::size_t numeric_rank(std::vector<std::vector<double>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t best = r;
        for (std::size_t i = r; i < m.size(); ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[best][c])) best = i;
        if (std::fabs(m[best][c]) < 1e-9) continue;
        std::swap(m[best], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            double f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// cells: vertex lists. Unknowns (a, b, c) per cell for a x + b y + c; adjacent
// cells must agree at every shared vertex. Result is the dimension modulo constants.
inline long cone_dimension(const std::vector<std::vector<std::array<long long, 2>>>& cells) {
    std::vector<std::vector<double>> rows;
    const std::size_t unknowns = 3 * cells.size();
    for (std::size_t c1 = 0; c1 < cells.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cells.size(); ++c2)
            for (const auto& p : cells[c1])
                for (const auto& q : cells[c2])
                    if (p == q) {
                        std::vector<double> row(unknowns, 0.0);
                        row[3 * c1] = double(p[0]), row[3 * c1 + 1] = double(p[1]), row[3 * c1 + 2] = 1;
                        row[3 * c2] = -double(p[0]), row[3 * c2 + 1] = -double(p[1]), row[3 * c2 + 2] = -1;
                        rows.push_back(row);
                    }
    return static_cast<long>(unknowns) - static_cast<long>(numeric_rank(rows)) - 1;
}

}  // namespace oracle
