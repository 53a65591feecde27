#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tropcount/rational.hpp"

namespace tropcount {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static int sign(const Rational& v) { return sgn(v); }
    static bool normalize_rows() { return false; }
};

template <>
struct ScalarOps<double> {
    static constexpr double eps = 1e-10;
    static int sign(double v) { return v > eps ? 1 : (v < -eps ? -1 : 0); }
    static bool normalize_rows() { return true; }
};

template <class T>
struct MarginResult {
    T margin{};            // optimal min_i (A_i t - b_i), capped at 1
    std::vector<T> point;  // a maximizer t
    bool strictly_feasible() const { return ScalarOps<T>::sign(margin) > 0; }
};

/// Maximizes eps <= 1 subject to A t - eps >= b over free t, by a dense
/// tableau simplex with Bland's rule. A t > b has a solution iff the optimum
/// is positive. Works over exact rationals or (for pruning only) doubles.
template <class T>
MarginResult<T> maximize_margin(std::vector<std::vector<T>> A, std::vector<T> b) {
    using Ops = ScalarOps<T>;
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    MarginResult<T> result;
    result.point.assign(n, T(0));
    if (m == 0) {
        result.margin = T(1);
        return result;
    }
    if constexpr (std::is_same_v<T, double>) {
        if (Ops::normalize_rows()) {
            for (std::size_t i = 0; i < m; ++i) {
                double scale = std::abs(b[i]);
                for (double v : A[i]) scale = std::max(scale, std::abs(v));
                if (scale > 0) {
                    for (double& v : A[i]) v /= scale;
                    b[i] /= scale;
                }
            }
        }
    }

    // substitute eps = delta - beta so the origin is feasible:
    //   -A_i t+ + A_i t- + delta + s_i = beta - b_i,   delta + s_m = 1 + beta
    T beta = T(0);
    for (const auto& bi : b)
        if (bi > beta) beta = bi;

    const std::size_t rows = m + 1;
    const std::size_t delta_col = 2 * n;
    const std::size_t cols = 2 * n + 1 + rows;  // t+, t-, delta, slacks
    const std::size_t rhs = cols;
    std::vector<std::vector<T>> tab(rows, std::vector<T>(cols + 1, T(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            tab[i][j] = -A[i][j];
            tab[i][n + j] = A[i][j];
        }
        tab[i][delta_col] = T(1);
        tab[i][delta_col + 1 + i] = T(1);
        tab[i][rhs] = beta - b[i];
    }
    tab[m][delta_col] = T(1);
    tab[m][delta_col + 1 + m] = T(1);
    tab[m][rhs] = T(1) + beta;

    std::vector<T> cost(cols + 1, T(0));  // reduced costs; cost[rhs] = -objective
    cost[delta_col] = T(1);
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = delta_col + 1 + i;

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (Ops::sign(cost[j]) > 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        T best_ratio{};
        for (std::size_t i = 0; i < rows; ++i) {
            if (Ops::sign(tab[i][enter]) <= 0) continue;
            T ratio = tab[i][rhs] / tab[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (!(best_ratio < ratio) && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) break;  // cannot happen: delta is capped

        T piv = tab[leave][enter];
        for (auto& v : tab[leave]) v /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave) continue;
            T f = tab[i][enter];
            if (Ops::sign(f) == 0 && f == T(0)) continue;
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        T f = cost[enter];
        for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }

    std::vector<T> values(cols, T(0));
    for (std::size_t i = 0; i < rows; ++i) values[basis[i]] = tab[i][rhs];
    for (std::size_t j = 0; j < n; ++j) result.point[j] = values[j] - values[n + j];
    result.margin = values[delta_col] - beta;
    return result;
}

}  // namespace tropcount
