#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcount/rational.hpp"

namespace tropcount {

/// Dense row-major rational matrix; small sizes only.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void append_row(const std::vector<Rational>& r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one column vector per entry.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Unique solution of m x = b for square nonsingular m, nullopt otherwise.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& m, const std::vector<Rational>& b);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace tropcount
