#pragma once

#include "lps/rational.hpp"

#include <optional>
#include <vector>

namespace lps {

/// Dense square-or-rectangular matrix of exact rationals, row-major.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols);
    explicit RMatrix(std::vector<RVector> rows);

    static RMatrix identity(std::size_t n);
    /// Matrix whose j-th column is columns[j].
    static RMatrix fromColumns(const std::vector<RVector>& columns);
    static RMatrix fromIntegers(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    RVector row(std::size_t r) const;
    RVector column(std::size_t c) const;
    RVector apply(const RVector& x) const;
    RMatrix operator*(const RMatrix& other) const;
    RMatrix transpose() const;
    bool isIntegral() const;

    bool operator==(const RMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(const RMatrix& m);

/// Rank of the span of the given row vectors.
std::size_t rank(const std::vector<RVector>& rows);

/// Basis of { x : r . x = 0 for every row r } in `dim` unknowns.
std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t dim);

/// Unique solution of m x = rhs, or nullopt when m is singular.
std::optional<RVector> solve(const RMatrix& m, const RVector& rhs);

/// Row echelon data of a row set: rank and the pivot column of each pivot row.
struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};
Echelon echelon(std::vector<RVector> rows, std::size_t cols);

} // namespace lps
