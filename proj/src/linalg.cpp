#include "lps/linalg.hpp"

#include "lps/errors.hpp"

#include <utility>

namespace lps {

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RMatrix::RMatrix(std::vector<RVector> rows) {
    rows_ = rows.size();
    cols_ = rows.empty() ? 0 : rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_)
            throw InputError("ragged matrix rows");
        for (auto& v : r)
            data_.push_back(std::move(v));
    }
}

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RMatrix RMatrix::fromColumns(const std::vector<RVector>& columns) {
    std::size_t n = columns.empty() ? 0 : columns.front().size();
    RMatrix m(n, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < n; ++r)
            m(r, c) = columns[c].at(r);
    return m;
}

RMatrix RMatrix::fromIntegers(const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<RVector> r;
    r.reserve(rows.size());
    for (const auto& row : rows)
        r.push_back(integerVector(row));
    return RMatrix(std::move(r));
}

RVector RMatrix::row(std::size_t r) const {
    return RVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RVector RMatrix::column(std::size_t c) const {
    RVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RVector RMatrix::apply(const RVector& x) const {
    RVector y(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            y[r] += (*this)(r, c) * x[c];
    return y;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
    RMatrix m(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(r, k) == 0)
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                m(r, c) += (*this)(r, k) * other(k, c);
        }
    return m;
}

RMatrix RMatrix::transpose() const {
    RMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(c, r) = (*this)(r, c);
    return m;
}

bool RMatrix::isIntegral() const {
    for (const auto& v : data_)
        if (!isInteger(v))
            return false;
    return true;
}

Rational determinant(const RMatrix& m) {
    if (!m.isSquare())
        throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    RMatrix a = m;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Rational d = a(n - 1, n - 1);
    return sign > 0 ? d : Rational(-d);
}

Echelon echelon(std::vector<RVector> rows, std::size_t cols) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

std::size_t rank(const std::vector<RVector>& rows) {
    if (rows.empty())
        return 0;
    return echelon(rows, rows.front().size()).rank;
}

std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t dim) {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<RVector> a = rows;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[r], a[p]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = 0; j < dim; ++j)
            a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < dim; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> isPivot(dim, false);
    for (auto p : pivots)
        isPivot[p] = true;
    std::vector<RVector> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (isPivot[free])
            continue;
        RVector v = zeros(dim);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVector> solve(const RMatrix& m, const RVector& rhs) {
    const std::size_t n = m.rows();
    std::vector<RVector> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = m.row(i);
        a[i].push_back(rhs[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[c], a[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    RVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

} // namespace lps
