#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cliffgen/dyadic.hpp"

namespace cliffgen {

/// Dense matrix of exact dyadic rationals; just enough linear algebra for
/// coordinate extraction and orthogonality checks. First-nonzero pivoting —
/// entries stay in Z[1/2] for every system this library produces, and any
/// division that would leave the ring throws.
struct DyadicMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Dyadic> a;

    DyadicMatrix() = default;
    DyadicMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}

    Dyadic& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const Dyadic& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    static DyadicMatrix identity(int n) {
        DyadicMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = Dyadic(1);
        return m;
    }

    DyadicMatrix transposed() const {
        DyadicMatrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    DyadicMatrix operator*(const DyadicMatrix& o) const {
        if (cols != o.rows)
            throw std::invalid_argument("DyadicMatrix: shape mismatch in product");
        DyadicMatrix p(rows, o.cols);
        for (int r = 0; r < rows; ++r)
            for (int k = 0; k < cols; ++k) {
                if (at(r, k).is_zero())
                    continue;
                for (int c = 0; c < o.cols; ++c)
                    p.at(r, c) += at(r, k) * o.at(k, c);
            }
        return p;
    }

    bool operator==(const DyadicMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

namespace detail {

inline Dyadic div_or_throw(const Dyadic& x, const Dyadic& y) {
    auto q = x.divide_exact(y);
    if (!q)
        throw std::domain_error("exact elimination left Z[1/2]: " + x.str() + " / " + y.str());
    return *q;
}

}  // namespace detail

/// Row-echelon rank via exact elimination.
inline int exact_rank(DyadicMatrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int k = 0; k < m.cols; ++k)
                std::swap(m.at(pivot, k), m.at(rank, k));
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.at(r, c).is_zero())
                continue;
            Dyadic f = detail::div_or_throw(m.at(r, c), m.at(rank, c));
            for (int k = c; k < m.cols; ++k)
                m.at(r, k) -= f * m.at(rank, k);
        }
        ++rank;
    }
    return rank;
}

/// Solve A x = b exactly. Returns nullopt when inconsistent; throws when the
/// solution is not unique (rank-deficient columns) or leaves Z[1/2].
inline std::optional<std::vector<Dyadic>> exact_solve(const DyadicMatrix& A,
                                                      const std::vector<Dyadic>& b) {
    if (int(b.size()) != A.rows)
        throw std::invalid_argument("exact_solve: rhs size mismatch");
    DyadicMatrix m(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c)
            m.at(r, c) = A.at(r, c);
        m.at(r, A.cols) = b[r];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < A.cols && row < m.rows; ++c) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r)
            if (!m.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != row)
            for (int k = 0; k <= A.cols; ++k)
                std::swap(m.at(pivot, k), m.at(row, k));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, c).is_zero())
                continue;
            Dyadic f = detail::div_or_throw(m.at(r, c), m.at(row, c));
            for (int k = c; k <= A.cols; ++k)
                m.at(r, k) -= f * m.at(row, k);
        }
        pivot_col.push_back(c);
        ++row;
    }
    // rows below the pivot rows must have zero rhs, else inconsistent
    for (int r = row; r < m.rows; ++r)
        if (!m.at(r, A.cols).is_zero())
            return std::nullopt;
    if (int(pivot_col.size()) != A.cols)
        throw std::domain_error("exact_solve: dependent columns (solution not unique)");
    std::vector<Dyadic> x(A.cols);
    for (int r = 0; r < int(pivot_col.size()); ++r)
        x[pivot_col[r]] = detail::div_or_throw(m.at(r, A.cols), m.at(r, pivot_col[r]));
    return x;
}

/// Exact determinant. Rows are scaled to integers first, then fraction-free
/// Bareiss elimination runs over BigInt, so arbitrary dyadic entries are fine.
inline Dyadic exact_det(const DyadicMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("exact_det: square matrix required");
    const int n = m.rows;
    if (n == 0)
        return Dyadic(1);
    std::vector<BigInt> w(std::size_t(n) * n);
    unsigned shift = 0;
    for (int r = 0; r < n; ++r) {
        unsigned e = 0;
        for (int c = 0; c < n; ++c)
            e = std::max(e, m.at(r, c).exponent());
        shift += e;
        for (int c = 0; c < n; ++c) {
            const Dyadic& d = m.at(r, c);
            w[std::size_t(r) * n + c] = d.numerator() << (e - d.exponent());
        }
    }
    auto at = [&](int r, int c) -> BigInt& { return w[std::size_t(r) * n + c]; };
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return Dyadic(0);
            for (int c = 0; c < n; ++c)
                std::swap(at(pivot, c), at(k, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
        prev = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0)
        det = -det;
    return Dyadic(det, shift);
}

}  // namespace cliffgen
