#include "reglab/polyhedra/linear.hpp"

#include <stdexcept>

namespace reglab {

bool lp_feasible(const RMatrix& A, const RVector& b) {
    const std::size_t m = A.size();
    if (m == 0) return true;
    const std::size_t n = A[0].size();
    const std::size_t cols = n + m;  // structural then artificial
    RMatrix T(m, RVector(cols + 1));
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("ragged constraint matrix");
        bool flip = sgn(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = flip ? Rational(-b[i]) : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs for minimizing the sum of artificials; last slot holds -objective.
    RVector d(cols + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < n || j == cols) d[j] -= T[i][j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(d[j]) < 0) { enter = j; break; }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(T[i][enter]) <= 0) continue;
            Rational ratio = T[i][cols] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase one
        Rational piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(T[i][enter]) == 0) continue;
            Rational f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (sgn(d[enter]) != 0) {
            Rational f = d[enter];
            for (std::size_t j = 0; j <= cols; ++j) d[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return sgn(d[cols]) == 0;
}

RMatrix nullspace(const RMatrix& A, std::size_t ncols) {
    RMatrix M = A;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < ncols && row < M.size(); ++c) {
        std::size_t p = row;
        while (p < M.size() && sgn(M[p][c]) == 0) ++p;
        if (p == M.size()) continue;
        std::swap(M[p], M[row]);
        Rational inv = 1 / M[row][c];
        for (auto& v : M[row]) v *= inv;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == row || sgn(M[i][c]) == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = 0; j < ncols; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    RMatrix basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        RVector v(ncols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -M[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVector> solve_square(RMatrix A, RVector b) {
    const std::size_t n = A.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(A[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(A[i][c]) == 0) continue;
            Rational f = A[i][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
            b[i] -= f * b[c];
        }
    }
    RVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace reglab
