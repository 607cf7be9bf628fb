// Smith normal form over Z (arbitrary precision) and over Z/2.
//
// Deterministic: the pivot is always the nonzero entry of minimal
// absolute value, ties broken by lowest (row, column).  Transforms are
// tracked so that A = U S V with U, V unimodular and S diagonal with a
// divisibility chain.  A transform-free sparse variant supplies ranks
// for the larger Borel matrices.

#ifndef SYMSQ_SNF_HPP
#define SYMSQ_SNF_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "symsq/rings.hpp"

namespace symsq {

template <class T>
using Matrix = std::vector<std::vector<T>>;  // row-major

template <class T>
using SparseCol = std::vector<std::pair<int, T>>;  // sorted by index

template <class T>
inline Matrix<T> identity_matrix(int n) {
    Matrix<T> I(n, std::vector<T>(n, T(0)));
    for (int i = 0; i < n; ++i) I[i][i] = T(1);
    return I;
}

template <class T>
inline Matrix<T> matmul(const Matrix<T>& A, const Matrix<T>& B) {
    int m = static_cast<int>(A.size());
    int n = m ? static_cast<int>(B[0].size()) : 0;
    int k = static_cast<int>(B.size());
    Matrix<T> C(m, std::vector<T>(n, T(0)));
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < k; ++l) {
            if (is_zero(A[i][l])) continue;
            for (int j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

template <class T>
struct SNFResult {
    Matrix<T> S;                 // m x n diagonal
    Matrix<T> U, Uinv;           // m x m
    Matrix<T> V, Vinv;           // n x n
    std::vector<T> diag;         // the invariant factors (nonzero prefix)
    int rank = 0;

    /// U^{-1} b, for membership/solve queries.
    std::vector<T> apply_Uinv(const std::vector<T>& b) const {
        int m = static_cast<int>(Uinv.size());
        std::vector<T> y(m, T(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!is_zero(Uinv[i][j])) y[i] += Uinv[i][j] * b[j];
        return y;
    }

    std::vector<T> apply_V(const std::vector<T>& x) const {
        int n = static_cast<int>(V.size());
        std::vector<T> y(n, T(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!is_zero(V[i][j])) y[i] += V[i][j] * x[j];
        return y;
    }
};

namespace detail {

/// Quotient with the remainder of least absolute value (|r| <= |b|/2),
/// so repeated reduction against a pivot shrinks entries geometrically.
/// Over a field the division is exact.
template <class T>
T nearest_quotient(const T& a, const T& b) {
    if constexpr (RingTraits<T>::is_field) {
        return a / b;
    } else {
        T q = a / b;
        T r = a - q * b;
        T r2 = r + r;
        T babs = b < T(0) ? T(0) - b : b;
        T r2abs = r2 < T(0) ? T(0) - r2 : r2;
        if (r2abs > babs) q += ((r < T(0)) == (b < T(0))) ? T(1) : T(0) - T(1);
        return q;
    }
}

template <class T>
struct SNFWorker {
    Matrix<T>& S;
    Matrix<T>&U, &Uinv, &V, &Vinv;
    int m, n;

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(S[i], S[j]);
        for (int c = 0; c < m; ++c) std::swap(U[c][i], U[c][j]);
        std::swap(Uinv[i], Uinv[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < static_cast<int>(S.size()); ++r)
            std::swap(S[r][i], S[r][j]);
        std::swap(V[i], V[j]);
        for (int r = 0; r < n; ++r) std::swap(Vinv[r][i], Vinv[r][j]);
    }
    /// row i -= q * row j
    void row_sub(int i, int j, const T& q) {
        if (is_zero(q)) return;
        for (int c = 0; c < n; ++c) S[i][c] -= q * S[j][c];
        for (int r = 0; r < m; ++r) U[r][j] += q * U[r][i];
        for (int c = 0; c < m; ++c) Uinv[i][c] -= q * Uinv[j][c];
    }
    /// col i -= q * col j
    void col_sub(int i, int j, const T& q) {
        if (is_zero(q)) return;
        for (int r = 0; r < m; ++r) S[r][i] -= q * S[r][j];
        for (int c = 0; c < n; ++c) V[j][c] += q * V[i][c];
        for (int r = 0; r < n; ++r) Vinv[r][i] -= q * Vinv[r][j];
    }
    void negate_row(int i) {
        for (int c = 0; c < n; ++c) S[i][c] = T(0) - S[i][c];
        for (int r = 0; r < m; ++r) U[r][i] = T(0) - U[r][i];
        for (int c = 0; c < m; ++c) Uinv[i][c] = T(0) - Uinv[i][c];
    }

    /// Minimal-abs nonzero entry of the submatrix at (t,t), or {-1,-1}.
    std::pair<int, int> find_pivot(int t) const {
        int bi = -1, bj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (is_zero(S[i][j])) continue;
                if (bi < 0 || RingTraits<T>::abs_less(S[i][j], S[bi][bj])) {
                    bi = i;
                    bj = j;
                }
            }
        return {bi, bj};
    }
};

}  // namespace detail

template <class T>
SNFResult<T> smith_normal_form(const Matrix<T>& A) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    SNFResult<T> R;
    R.S = A;
    if (m == 0) {
        R.U = R.Uinv = Matrix<T>{};
        R.V = R.Vinv = identity_matrix<T>(n);
        return R;
    }
    R.U = identity_matrix<T>(m);
    R.Uinv = identity_matrix<T>(m);
    R.V = identity_matrix<T>(n);
    R.Vinv = identity_matrix<T>(n);
    detail::SNFWorker<T> W{R.S, R.U, R.Uinv, R.V, R.Vinv, m, n};

    int t = 0;
    const int bound = std::min(m, n);
    while (t < bound) {
        auto [pi, pj] = W.find_pivot(t);
        if (pi < 0) break;  // submatrix zero
        W.swap_rows(t, pi);
        W.swap_cols(t, pj);
        // reduce column and row t against the pivot; any surviving
        // remainder is at most half the pivot, so re-pivoting terminates
        bool dirty = false;
        for (int i = t + 1; i < m; ++i) {
            if (is_zero(R.S[i][t])) continue;
            W.row_sub(i, t, detail::nearest_quotient(R.S[i][t], R.S[t][t]));
            if (!is_zero(R.S[i][t])) dirty = true;
        }
        for (int j = t + 1; j < n; ++j) {
            if (is_zero(R.S[t][j])) continue;
            W.col_sub(j, t, detail::nearest_quotient(R.S[t][j], R.S[t][t]));
            if (!is_zero(R.S[t][j])) dirty = true;
        }
        if (dirty) continue;  // pick the new minimal entry as the pivot
        // pivot must divide every remaining entry
        bool divides = true;
        for (int i = t + 1; i < m && divides; ++i)
            for (int j = t + 1; j < n; ++j) {
                T r = R.S[i][j] - (R.S[i][j] / R.S[t][t]) * R.S[t][t];
                if (!is_zero(r)) {
                    W.row_sub(t, i, T(0) - T(1));  // add row i to row t
                    divides = false;
                    break;
                }
            }
        if (divides) ++t;
    }
    if constexpr (!RingTraits<T>::is_field) {
        for (int i = 0; i < bound; ++i)
            if (R.S[i][i] < T(0)) W.negate_row(i);
    }
    for (int i = 0; i < bound && !is_zero(R.S[i][i]); ++i)
        R.diag.push_back(R.S[i][i]);
    R.rank = static_cast<int>(R.diag.size());
    return R;
}

/// Rank of a sparse matrix by minimal-pivot elimination, without
/// transform tracking.  Row/column operations are unimodular, so the
/// count of pivots is the rank over the fraction field; used for
/// rank/Betti queries on complexes too large for the dense routine.
template <class T>
int sparse_rank(const std::vector<SparseCol<T>>& cols, int rows) {
    // doubly indexed sparse storage
    std::vector<std::map<int, T>> rmat(rows);
    std::vector<std::map<int, T>> cmat(cols.size());
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [r, v] : cols[j]) {
            rmat[r][j] = v;
            cmat[j][r] = v;
        }
    auto set_entry = [&](int i, int j, const T& v) {
        if (is_zero(v)) {
            rmat[i].erase(j);
            cmat[j].erase(i);
        } else {
            rmat[i][j] = v;
            cmat[j][i] = v;
        }
    };
    int rank = 0;
    while (true) {
        int pi = -1, pj = -1;
        for (int i = 0; i < rows; ++i)
            for (const auto& [j, v] : rmat[i])
                if (pi < 0 || RingTraits<T>::abs_less(v, rmat[pi].at(pj))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        bool again = true;
        while (again) {
            again = false;
            T pivot = rmat[pi].at(pj);
            std::vector<int> col_rows;
            for (const auto& [i, v] : cmat[pj])
                if (i != pi) col_rows.push_back(i);
            for (int i : col_rows) {
                auto it = rmat[i].find(pj);
                if (it == rmat[i].end()) continue;
                T q = detail::nearest_quotient(it->second, pivot);
                if (!is_zero(q)) {
                    std::vector<std::pair<int, T>> prow(rmat[pi].begin(),
                                                        rmat[pi].end());
                    for (const auto& [j, v] : prow) {
                        T cur = rmat[i].count(j) ? rmat[i][j] : T(0);
                        set_entry(i, j, cur - q * v);
                    }
                }
                if (rmat[i].count(pj)) {  // remainder: strictly smaller pivot
                    pi = i;
                    again = true;
                    break;
                }
            }
            if (again) continue;
            pivot = rmat[pi].at(pj);
            std::vector<int> row_cols;
            for (const auto& [j, v] : rmat[pi])
                if (j != pj) row_cols.push_back(j);
            for (int j : row_cols) {
                auto it = rmat[pi].find(j);
                if (it == rmat[pi].end()) continue;
                T q = detail::nearest_quotient(it->second, pivot);
                if (!is_zero(q)) {
                    std::vector<std::pair<int, T>> pcol(cmat[pj].begin(),
                                                        cmat[pj].end());
                    for (const auto& [i, v] : pcol) {
                        T cur = rmat[i].count(j) ? rmat[i][j] : T(0);
                        set_entry(i, j, cur - q * v);
                    }
                }
                if (rmat[pi].count(j)) {
                    pj = j;
                    again = true;
                    break;
                }
            }
        }
        ++rank;
        std::vector<int> prow_cols;
        for (const auto& [j, v] : rmat[pi]) prow_cols.push_back(j);
        for (int j : prow_cols) set_entry(pi, j, T(0));
        std::vector<int> pcol_rows;
        for (const auto& [i, v] : cmat[pj]) pcol_rows.push_back(i);
        for (int i : pcol_rows) set_entry(i, pj, T(0));
    }
    return rank;
}

}  // namespace symsq

#endif  // SYMSQ_SNF_HPP
