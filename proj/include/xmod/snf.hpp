// Smith normal form over the integers, plus the two derived solvers the
// cohomology code needs: exact solution of A x = b over Z and a basis of the
// integer kernel lattice. Matrices here are tiny (nerve incidence systems),
// so a dense int64 implementation with smallest-pivot reduction is plenty;
// entry growth is guarded by an overflow check rather than big integers.
#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace xmod {

using IMat = std::vector<std::vector<long long>>;  // row major, rectangular

inline IMat identity_mat(int n) {
    IMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

namespace detail {

constexpr long long kEntryLimit = 1LL << 42;

// a + f*b with an overflow guard; matrices here never get near the limit.
// Inputs always satisfy |a|, |b| <= kEntryLimit, so the sum cannot wrap once
// the product is bounded.
inline long long fma_checked(long long a, long long f, long long b) {
    if (f != 0 && std::llabs(b) > kEntryLimit / std::llabs(f))
        throw std::overflow_error("snf: entry growth beyond guard");
    long long v = a + f * b;
    if (v > kEntryLimit || v < -kEntryLimit)
        throw std::overflow_error("snf: entry growth beyond guard");
    return v;
}

}  // namespace detail

// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... ; rank is
// the number of nonzero diagonal entries.
struct SmithResult {
    IMat u, s, v;
    int rank = 0;
    long long diag(int i) const {
        return (i < static_cast<int>(s.size()) && i < static_cast<int>(s[0].size())) ? s[i][i] : 0;
    }
};

inline SmithResult smith_normal_form(IMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithResult r;
    r.u = identity_mat(rows);
    r.v = identity_mat(cols);
    if (rows == 0 || cols == 0) {
        r.s = std::move(a);
        return r;
    }

    auto row_add = [&](int dst, int src, long long f) {  // row dst += f * row src
        for (int j = 0; j < cols; ++j) a[dst][j] = detail::fma_checked(a[dst][j], f, a[src][j]);
        for (int j = 0; j < rows; ++j) r.u[dst][j] = detail::fma_checked(r.u[dst][j], f, r.u[src][j]);
    };
    auto col_add = [&](int dst, int src, long long f) {
        for (int i = 0; i < rows; ++i) a[i][dst] = detail::fma_checked(a[i][dst], f, a[i][src]);
        for (int i = 0; i < cols; ++i) r.v[i][dst] = detail::fma_checked(r.v[i][dst], f, r.v[i][src]);
    };
    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(r.u[i], r.u[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < rows; ++k) std::swap(a[k][i], a[k][j]);
        for (int k = 0; k < cols; ++k) std::swap(r.v[k][i], r.v[k][j]);
    };
    auto row_neg = [&](int i) {
        for (int j = 0; j < cols; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < rows; ++j) r.u[i][j] = -r.u[i][j];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // smallest-magnitude nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) {
                row_add(i, t, -(a[i][t] / a[t][t]));
                if (a[i][t] != 0) clean = false;
            }
        for (int j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) {
                col_add(j, t, -(a[t][j] / a[t][t]));
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // remainders became new, smaller pivots

        // divisibility: fold any non-multiple into the pivot column and redo
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_add(t, i, 1);
                    divides = false;
                }
        if (!divides) continue;
        if (a[t][t] < 0) row_neg(t);
        ++t;
    }
    r.rank = t;
    r.s = std::move(a);
    return r;
}

// One integer solution of A x = b, if any. `cols` must be passed explicitly
// so that 0-row systems keep their variable count.
inline std::optional<std::vector<long long>> solve_integer(const IMat& a, int cols,
                                                           const std::vector<long long>& b) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return std::vector<long long>(cols, 0);
    SmithResult snf = smith_normal_form(a);
    // A = U^-1 S V^-1; solve S y = U b, then x = V y
    std::vector<long long> ub(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) ub[i] = detail::fma_checked(ub[i], snf.u[i][j], b[j]);
    std::vector<long long> y(cols, 0);
    for (int i = 0; i < rows; ++i) {
        long long d = i < cols ? snf.s[i][i] : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    std::vector<long long> x(cols, 0);
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) x[i] = detail::fma_checked(x[i], snf.v[i][j], y[j]);
    return x;
}

// Columns spanning { x : A x = 0 } as a lattice.
inline std::vector<std::vector<long long>> integer_kernel_basis(const IMat& a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<std::vector<long long>> basis;
    if (rows == 0) return identity_mat(cols);
    SmithResult snf = smith_normal_form(a);
    for (int j = snf.rank; j < cols; ++j) {
        std::vector<long long> col(cols);
        for (int i = 0; i < cols; ++i) col[i] = snf.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace xmod
