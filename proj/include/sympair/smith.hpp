#pragma once

// Smith normal form of a square integer matrix, with the left transform
// and its inverse tracked so quotient groups Z^n / col(A) can be presented.

#include <cmath>
#include <cstdlib>

#include "sympair/core.hpp"

namespace sympair {

struct SmithResult {
    std::vector<Int> diag;  // d_1 | d_2 | ... (non-negative), length n
    IntMat u;               // unimodular, u*a*v = diag
    IntMat u_inv;
};

// Row/column elimination with the classic divisibility fix-up. Entries at
// desk scale stay tiny; no overflow guards needed.
inline SmithResult smith_normal_form(IntMat a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a) check(static_cast<int>(row.size()) == n, "smith: matrix not square");

    IntMat u = mat_identity(n), uinv = mat_identity(n);

    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
        for (int r = 0; r < n; ++r) std::swap(uinv[r][i], uinv[r][j]);
    };
    auto row_addmul = [&](int i, int j, Int c) {  // row_i += c * row_j
        for (int t = 0; t < n; ++t) a[i][t] += c * a[j][t];
        for (int t = 0; t < n; ++t) u[i][t] += c * u[j][t];
        for (int r = 0; r < n; ++r) uinv[r][j] -= c * uinv[r][i];
    };
    auto row_negate = [&](int i) {
        for (int t = 0; t < n; ++t) a[i][t] = -a[i][t];
        for (int t = 0; t < n; ++t) u[i][t] = -u[i][t];
        for (int r = 0; r < n; ++r) uinv[r][i] = -uinv[r][i];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto col_addmul = [&](int i, int j, Int c) {  // col_i += c * col_j
        for (int r = 0; r < n; ++r) a[r][i] += c * a[r][j];
    };

    for (int t = 0; t < n; ++t) {
        // locate a pivot of minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // trailing block is zero
        row_swap(t, pi);
        col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                Int q = floor_div(a[i][t], a[t][t]);
                row_addmul(i, t, -q);
                if (a[i][t] != 0) {  // remainder smaller than pivot: promote it
                    row_swap(t, i);
                    again = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = floor_div(a[t][j], a[t][t]);
                col_addmul(j, t, -q);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    again = true;
                }
            }
        }
        if (a[t][t] < 0) { row_negate(t); }

        // enforce d_t | entries of the remaining block
        for (int i = t + 1; i < n && a[t][t] != 0; ++i)
            for (int j = t + 1; j < n; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_addmul(t, i, 1);
                    // re-run elimination for this diagonal slot
                    --t;
                    i = n;
                    break;
                }
    }

    SmithResult res;
    res.diag.resize(n);
    for (int i = 0; i < n; ++i) res.diag[i] = a[i][i] < 0 ? -a[i][i] : a[i][i];
    res.u = std::move(u);
    res.u_inv = std::move(uinv);
    check(mat_is_identity(mat_mul(res.u, res.u_inv)), "smith: transform inverse broken");
    return res;
}

}  // namespace sympair
