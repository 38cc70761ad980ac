#pragma once

#include <tuple>
#include <vector>

namespace coxred {

// Signature (positive, negative, zero) of a symmetric matrix over an exact
// ordered field type F (needs +,-,*,/, is_zero(), sign()).  Symmetric
// congruence elimination: pick a nonzero diagonal pivot, clear its row and
// column; when the remaining diagonal vanishes but some off-diagonal entry
// a_ij does not, the congruence e_i -> e_i + e_j makes 2 a_ij a usable pivot.
template <class F>
std::tuple<int, int, int> symmetric_signature(std::vector<std::vector<F>> a) {
    int n = static_cast<int>(a.size());
    std::vector<int> alive(n, 1);
    int pos = 0, neg = 0;
    for (;;) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (alive[i] && !a[i][i].is_zero()) { piv = i; break; }
        if (piv < 0) {
            int oi = -1, oj = -1;
            for (int i = 0; i < n && oi < 0; ++i) {
                if (!alive[i]) continue;
                for (int j = i + 1; j < n; ++j)
                    if (alive[j] && !a[i][j].is_zero()) { oi = i; oj = j; break; }
            }
            if (oi < 0) break;  // remaining block is zero
            for (int k = 0; k < n; ++k) {
                if (!alive[k]) continue;
                a[oi][k] = a[oi][k] + a[oj][k];
            }
            for (int k = 0; k < n; ++k) {
                if (!alive[k]) continue;
                a[k][oi] = a[k][oi] + a[k][oj];
            }
            continue;
        }
        int s = a[piv][piv].sign();
        if (s > 0) ++pos; else ++neg;
        alive[piv] = 0;
        F d = a[piv][piv];
        for (int i = 0; i < n; ++i) {
            if (!alive[i] || a[i][piv].is_zero()) continue;
            F f = a[i][piv] / d;
            for (int j = 0; j < n; ++j) {
                if (!alive[j]) continue;
                a[i][j] = a[i][j] - f * a[piv][j];
            }
            a[i][piv] = a[i][piv] - a[i][piv];  // zero of F
        }
    }
    int zero = n - pos - neg;
    return {pos, neg, zero};
}

// Solve a x = b over an exact field (a square invertible); returns x.
// Throws std::domain_error when a is singular.
template <class F>
std::vector<F> field_solve(std::vector<std::vector<F>> a, std::vector<F> b) {
    int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular system over exact field");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            F f = a[r][col] / a[col][col];
            for (int j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
            b[r] = b[r] - f * b[col];
        }
    }
    std::vector<F> x;
    x.reserve(n);
    for (int i = 0; i < n; ++i) x.push_back(b[i] / a[i][i]);
    return x;
}

} // namespace coxred
