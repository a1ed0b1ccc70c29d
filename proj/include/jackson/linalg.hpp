#pragma once

// Exact Gaussian elimination over any field scalar type.

#include <vector>

namespace jackson::linalg {

template <class S>
using Matrix = std::vector<std::vector<S>>;

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<int> rref(Matrix<S>& a, int cols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(a[r], a[sel]);
        S inv = a[r][c].inv();
        for (int k = c; k < cols; ++k) a[r][k] = a[r][k] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            S f = a[i][c];
            for (int k = c; k < cols; ++k) a[i][k] = a[i][k] - f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
int rank(Matrix<S> a, int cols) {
    return static_cast<int>(rref(a, cols).size());
}

// Basis of {x : a x = 0}; zero is the field's zero, one its unit.
template <class S>
std::vector<std::vector<S>> nullspace(Matrix<S> a, int cols, const S& zero, const S& one) {
    auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(cols, zero);
        v[f] = one;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace jackson::linalg
