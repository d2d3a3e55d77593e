#include "pgonal/linalg.hpp"

#include <cassert>

namespace pgonal {

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<QVec> solve_linear(QMat a, QVec b) {
    if (a.empty()) return b.empty() ? std::optional<QVec>(QVec{}) : std::nullopt;
    const std::size_t rows = a.size(), cols = a[0].size();
    assert(b.size() == rows);
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    // inconsistent iff some pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::optional<QVec> kernel_vector(QMat a) {
    if (a.empty() || a[0].empty()) return std::nullopt;
    const std::size_t cols = a[0].size();
    const auto pivots = rref(a);
    if (pivots.size() == cols) return std::nullopt;
    // first free column
    std::size_t free_col = 0;
    {
        std::size_t pi = 0;
        while (free_col < cols && pi < pivots.size() && pivots[pi] == free_col) {
            ++pi;
            ++free_col;
        }
    }
    QVec x(cols, Rational(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] < free_col) x[pivots[i]] = -a[i][free_col];
    return x;
}

std::optional<QMat> invert(QMat a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) a[i].push_back(i == j ? Rational(1) : Rational(0));
    }
    const auto pivots = rref(a);
    if (pivots.size() != n) return std::nullopt;
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

Rational determinant(QMat a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const Rational inv = Rational(1) / a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

} // namespace pgonal
