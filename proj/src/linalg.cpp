#include "qsym/linalg.hpp"

namespace qsym {

Matrix identity(size_t n) {
    Matrix m(n, std::vector<Scalar>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
    Matrix r(n, std::vector<Scalar>(p));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t l = 0; l < p; ++l)
                if (!b[j][l].is_zero()) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

Matrix matadd(const Matrix& a, const Matrix& b, const Scalar& s) {
    Matrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j)
            if (!b[i][j].is_zero()) r[i][j] += s * b[i][j];
    return r;
}

Matrix matscale(const Matrix& a, const Scalar& s) {
    Matrix r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

bool matzero(const Matrix& a) {
    for (auto& row : a)
        for (auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::optional<Matrix> matinv(Matrix a) {
    size_t n = a.size();
    Matrix inv = identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Scalar f = a[c][c].inverse();
        for (size_t k = 0; k < n; ++k) {
            a[c][k] *= f;
            inv[c][k] *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar g = a[r][c];
            for (size_t k = 0; k < n; ++k) {
                a[r][k] -= g * a[c][k];
                inv[r][k] -= g * inv[c][k];
            }
        }
    }
    return inv;
}

size_t matrank(Matrix a) {
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t o = r + 1; o < rows; ++o) {
            if (a[o][c].is_zero()) continue;
            Scalar f = a[o][c] / a[r][c];
            for (size_t k = c; k < cols; ++k) a[o][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace qsym
