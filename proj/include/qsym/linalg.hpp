#pragma once
#include <optional>
#include <vector>

#include "qsym/scalar.hpp"

namespace qsym {

using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity(size_t n);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matadd(const Matrix& a, const Matrix& b, const Scalar& s = Scalar(1));
Matrix matscale(const Matrix& a, const Scalar& s);
std::optional<Matrix> matinv(Matrix a);
bool matzero(const Matrix& a);
size_t matrank(Matrix a);

// solve M x = rhs for x, with rhs entries in any vector space V over Scalar
// providing add_scaled(const V&, Scalar) and a default "zero" supplied by the caller
template <class V>
std::optional<std::vector<V>> solve_linear(Matrix m, std::vector<V> rhs, const V& zero) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        Scalar inv = m[r][c].inverse();
        for (size_t k = c; k < cols; ++k) m[r][k] *= inv;
        V scaled = zero;
        scaled.add_scaled(rhs[r], inv);
        rhs[r] = scaled;
        for (size_t o = 0; o < rows; ++o) {
            if (o == r || m[o][c].is_zero()) continue;
            Scalar f = m[o][c];
            for (size_t k = c; k < cols; ++k) m[o][k] -= f * m[r][k];
            rhs[o].add_scaled(rhs[r], -f);
        }
        pivcol.push_back(c);
        ++r;
    }
    for (size_t o = r; o < rows; ++o)
        if (!rhs[o].is_zero()) return std::nullopt;
    std::vector<V> x(cols, zero);
    for (size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = rhs[k];
    return x;
}

}  // namespace qsym
