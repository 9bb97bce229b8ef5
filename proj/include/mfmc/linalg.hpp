#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core.hpp"

// Small exact linear algebra over the integers and rationals. Matrices are
// row-major vectors of rows.
namespace mfmc::linalg {

using BigMatrix = std::vector<BigVector>;

inline BigMatrix to_big(const std::vector<IntVector> &rows) {
    BigMatrix m;
    m.reserve(rows.size());
    for (const auto &r : rows)
        m.push_back(widen(r));
    return m;
}

/// Fraction-free (Bareiss) row echelon form, in place. Returns the rank.
/// The last non-zero pivot equals the determinant (up to sign) when the
/// matrix is square and non-singular.
inline std::size_t bareiss(BigMatrix &m, BigInt *det = nullptr) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    BigInt prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    if (det) {
        if (rows == cols && r == rows)
            *det = sign * prev;
        else
            *det = 0;
    }
    return r;
}

inline std::size_t rank(const std::vector<IntVector> &rows) {
    if (rows.empty())
        return 0;
    auto m = to_big(rows);
    return bareiss(m);
}

inline BigInt determinant(BigMatrix m) {
    if (m.empty())
        return 1;
    BigInt det;
    bareiss(m, &det);
    return det;
}

/// Solves the square system rows * x = rhs. Returns nullopt if singular.
inline std::optional<RationalVector> solve(const std::vector<IntVector> &rows,
                                           const IntVector &rhs) {
    const std::size_t n = rows.size();
    BigMatrix m = to_big(rows);
    for (std::size_t i = 0; i < n; ++i)
        m[i].push_back(rhs[i]);
    // Fraction-free forward elimination on the augmented matrix.
    BigInt prev = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j <= n; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = Rational(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= Rational(m[i][j]) * x[j];
        x[i] = acc / Rational(m[i][i]);
    }
    return x;
}

/// For d-1 vectors in dimension d, the vector of signed maximal minors: it
/// is orthogonal to every input row and non-zero iff the rows are linearly
/// independent.
inline BigVector cofactor_normal(const std::vector<IntVector> &rows) {
    const std::size_t d = rows.empty() ? 0 : rows[0].size();
    BigVector normal(d);
    for (std::size_t skip = 0; skip < d; ++skip) {
        BigMatrix minor;
        for (const auto &r : rows) {
            BigVector row;
            for (std::size_t j = 0; j < d; ++j)
                if (j != skip)
                    row.push_back(r[j]);
            minor.push_back(std::move(row));
        }
        BigInt det = determinant(std::move(minor));
        normal[skip] = ((skip + d + 1) % 2 == 0) ? det : BigInt(-det);
    }
    return normal;
}

/// Integer inverse data of a non-singular square matrix M: returns
/// (det, adj) with M * adj = adj * M = det * I.
inline std::pair<BigInt, BigMatrix> adjugate(const std::vector<IntVector> &rows) {
    const std::size_t n = rows.size();
    std::vector<RationalVector> a(n, RationalVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = rows[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw InternalError("adjugate of a singular matrix");
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto &x : a[c])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    BigInt det = determinant(to_big(rows));
    BigMatrix adj(n, BigVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = a[i][n + j] * det;
            if (boost::multiprecision::denominator(v) != 1)
                throw InternalError("adjugate entry is not integral");
            adj[i][j] = boost::multiprecision::numerator(v);
        }
    return {det, adj};
}

} // namespace mfmc::linalg
