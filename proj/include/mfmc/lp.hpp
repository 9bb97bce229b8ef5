#pragma once

#include <vector>

#include "core.hpp"

namespace mfmc::lp {

struct Solution {
    Rational value;
    RationalVector x;
};

/// max <c, x> subject to rows * x <= rhs, x >= 0, with rhs >= 0 so the
/// origin is feasible. Dense tableau simplex over exact rationals using
/// Bland's rule; throws if the program is unbounded.
inline Solution maximize(const IntVector &c, const std::vector<IntVector> &rows,
                         const IntVector &rhs) {
    const std::size_t m = rows.size(), k = c.size();
    for (Int b : rhs)
        if (b < 0)
            throw InvalidInputError("right-hand side must be non-negative");
    // Columns 0..k-1 structural, k..k+m-1 slack, last column rhs.
    const std::size_t width = k + m + 1;
    std::vector<RationalVector> t(m, RationalVector(width));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            t[i][j] = rows[i][j];
        t[i][k + i] = 1;
        t[i][width - 1] = rhs[i];
    }
    RationalVector reduced(width); // reduced costs, objective in last slot (negated)
    for (std::size_t j = 0; j < k; ++j)
        reduced[j] = c[j];
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = k + i;

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (reduced[j] > 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            throw InvalidInputError("linear program is unbounded");
        const Rational pivot = t[leave][enter];
        for (auto &x : t[leave])
            x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                t[i][j] -= f * t[leave][j];
        }
        const Rational f = reduced[enter];
        for (std::size_t j = 0; j < width; ++j)
            reduced[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    Solution s;
    s.value = -reduced[width - 1];
    s.x.assign(k, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < k)
            s.x[basis[i]] = t[i][width - 1];
    return s;
}

} // namespace mfmc::lp
