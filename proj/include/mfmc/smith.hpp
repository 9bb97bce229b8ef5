#pragma once

#include <vector>

#include "exponent_matrix.hpp"
#include "linalg.hpp"

namespace mfmc {

/// Invariant factors d_1 | d_2 | ... of an integer matrix (min(rows, cols)
/// entries, zeros last) and its rank.
struct SmithInvariants {
    std::vector<Int> factors;
    std::size_t rank = 0;

    /// The cokernel Z^rows / (column span) has no torsion.
    bool torsion_free() const {
        for (Int f : factors)
            if (f != 0 && f != 1)
                return false;
        return true;
    }

    friend bool operator==(const SmithInvariants &,
                           const SmithInvariants &) = default;
};

inline SmithInvariants smith_normal_form(linalg::BigMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    const std::size_t diag = std::min(rows, cols);
    using boost::multiprecision::abs;

    for (std::size_t t = 0; t < diag; ++t) {
        while (true) {
            // Smallest non-zero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 &&
                        (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                goto done;
            std::swap(a[t], a[pr]);
            for (auto &row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                BigInt f = a[i][t] / a[t][t];
                if (f != 0)
                    for (std::size_t j = t; j < cols; ++j)
                        a[i][j] -= f * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                BigInt f = a[t][j] / a[t][t];
                if (f != 0)
                    for (std::size_t i = t; i < rows; ++i)
                        a[i][j] -= f * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // Enforce divisibility against the rest of the block.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
    }
done:
    SmithInvariants s;
    for (std::size_t t = 0; t < diag; ++t) {
        BigInt v = abs(a[t][t]);
        s.factors.push_back(narrow(v));
        if (v != 0)
            ++s.rank;
    }
    return s;
}

/// The matrix B whose columns are (v_j, 1).
inline linalg::BigMatrix lifted_matrix(const ExponentMatrix &m) {
    linalg::BigMatrix b(m.n() + 1, BigVector(m.q()));
    for (std::size_t j = 0; j < m.q(); ++j) {
        for (std::size_t i = 0; i < m.n(); ++i)
            b[i][j] = m.entry(i, j);
        b[m.n()][j] = 1;
    }
    return b;
}

inline SmithInvariants smith_invariants(const ExponentMatrix &m) {
    return smith_normal_form(lifted_matrix(m));
}

} // namespace mfmc
