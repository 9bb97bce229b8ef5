#pragma once

#include <set>
#include <vector>

#include <mfmc/mfmc.hpp>

namespace fixtures {

using mfmc::IntVector;

/// I = (x1x5, x2x4, x3x4x5, x1x2x3), one generator per row.
inline std::vector<IntVector> example_rows() {
    return {{1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}, {1, 1, 1, 0, 0}};
}

inline mfmc::Clutter example() { return mfmc::validate(example_rows()); }

/// Published integral closure generators of the example's Rees algebra.
inline std::set<IntVector> example_hilbert_basis() {
    return {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
            {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 1},
            {0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 0, 1}};
}

/// Published irreducible representation of the example's Rees cone.
inline std::set<IntVector> example_hyperplanes() {
    return {{0, 0, 1, 1, 1, -1}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 1},  {0, 0, 1, 0, 0, 0}, {1, 0, 0, 1, 0, -1},
            {0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 1, -1},
            {1, 1, 1, 0, 0, -1}};
}

inline const char *example_input() { return "4\n5\n1 0 0 0 1\n0 1 0 1 0\n0 0 1 1 1\n1 1 1 0 0\n3\n"; }

inline mfmc::Clutter triangle() {
    return mfmc::validate({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
}

inline mfmc::Clutter single_edge() { return mfmc::validate({{1}}); }

inline mfmc::ExponentMatrix matrix(const std::vector<IntVector> &rows) {
    return mfmc::ExponentMatrix::from_rows(rows);
}

template <typename T> std::set<T> as_set(const std::vector<T> &v) {
    return {v.begin(), v.end()};
}

inline mfmc::RationalVector rv(std::initializer_list<mfmc::Rational> xs) {
    return mfmc::RationalVector(xs);
}

} // namespace fixtures
