#pragma once

#include <vector>

#include "clutter.hpp"
#include "cone.hpp"

namespace mfmc {

/// Minimal monomial generators of a monomial ideal in n variables.
struct MonomialIdealGens {
    std::size_t n = 0;
    std::vector<IntVector> gens; // antichain, canonical order

    friend bool operator==(const MonomialIdealGens &,
                           const MonomialIdealGens &) = default;
};

class NotSquareFreeError : public InvalidInputError {
  public:
    using InvalidInputError::InvalidInputError;
};

/// Keeps the componentwise-minimal vectors, in canonical order.
inline std::vector<IntVector> minimalize(std::vector<IntVector> v) {
    sort_canonical(v);
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < v.size() && !dominated; ++j)
            dominated = j != i && leq(v[j], v[i]);
        if (!dominated)
            out.push_back(v[i]);
    }
    return out;
}

inline bool membership(const IntVector &a, const MonomialIdealGens &g) {
    for (const auto &x : g.gens)
        if (leq(x, a))
            return true;
    return false;
}

inline bool ideal_equal(const MonomialIdealGens &a, const MonomialIdealGens &b) {
    return a.n == b.n && a.gens == b.gens;
}

/// I^i: all sums of i columns, minimalized.
inline MonomialIdealGens ordinary_power(const ExponentMatrix &m, std::size_t i,
                                        const Limits &limits = {}) {
    if (i == 0)
        throw InvalidInputError("power must be positive");
    const std::size_t q = m.q(), n = m.n();
    if (binomial_capped(q + i - 1, i, limits.candidates) > limits.candidates)
        throw SizeLimitError("ordinary-power", "C(q+i-1, i) exceeds cap");
    std::vector<IntVector> sums;
    std::vector<std::size_t> pick(i, 0);
    while (true) {
        IntVector s(n, 0);
        for (auto j : pick)
            for (std::size_t k = 0; k < n; ++k)
                s[k] += m.column(j)[k];
        sums.push_back(std::move(s));
        // next non-decreasing sequence
        std::size_t k = i;
        while (k > 0 && pick[k - 1] == q - 1)
            --k;
        if (k == 0)
            break;
        ++pick[k - 1];
        for (std::size_t j = k; j < i; ++j)
            pick[j] = pick[k - 1];
    }
    return {n, minimalize(std::move(sums))};
}

namespace detail {

/// Minimal elements of an up-closed subset S of the box {0..bound}^n:
/// a is minimal iff a ∈ S and a - e_j ∉ S for every j with a_j > 0.
template <typename Pred>
std::vector<IntVector> minimal_in_box(std::size_t n, Int bound, Pred in_set,
                                      const char *stage,
                                      const Limits &limits) {
    if (power_capped(static_cast<std::uint64_t>(bound) + 1, n,
                     limits.candidates) > limits.candidates)
        throw SizeLimitError(stage, "candidate box exceeds cap");
    std::vector<IntVector> out;
    IntVector a(n, 0);
    while (true) {
        if (in_set(a)) {
            bool minimal = true;
            for (std::size_t j = 0; j < n && minimal; ++j) {
                if (a[j] == 0)
                    continue;
                --a[j];
                minimal = !in_set(a);
                ++a[j];
            }
            if (minimal)
                out.push_back(a);
        }
        std::size_t k = 0;
        while (k < n && a[k] == bound)
            a[k++] = 0;
        if (k == n)
            break;
        ++a[k];
    }
    sort_canonical(out);
    return out;
}

} // namespace detail

/// I^(i): monomials whose degree over every minimal vertex cover is >= i.
inline MonomialIdealGens symbolic_power(const Clutter &c, std::size_t i,
                                        const Limits &limits = {}) {
    if (i == 0)
        throw InvalidInputError("power must be positive");
    const auto covers = minimal_vertex_covers(c, limits);
    const Int level = static_cast<Int>(i);
    auto in_set = [&](const IntVector &a) {
        for (const auto &cover : covers) {
            Int s = 0;
            for (auto v : cover)
                s += a[v];
            if (s < level)
                return false;
        }
        return true;
    };
    return {c.vertex_count(),
            detail::minimal_in_box(c.vertex_count(), level, in_set,
                                   "symbolic-power", limits)};
}

/// Guards the square-free precondition for callers holding a bare matrix.
inline MonomialIdealGens symbolic_power(const ExponentMatrix &m, std::size_t i,
                                        const Limits &limits = {}) {
    if (!m.is_zero_one())
        throw NotSquareFreeError(
            "symbolic powers are defined here for square-free ideals only");
    std::vector<IntVector> rows = m.columns();
    return symbolic_power(validate(rows), i, limits);
}

/// Integral closure of I^i: monomials x^a with (a, i) in the Rees cone.
/// `rees` must have its facets computed.
inline MonomialIdealGens closure_power(const RationalCone &rees, std::size_t i,
                                       Int max_entry,
                                       const Limits &limits = {}) {
    if (i == 0)
        throw InvalidInputError("power must be positive");
    const std::size_t n = rees.dim - 1;
    const Int level = static_cast<Int>(i);
    IntVector point(n + 1, 0);
    point[n] = level;
    auto in_set = [&](const IntVector &a) {
        std::copy(a.begin(), a.end(), point.begin());
        return cone_member(point, rees);
    };
    return {n, detail::minimal_in_box(n, level * max_entry, in_set,
                                      "closure-power", limits)};
}

inline MonomialIdealGens closure_power(const ExponentMatrix &m, std::size_t i,
                                       const Limits &limits = {}) {
    return closure_power(with_facets(rees_cone(m).cone), i, m.max_entry(),
                         limits);
}

inline MonomialIdealGens ideal_of(const ExponentMatrix &m) {
    return {m.n(), minimalize(m.columns())};
}

} // namespace mfmc
