#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cone.hpp"

namespace mfmc {

/// Hilbert basis of the lattice points of a pointed rational cone.
struct HilbertBasis {
    std::vector<IntVector> elements; // canonical order

    friend bool operator==(const HilbertBasis &, const HilbertBasis &) = default;
};

using Simplex = std::vector<std::size_t>; // sorted indices into the generators

/// Placing triangulation: the first full-rank subset (in insertion order)
/// forms the initial simplex; every further generator is joined to each
/// boundary facet it sees.
inline std::vector<Simplex>
placing_triangulation(const std::vector<IntVector> &gens) {
    const std::size_t d = gens.empty() ? 0 : gens[0].size();
    Simplex first;
    std::vector<std::size_t> later;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (first.size() < d) {
            std::vector<IntVector> probe;
            for (auto j : first)
                probe.push_back(gens[j]);
            probe.push_back(gens[i]);
            if (linalg::rank(probe) == probe.size()) {
                first.push_back(i);
                continue;
            }
        }
        later.push_back(i);
    }
    if (first.size() < d)
        throw NotFullDimensionalError("generators do not span the space");

    std::vector<Simplex> simplices{first};
    for (auto g : later) {
        std::map<Simplex, std::pair<std::size_t, std::size_t>> faces; // face -> (count, opposite vertex)
        for (const auto &s : simplices)
            for (std::size_t k = 0; k < d; ++k) {
                Simplex f;
                for (std::size_t j = 0; j < d; ++j)
                    if (j != k)
                        f.push_back(s[j]);
                auto &entry = faces[f];
                ++entry.first;
                entry.second = s[k];
            }
        std::vector<Simplex> added;
        for (const auto &[f, entry] : faces) {
            if (entry.first != 1)
                continue;
            std::vector<IntVector> rows;
            for (auto j : f)
                rows.push_back(gens[j]);
            BigVector normal = linalg::cofactor_normal(rows);
            const BigVector opposite = widen(gens[entry.second]);
            const BigVector point = widen(gens[g]);
            BigInt side = dot(normal, opposite);
            BigInt seen = dot(normal, point);
            if ((side > 0 && seen < 0) || (side < 0 && seen > 0)) {
                Simplex s = f;
                s.push_back(g);
                std::sort(s.begin(), s.end());
                added.push_back(std::move(s));
            }
        }
        simplices.insert(simplices.end(), added.begin(), added.end());
    }
    return simplices;
}

/// Non-zero lattice points of the half-open fundamental parallelepiped
/// {sum lambda_k g_k : 0 <= lambda_k < 1} of a simplicial cone.
inline std::vector<IntVector>
parallelepiped_points(const std::vector<IntVector> &simplex_gens,
                      const Limits &limits = {}) {
    const std::size_t d = simplex_gens.size();
    // Columns of `cols` are the generators.
    std::vector<IntVector> cols(d, IntVector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            cols[i][k] = simplex_gens[k][i];
    auto [det, adj] = linalg::adjugate(cols);
    const BigInt vol = det < 0 ? BigInt(-det) : det;
    if (vol > limits.parallelepiped)
        throw SizeLimitError("hilbert-basis",
                             "simplicial cone volume exceeds cap " +
                                 std::to_string(limits.parallelepiped));
    const Int modulus = narrow(vol);
    if (modulus == 1)
        return {};

    // lambda(e_i) * |det| reduced mod |det|, one per unit vector.
    std::vector<IntVector> steps;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector s(d);
        for (std::size_t k = 0; k < d; ++k) {
            BigInt v = det > 0 ? adj[k][i] : BigInt(-adj[k][i]);
            v %= vol;
            if (v < 0)
                v += vol;
            s[k] = narrow(v);
        }
        steps.push_back(std::move(s));
    }
    std::set<IntVector> seen{IntVector(d, 0)};
    std::vector<IntVector> frontier{IntVector(d, 0)};
    while (!frontier.empty()) {
        std::vector<IntVector> next;
        for (const auto &c : frontier)
            for (const auto &s : steps) {
                IntVector e(d);
                for (std::size_t k = 0; k < d; ++k)
                    e[k] = (c[k] + s[k]) % modulus;
                if (seen.insert(e).second)
                    next.push_back(std::move(e));
            }
        frontier = std::move(next);
    }
    std::vector<IntVector> points;
    for (const auto &c : seen) {
        if (is_zero(c))
            continue;
        IntVector p(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            __int128 acc = 0;
            for (std::size_t k = 0; k < d; ++k)
                acc += static_cast<__int128>(simplex_gens[k][i]) * c[k];
            if (acc % modulus != 0)
                throw InternalError("parallelepiped point is not integral");
            p[i] = static_cast<Int>(acc / modulus);
        }
        points.push_back(std::move(p));
    }
    return points;
}

/// Hilbert basis of cone ∩ Z^d for a pointed, full-dimensional cone whose
/// facets are known. Candidates are the generators plus the parallelepiped
/// points of a placing triangulation; an element x is dropped when x - h
/// lies in the cone for some other candidate h.
inline HilbertBasis hilbert_basis(const RationalCone &cone,
                                  const Limits &limits = {}) {
    const auto &facets = require_facets(cone);
    std::vector<IntVector> gens;
    for (const auto &g : cone.generators)
        if (!is_zero(g))
            gens.push_back(g);
    std::vector<IntVector> candidates = gens;
    for (const auto &s : placing_triangulation(gens)) {
        std::vector<IntVector> sg;
        for (auto k : s)
            sg.push_back(gens[k]);
        auto pts = parallelepiped_points(sg, limits);
        candidates.insert(candidates.end(), pts.begin(), pts.end());
    }
    sort_canonical(candidates);

    auto in_cone = [&](const IntVector &p) {
        for (const auto &f : facets)
            if (dot(p, f) < 0)
                return false;
        return true;
    };
    HilbertBasis hb;
    IntVector diff;
    for (const auto &x : candidates) {
        bool reducible = false;
        for (const auto &h : candidates) {
            if (&h == &x)
                continue;
            diff.resize(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                diff[i] = x[i] - h[i];
            if (in_cone(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            hb.elements.push_back(x);
    }
    return hb;
}

/// Hilbert basis of the Rees cone of `m`: the generators of the integral
/// closure of the Rees algebra.
inline HilbertBasis hilbert_basis(const ExponentMatrix &m,
                                  const Limits &limits = {}) {
    return hilbert_basis(with_facets(rees_cone(m).cone), limits);
}

namespace detail {
inline bool fits_columns(const std::vector<IntVector> &cols, std::size_t from,
                         IntVector &slack, Int remaining) {
    if (remaining == 0)
        return true;
    for (std::size_t j = from; j < cols.size(); ++j) {
        if (!leq(cols[j], slack))
            continue;
        for (std::size_t i = 0; i < slack.size(); ++i)
            slack[i] -= cols[j][i];
        bool ok = fits_columns(cols, j, slack, remaining - 1);
        for (std::size_t i = 0; i < slack.size(); ++i)
            slack[i] += cols[j][i];
        if (ok)
            return true;
    }
    return false;
}
} // namespace detail

/// Whether (a, b) lies in the semigroup generated by e_1..e_n and the
/// lifted columns: some b columns (with repetition) sum to at most a.
inline bool semigroup_member(const IntVector &p, const ExponentMatrix &m) {
    if (p.size() != m.n() + 1)
        throw InvalidInputError("point dimension must be n + 1");
    const Int b = p.back();
    IntVector slack(p.begin(), p.end() - 1);
    if (b < 0)
        return false;
    for (Int x : slack)
        if (x < 0)
            return false;
    return detail::fits_columns(m.columns(), 0, slack, b);
}

struct NormalityResult {
    bool normal = true;
    std::optional<IntVector> witness; // lexicographically least failing element
};

inline NormalityResult is_normal(const ExponentMatrix &m,
                                 const HilbertBasis &hb) {
    std::optional<IntVector> witness;
    for (const auto &h : hb.elements)
        if (!semigroup_member(h, m) && (!witness || h < *witness))
            witness = h;
    if (witness)
        return {false, witness};
    return {};
}

inline NormalityResult is_normal(const ExponentMatrix &m,
                                 const Limits &limits = {}) {
    return is_normal(m, hilbert_basis(m, limits));
}

} // namespace mfmc
