#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "exponent_matrix.hpp"
#include "linalg.hpp"

namespace mfmc {

/// A polyhedral cone given by generators (Minkowski form), optionally
/// together with its irreducible list of primitive facet normals (implicit
/// form: the cone is the set of x with <x, f> >= 0 for every normal f).
struct RationalCone {
    std::size_t dim = 0;
    std::vector<IntVector> generators;
    std::optional<std::vector<IntVector>> facets;

    friend bool operator==(const RationalCone &, const RationalCone &) = default;
};

class ZeroConeError : public InvalidInputError {
  public:
    using InvalidInputError::InvalidInputError;
};

/// The cone does not span its ambient space, so its dual has a lineality
/// space and the facet description would not be unique.
class NotFullDimensionalError : public InvalidInputError {
  public:
    using InvalidInputError::InvalidInputError;
};

namespace detail {

inline Int total_degree(const IntVector &v) {
    Int s = 0;
    for (Int x : v)
        s += x < 0 ? -x : x;
    return s;
}

struct Ray {
    BigVector coords;
    boost::dynamic_bitset<> zeros; // constraints (by insertion position) with <a, r> = 0
};

} // namespace detail

/// Generators of the dual cone {y : <y, g> >= 0 for all generators g},
/// computed with the double description method. For a full-dimensional
/// input these are exactly the primitive facet normals of the input cone.
/// Output is canonically ordered.
inline RationalCone dualize(const RationalCone &cone) {
    const std::size_t d = cone.dim;
    if (d == 0)
        throw InvalidInputError("cone of ambient dimension 0");
    std::vector<IntVector> gens;
    for (const auto &g : cone.generators) {
        if (g.size() != d)
            throw InvalidInputError("generator dimension mismatch");
        if (!is_zero(g))
            gens.push_back(g);
    }
    if (gens.empty())
        throw ZeroConeError("cone has no non-zero generators");
    std::stable_sort(gens.begin(), gens.end(),
                     [](const IntVector &a, const IntVector &b) {
                         auto da = detail::total_degree(a),
                              db = detail::total_degree(b);
                         return da != db ? da < db : a < b;
                     });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // Initial simplicial cone from the first d independent constraints.
    std::vector<IntVector> basis;
    std::vector<IntVector> rest;
    for (const auto &g : gens) {
        if (basis.size() < d) {
            basis.push_back(g);
            if (linalg::rank(basis) == basis.size())
                continue;
            basis.pop_back();
        }
        rest.push_back(g);
    }
    if (basis.size() < d)
        throw NotFullDimensionalError(
            "cone spans a space of dimension " + std::to_string(basis.size()) +
            " < " + std::to_string(d) + "; its dual is not pointed");

    const std::size_t total = gens.size();
    std::vector<IntVector> order = basis;
    order.insert(order.end(), rest.begin(), rest.end());

    std::vector<detail::Ray> rays;
    {
        auto [det, adj] = linalg::adjugate(basis);
        for (std::size_t j = 0; j < d; ++j) {
            detail::Ray r;
            r.coords.resize(d);
            for (std::size_t i = 0; i < d; ++i)
                r.coords[i] = det > 0 ? adj[i][j] : BigInt(-adj[i][j]);
            r.coords = make_primitive(std::move(r.coords));
            r.zeros.resize(total);
            for (std::size_t k = 0; k < d; ++k)
                if (k != j)
                    r.zeros.set(k);
            rays.push_back(std::move(r));
        }
    }

    for (std::size_t k = d; k < total; ++k) {
        const BigVector a = widen(order[k]);
        std::vector<std::size_t> pos, neg;
        std::vector<BigInt> value(rays.size());
        std::vector<detail::Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(a, rays[r].coords);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (value[r] == 0)
                    rays[r].zeros.set(k);
            continue;
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] < 0)
                continue;
            next.push_back(rays[r]);
            if (value[r] == 0)
                next.back().zeros.set(k);
        }
        for (auto p : pos)
            for (auto q : neg) {
                auto common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < d)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                detail::Ray fresh;
                fresh.coords.resize(d);
                for (std::size_t i = 0; i < d; ++i)
                    fresh.coords[i] = value[p] * rays[q].coords[i] -
                                      value[q] * rays[p].coords[i];
                fresh.coords = make_primitive(std::move(fresh.coords));
                fresh.zeros = common;
                fresh.zeros.set(k);
                next.push_back(std::move(fresh));
            }
        rays = std::move(next);
    }

    RationalCone dual;
    dual.dim = d;
    for (const auto &r : rays)
        dual.generators.push_back(narrow(r.coords));
    sort_canonical(dual.generators);
    return dual;
}

/// Returns a copy of `cone` with its facet normals filled in.
inline RationalCone with_facets(RationalCone cone) {
    cone.facets = dualize(cone).generators;
    return cone;
}

inline const std::vector<IntVector> &require_facets(const RationalCone &c) {
    if (!c.facets)
        throw InvalidInputError("cone facets have not been computed");
    return *c.facets;
}

inline bool cone_member(const IntVector &p, const RationalCone &c) {
    for (const auto &f : require_facets(c))
        if (dot(p, f) < 0)
            return false;
    return true;
}

inline bool cone_member(const RationalVector &p, const RationalCone &c) {
    for (const auto &f : require_facets(c))
        if (dot(p, f) < 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Rees cone

/// The cone in R^{n+1} generated by e_1..e_n and the lifted columns
/// (v_j, 1). `coordinate_indices` holds the 0-based indices i whose unit
/// vector is expected to be a facet: rows of A with a zero entry, plus the
/// last coordinate n.
struct ReesCone {
    ExponentMatrix base;
    RationalCone cone;
    std::vector<std::size_t> coordinate_indices;
};

inline ReesCone rees_cone(const ExponentMatrix &m) {
    const std::size_t n = m.n();
    ReesCone rc;
    rc.base = m;
    rc.cone.dim = n + 1;
    for (std::size_t i = 0; i < n; ++i)
        rc.cone.generators.push_back(unit_vector(n + 1, i));
    for (const auto &v : m.columns()) {
        IntVector lifted = v;
        lifted.push_back(1);
        rc.cone.generators.push_back(std::move(lifted));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &v : m.columns())
            if (v[i] == 0) {
                rc.coordinate_indices.push_back(i);
                break;
            }
    rc.coordinate_indices.push_back(n);
    return rc;
}

} // namespace mfmc
