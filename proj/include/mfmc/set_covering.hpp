#pragma once

#include <optional>
#include <vector>

#include "cone.hpp"

namespace mfmc {

class ClassificationError : public InternalError {
  public:
    using InternalError::InternalError;
};

/// The irreducible representation of a Rees cone, split into unit-vector
/// facets and facets (alpha', -b) with b >= 1 that encode the vertices
/// alpha'/b of the set covering polyhedron.
struct FacetClassification {
    ReesCone rees;                                // cone.facets is filled in
    std::vector<std::size_t> coordinate_facets;   // 0-based i for e_i
    std::vector<IntVector> vertex_facets;         // canonical order
};

inline FacetClassification support_hyperplanes(const ExponentMatrix &m) {
    FacetClassification fc;
    fc.rees = rees_cone(m);
    fc.rees.cone = with_facets(fc.rees.cone);
    const std::size_t d = m.n() + 1;
    for (const auto &f : *fc.rees.cone.facets) {
        if (f[d - 1] < 0) {
            fc.vertex_facets.push_back(f);
        } else if (is_unit_vector(f)) {
            fc.coordinate_facets.push_back(static_cast<std::size_t>(
                std::find(f.begin(), f.end(), 1) - f.begin()));
        } else {
            throw ClassificationError("facet normal (" + join(f) +
                                      ") is neither a unit vector nor has a "
                                      "negative last coordinate");
        }
    }
    std::sort(fc.coordinate_facets.begin(), fc.coordinate_facets.end());
    if (fc.coordinate_facets != fc.rees.coordinate_indices)
        throw ClassificationError(
            "unit-vector facets do not match the zero pattern of A");
    sort_canonical(fc.vertex_facets);
    return fc;
}

/// Vertex set of Q(A) = {x >= 0 : xA >= 1}. Its recession cone is R_+^n.
struct QAPolyhedron {
    ExponentMatrix matrix;
    std::vector<RationalVector> vertices; // lexicographically decreasing
};

inline void sort_vertices(std::vector<RationalVector> &v) {
    std::sort(v.begin(), v.end(), std::greater<>{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool in_qa(const RationalVector &x, const ExponentMatrix &m) {
    for (const auto &c : x)
        if (c < 0)
            return false;
    for (const auto &v : m.columns())
        if (dot(x, v) < 1)
            return false;
    return true;
}

/// Vertices as basic feasible solutions: every n-subset of the n+q
/// constraints x_i >= 0, <x, v_j> >= 1 is made tight and solved exactly.
inline QAPolyhedron qa_vertices_direct(const ExponentMatrix &m,
                                       const Limits &limits = {}) {
    const std::size_t n = m.n(), q = m.q();
    if (binomial_capped(n + q, n, limits.basic_solutions) >
        limits.basic_solutions)
        throw SizeLimitError("qa-vertices", "C(n+q, n) exceeds cap");

    std::vector<IntVector> rows;
    IntVector rhs;
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(unit_vector(n, i));
        rhs.push_back(0);
    }
    for (const auto &v : m.columns()) {
        rows.push_back(v);
        rhs.push_back(1);
    }

    QAPolyhedron qa{m, {}};
    std::vector<std::size_t> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    const std::size_t total = n + q;
    std::vector<IntVector> sys(n);
    IntVector b(n);
    while (true) {
        for (std::size_t k = 0; k < n; ++k) {
            sys[k] = rows[pick[k]];
            b[k] = rhs[pick[k]];
        }
        if (auto x = linalg::solve(sys, b); x && in_qa(*x, m))
            qa.vertices.push_back(std::move(*x));
        // next combination
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == total - n + k - 1)
            --k;
        if (k == 0)
            break;
        ++pick[k - 1];
        for (std::size_t j = k; j < n; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    sort_vertices(qa.vertices);
    return qa;
}

inline RationalVector vertex_of_facet(const IntVector &f) {
    const std::size_t n = f.size() - 1;
    const Int b = -f[n];
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = Rational(f[i], b);
    return x;
}

/// Vertices read off the Rees cone: each facet (alpha', -b) gives alpha'/b.
inline QAPolyhedron qa_vertices_via_rees(const FacetClassification &fc) {
    QAPolyhedron qa{fc.rees.base, {}};
    for (const auto &f : fc.vertex_facets)
        qa.vertices.push_back(vertex_of_facet(f));
    sort_vertices(qa.vertices);
    return qa;
}

inline QAPolyhedron qa_vertices_via_rees(const ExponentMatrix &m) {
    return qa_vertices_via_rees(support_hyperplanes(m));
}

struct IntegralityResult {
    bool integral = true;
    std::optional<RationalVector> fractional_vertex;
};

inline IntegralityResult is_integral_qa(const QAPolyhedron &qa) {
    for (const auto &v : qa.vertices)
        if (!is_integral(v))
            return {false, v};
    return {};
}

inline IntegralityResult is_integral_qa(const ExponentMatrix &m) {
    return is_integral_qa(qa_vertices_via_rees(m));
}

} // namespace mfmc
