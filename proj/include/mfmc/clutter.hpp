#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exponent_matrix.hpp"

namespace mfmc {

using VertexSet = std::vector<std::size_t>; // sorted, 0-based

/// A clutter: a 0/1 exponent matrix whose edge supports form an antichain.
/// Edges are stored in canonical order (ascending lexicographic as index
/// lists, which is the canonical column order of the matrix).
class Clutter {
  public:
    const ExponentMatrix &matrix() const noexcept { return matrix_; }
    const std::vector<std::string> &vertex_labels() const noexcept {
        return labels_;
    }
    const std::vector<VertexSet> &edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return matrix_.n(); }
    std::size_t edge_count() const noexcept { return matrix_.q(); }

    friend bool operator==(const Clutter &, const Clutter &) = default;

    friend Clutter validate(const std::vector<IntVector> &,
                            std::vector<std::string>);

  private:
    ExponentMatrix matrix_;
    std::vector<std::string> labels_;
    std::vector<VertexSet> edges_;
};

inline std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("x" + std::to_string(i + 1));
    return labels;
}

/// Validates a generator-per-row grid as a clutter. Labels default to
/// x1..xn.
inline Clutter validate(const std::vector<IntVector> &rows,
                        std::vector<std::string> labels = {}) {
    if (rows.empty() || rows.front().empty())
        throw ValidationError(ValidationIssue::Empty, 0, 0,
                              "need at least one edge and one vertex");
    const std::size_t n = rows.front().size();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[j].size() != n)
            throw ValidationError(ValidationIssue::Ragged, j, j,
                                  "row " + std::to_string(j + 1));
        for (Int x : rows[j]) {
            if (x < 0)
                throw ValidationError(ValidationIssue::NegativeEntry, j, j,
                                      "row " + std::to_string(j + 1));
            if (x > 1)
                throw ValidationError(ValidationIssue::NotZeroOne, j, j,
                                      "row " + std::to_string(j + 1) +
                                          " has an entry > 1");
        }
        if (is_zero(rows[j]))
            throw ValidationError(ValidationIssue::EmptyEdge, j, j,
                                  "row " + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (i != j && leq(rows[i], rows[j]))
                throw ValidationError(ValidationIssue::NotAntichain, i, j,
                                      "edge " + std::to_string(i + 1) +
                                          " is contained in edge " +
                                          std::to_string(j + 1));
    if (labels.empty())
        labels = default_labels(n);
    if (labels.size() != n)
        throw InvalidInputError("label count does not match vertex count");

    Clutter c;
    c.matrix_ = ExponentMatrix::from_rows(rows);
    c.labels_ = std::move(labels);
    for (const auto &col : c.matrix_.columns()) {
        VertexSet e;
        for (std::size_t i = 0; i < n; ++i)
            if (col[i])
                e.push_back(i);
        c.edges_.push_back(std::move(e));
    }
    return c;
}

/// Builds a clutter from edge supports over `labels.size()` vertices.
inline Clutter clutter_from_edges(const std::vector<VertexSet> &edges,
                                  std::vector<std::string> labels) {
    std::vector<IntVector> rows;
    for (const auto &e : edges) {
        IntVector r(labels.size(), 0);
        for (auto v : e)
            r.at(v) = 1;
        rows.push_back(std::move(r));
    }
    return validate(rows, std::move(labels));
}

inline Clutter clutter_from_edges(const std::vector<VertexSet> &edges,
                                  std::size_t n) {
    return clutter_from_edges(edges, default_labels(n));
}

// ---------------------------------------------------------------------------
// Minors

struct MinorSpec {
    VertexSet zeros; // variables set to 0
    VertexSet ones;  // variables set to 1

    friend bool operator==(const MinorSpec &, const MinorSpec &) = default;
};

struct NonMinor {
    enum class Kind { UnitIdeal, ZeroIdeal };
    Kind kind;
};

class OverlappingSpecError : public InvalidInputError {
  public:
    using InvalidInputError::InvalidInputError;
};

using MinorResult = std::variant<Clutter, NonMinor>;

inline MinorResult minor(const Clutter &c, const MinorSpec &spec) {
    const std::size_t n = c.vertex_count();
    std::vector<int> role(n, 0); // 0 keep, 1 zero, 2 one
    for (auto v : spec.zeros) {
        if (v >= n)
            throw InvalidInputError("minor spec vertex out of range");
        role[v] = 1;
    }
    for (auto v : spec.ones) {
        if (v >= n)
            throw InvalidInputError("minor spec vertex out of range");
        if (role[v] == 1)
            throw OverlappingSpecError("vertex " + c.vertex_labels()[v] +
                                       " is both set to 0 and to 1");
        role[v] = 2;
    }

    std::vector<std::size_t> new_index(n, 0);
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v)
        if (role[v] == 0) {
            new_index[v] = labels.size();
            labels.push_back(c.vertex_labels()[v]);
        }

    std::vector<VertexSet> edges;
    for (const auto &e : c.edges()) {
        bool killed = false;
        VertexSet reduced;
        for (auto v : e) {
            if (role[v] == 1)
                killed = true;
            else if (role[v] == 0)
                reduced.push_back(new_index[v]);
        }
        if (killed)
            continue;
        if (reduced.empty())
            return NonMinor{NonMinor::Kind::UnitIdeal};
        edges.push_back(std::move(reduced));
    }
    if (edges.empty())
        return NonMinor{NonMinor::Kind::ZeroIdeal};

    canonicalize(edges);
    std::vector<VertexSet> minimal;
    for (const auto &e : edges) {
        bool superset = false;
        for (const auto &f : edges)
            if (&f != &e && f.size() < e.size() &&
                std::includes(e.begin(), e.end(), f.begin(), f.end())) {
                superset = true;
                break;
            }
        if (!superset)
            minimal.push_back(e);
    }
    return clutter_from_edges(minimal, std::move(labels));
}

/// Every minor of `c` (including `c` itself), filtered of unit/zero ideals
/// and of identical labeled duplicates. The first spec producing a given
/// minor is kept; enumeration starts at (∅, ∅).
inline std::vector<std::pair<MinorSpec, Clutter>>
all_minors(const Clutter &c, const Limits &limits = {}) {
    const std::size_t n = c.vertex_count();
    const std::uint64_t count = power_capped(3, n, limits.minor_specs);
    if (count > limits.minor_specs)
        throw SizeLimitError("minors", "3^" + std::to_string(n) +
                                           " minor specs exceed cap " +
                                           std::to_string(limits.minor_specs));
    std::vector<std::pair<MinorSpec, Clutter>> out;
    std::set<std::pair<std::vector<std::string>, std::vector<VertexSet>>> seen;
    for (std::uint64_t code = 0; code < count; ++code) {
        MinorSpec spec;
        std::uint64_t x = code;
        for (std::size_t v = 0; v < n; ++v, x /= 3) {
            if (x % 3 == 1)
                spec.zeros.push_back(v);
            else if (x % 3 == 2)
                spec.ones.push_back(v);
        }
        auto result = minor(c, spec);
        if (auto *m = std::get_if<Clutter>(&result)) {
            if (seen.emplace(m->vertex_labels(), m->edges()).second)
                out.emplace_back(std::move(spec), std::move(*m));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Covers and matchings

using Mask = std::uint64_t;

inline Mask to_mask(const VertexSet &s) {
    Mask m = 0;
    for (auto v : s)
        m |= Mask{1} << v;
    return m;
}

inline VertexSet from_mask(Mask m) {
    VertexSet s;
    for (std::size_t v = 0; m; ++v, m >>= 1)
        if (m & 1)
            s.push_back(v);
    return s;
}

/// Minimal vertex covers (minimal transversals), computed by Berge's
/// edge-by-edge transversal product. Canonical (lexicographic) order.
inline std::vector<VertexSet> minimal_vertex_covers(const Clutter &c,
                                                    const Limits &limits = {}) {
    if (c.vertex_count() > 64 || c.vertex_count() > limits.cover_vertices)
        throw SizeLimitError("vertex-covers",
                             std::to_string(c.vertex_count()) +
                                 " vertices exceed cap");
    std::vector<Mask> covers{0};
    for (const auto &e : c.edges()) {
        const Mask em = to_mask(e);
        std::vector<Mask> next;
        for (Mask t : covers) {
            if (t & em)
                next.push_back(t);
            else
                for (auto v : e)
                    next.push_back(t | (Mask{1} << v));
        }
        canonicalize(next);
        std::vector<Mask> minimal;
        for (Mask t : next) {
            bool dominated = false;
            for (Mask u : next)
                if (u != t && (u & t) == u) {
                    dominated = true;
                    break;
                }
            if (!dominated)
                minimal.push_back(t);
        }
        covers = std::move(minimal);
    }
    std::vector<VertexSet> out;
    for (Mask t : covers)
        out.push_back(from_mask(t));
    std::sort(out.begin(), out.end());
    return out;
}

/// Covering number: size of a smallest vertex cover.
inline std::size_t alpha0(const Clutter &c, const Limits &limits = {}) {
    std::size_t best = c.vertex_count();
    for (const auto &cover : minimal_vertex_covers(c, limits))
        best = std::min(best, cover.size());
    return best;
}

namespace detail {
inline void max_packing(const std::vector<Mask> &edges, std::size_t next,
                        Mask used, std::size_t taken, std::size_t &best) {
    if (taken + (edges.size() - next) <= best) {
        best = std::max(best, taken);
        return;
    }
    if (next == edges.size()) {
        best = std::max(best, taken);
        return;
    }
    if (!(edges[next] & used))
        max_packing(edges, next + 1, used | edges[next], taken + 1, best);
    max_packing(edges, next + 1, used, taken, best);
}
} // namespace detail

/// Matching number: maximum number of pairwise disjoint edges, by exhaustive
/// include/exclude search over the edges.
inline std::size_t beta1(const Clutter &c, const Limits &limits = {}) {
    if (c.edge_count() > limits.matching_edges || c.vertex_count() > 64)
        throw SizeLimitError("matching", std::to_string(c.edge_count()) +
                                             " edges exceed cap");
    std::vector<Mask> edges;
    for (const auto &e : c.edges())
        edges.push_back(to_mask(e));
    std::size_t best = 0;
    detail::max_packing(edges, 0, 0, 0, best);
    return best;
}

inline bool koenig(const Clutter &c, const Limits &limits = {}) {
    return alpha0(c, limits) == beta1(c, limits);
}

struct PackingResult {
    bool holds = true;
    std::optional<MinorSpec> failing_minor;
};

/// König property for every minor; reports the first failing minor spec.
inline PackingResult packing_property(const Clutter &c,
                                      const Limits &limits = {}) {
    for (const auto &[spec, m] : all_minors(c, limits))
        if (!koenig(m, limits))
            return {false, spec};
    return {};
}

} // namespace mfmc
