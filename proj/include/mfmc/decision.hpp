#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clutter.hpp"
#include "hilbert.hpp"
#include "ideal.hpp"
#include "lp.hpp"
#include "set_covering.hpp"
#include "smith.hpp"

namespace mfmc {

/// A monomial in I^(i) \ I^i (or in I^(i) \ closure(I^i)).
struct PowerWitness {
    std::size_t power = 0;
    IntVector monomial;
    friend bool operator==(const PowerWitness &, const PowerWitness &) = default;
};

struct KoenigGap {
    std::size_t alpha0 = 0;
    std::size_t beta1 = 0;
    friend bool operator==(const KoenigGap &, const KoenigGap &) = default;
};

using Evidence = std::variant<RationalVector, // fractional vertex of Q(A)
                              IntVector,      // Hilbert basis element / Smith factors
                              MinorSpec,      // minor violating König
                              PowerWitness,   // symbolic vs ordinary power gap
                              KoenigGap>;

struct Verdict {
    bool mfmc = false;
    bool normal = false;
    bool integral = false;
    bool koenig = false;
    bool packing = false;
    bool torsion_free = false;
    bool ntf = false; // I^i == I^(i) for i <= i_max_checked
    std::size_t i_max_checked = 0;
    std::map<std::string, Evidence> witnesses; // keyed by failed predicate

    friend bool operator==(const Verdict &, const Verdict &) = default;
};

struct DecisionOptions {
    std::size_t i_max = 3;
    Limits limits;
};

class InconsistencyError : public InternalError {
  public:
    using InternalError::InternalError;
};

// ---------------------------------------------------------------------------
// Normally torsion-free check

struct NtfResult {
    bool holds = true;
    std::optional<PowerWitness> witness; // first failing power
};

inline NtfResult ntf_check(const Clutter &c, std::size_t i_max,
                           const Limits &limits = {}) {
    for (std::size_t i = 1; i <= i_max; ++i) {
        const auto ordinary = ordinary_power(c.matrix(), i, limits);
        const auto symbolic = symbolic_power(c, i, limits);
        if (ideal_equal(ordinary, symbolic))
            continue;
        for (const auto &g : symbolic.gens)
            if (!membership(g, ordinary))
                return {false, PowerWitness{i, g}};
        throw InconsistencyError("I^i strictly contains I^(i)");
    }
    return {};
}

// ---------------------------------------------------------------------------
// Verdicts

inline Verdict decide_mfmc(const Clutter &c, const DecisionOptions &opt = {}) {
    const ExponentMatrix &m = c.matrix();
    Verdict v;

    const auto integrality = is_integral_qa(m);
    v.integral = integrality.integral;
    if (!v.integral)
        v.witnesses["integral"] = *integrality.fractional_vertex;

    const auto normality = is_normal(m, opt.limits);
    v.normal = normality.normal;
    if (!v.normal)
        v.witnesses["normal"] = *normality.witness;

    v.mfmc = v.normal && v.integral;

    const auto a0 = alpha0(c, opt.limits), b1 = beta1(c, opt.limits);
    v.koenig = a0 == b1;
    if (!v.koenig)
        v.witnesses["koenig"] = KoenigGap{a0, b1};

    const auto packing = packing_property(c, opt.limits);
    v.packing = packing.holds;
    if (!v.packing)
        v.witnesses["packing"] = *packing.failing_minor;

    const auto smith = smith_invariants(m);
    v.torsion_free = smith.torsion_free();
    if (!v.torsion_free)
        v.witnesses["torsion_free"] = smith.factors;

    const auto ntf = ntf_check(c, opt.i_max, opt.limits);
    v.ntf = ntf.holds;
    v.i_max_checked = opt.i_max;
    if (!v.ntf)
        v.witnesses["ntf"] = *ntf.witness;
    return v;
}

/// The associated graded ring is reduced exactly when the Rees algebra is
/// normal and Q(A) is integral; that equivalence is taken as the definition.
inline bool gr_reduced(const Clutter &c, const Limits &limits = {}) {
    return is_integral_qa(c.matrix()).integral &&
           is_normal(c.matrix(), limits).normal;
}

// ---------------------------------------------------------------------------
// Integrality equivalences: (a) Q(A) integral, (b) the Rees cone is cut out
// by e_1..e_{n+1} and the cover vectors l_k = (sum_{i in C_k} e_i, -1),
// (c) closure(I^i) == I^(i).

struct EquivalenceReport {
    bool integral = false;             // (a)
    bool cover_description = false;    // (b)
    bool closure_is_symbolic = false;  // (c) for every i <= i_max
    std::size_t i_max = 0;
    std::optional<PowerWitness> closure_gap; // first i where (c) fails
    std::vector<IntVector> cover_normals;    // the l_k
};

inline IntVector cover_normal(const VertexSet &cover, std::size_t n) {
    IntVector l(n + 1, 0);
    for (auto v : cover)
        l[v] = 1;
    l[n] = -1;
    return l;
}

inline EquivalenceReport integrality_equivalence_report(const Clutter &c,
                                                        std::size_t i_max = 3,
                                                        const Limits &limits = {}) {
    const std::size_t n = c.vertex_count();
    EquivalenceReport r;
    r.i_max = i_max;
    const auto fc = support_hyperplanes(c.matrix());
    r.integral = is_integral_qa(qa_vertices_via_rees(fc)).integral;

    // Every e_i and l_k is valid on the cone, and the facets are extreme rays
    // of the dual cone, so the two intersections agree iff every facet is one
    // of these normals.
    std::vector<IntVector> allowed;
    for (std::size_t i = 0; i <= n; ++i)
        allowed.push_back(unit_vector(n + 1, i));
    for (const auto &cover : minimal_vertex_covers(c, limits))
        r.cover_normals.push_back(cover_normal(cover, n));
    sort_canonical(r.cover_normals);
    allowed.insert(allowed.end(), r.cover_normals.begin(), r.cover_normals.end());
    r.cover_description = true;
    for (const auto &f : *fc.rees.cone.facets)
        if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
            r.cover_description = false;

    r.closure_is_symbolic = true;
    for (std::size_t i = 1; i <= i_max && r.closure_is_symbolic; ++i) {
        const auto closure =
            closure_power(fc.rees.cone, i, c.matrix().max_entry(), limits);
        const auto symbolic = symbolic_power(c, i, limits);
        if (ideal_equal(closure, symbolic))
            continue;
        r.closure_is_symbolic = false;
        for (const auto &g : symbolic.gens)
            if (!membership(g, closure)) {
                r.closure_gap = PowerWitness{i, g};
                break;
            }
        if (!r.closure_gap)
            throw InconsistencyError(
                "integral closure of I^i is not contained in I^(i)");
    }

    if (r.integral != r.cover_description)
        throw InconsistencyError("Q(A) integrality disagrees with the cover "
                                 "description of the Rees cone");
    if (r.integral && !r.closure_is_symbolic)
        throw InconsistencyError("Q(A) is integral but closure(I^i) != I^(i)");
    return r;
}

// ---------------------------------------------------------------------------
// Bounded TDI oracle

struct TdiCounterexample {
    IntVector alpha;
    Rational lp_value;
    Int integral_value = 0;
    friend bool operator==(const TdiCounterexample &,
                           const TdiCounterexample &) = default;
};

struct TDIReport {
    Int bound = 0;
    std::uint64_t checked = 0;
    std::optional<TdiCounterexample> counterexample;
    friend bool operator==(const TDIReport &, const TDIReport &) = default;
};

namespace detail {
inline void best_packing(const std::vector<IntVector> &cols, std::size_t next,
                         IntVector &slack, Int taken, Int min_weight,
                         Int &best) {
    best = std::max(best, taken);
    if (next == cols.size())
        return;
    Int total = 0;
    for (Int s : slack)
        total += s;
    if (taken + total / min_weight <= best)
        return;
    const auto &col = cols[next];
    Int most = std::numeric_limits<Int>::max();
    for (std::size_t i = 0; i < slack.size(); ++i)
        if (col[i] > 0)
            most = std::min(most, slack[i] / col[i]);
    for (Int y = most; y >= 0; --y) {
        for (std::size_t i = 0; i < slack.size(); ++i)
            slack[i] -= y * col[i];
        best_packing(cols, next + 1, slack, taken + y, min_weight, best);
        for (std::size_t i = 0; i < slack.size(); ++i)
            slack[i] += y * col[i];
    }
}
} // namespace detail

/// max{<y, 1> : y >= 0, Ay <= alpha} over the rationals.
inline Rational packing_lp_value(const ExponentMatrix &m, const IntVector &alpha) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.n(); ++i)
        rows.push_back(m.row(i));
    return lp::maximize(IntVector(m.q(), 1), rows, alpha).value;
}

/// The same maximum over y in N^q.
inline Int packing_integral_value(const ExponentMatrix &m, const IntVector &alpha) {
    Int min_weight = std::numeric_limits<Int>::max();
    for (const auto &c : m.columns())
        min_weight = std::min(min_weight,
                              std::accumulate(c.begin(), c.end(), Int{0}));
    IntVector slack = alpha;
    Int best = 0;
    detail::best_packing(m.columns(), 0, slack, 0, min_weight, best);
    return best;
}

/// For every alpha in {0..bound}^n, compares the rational and integral
/// optima of the packing program; stops at the first gap.
inline TDIReport tdi_bounded_check(const Clutter &c, Int bound,
                                   const Limits &limits = {}) {
    const std::size_t n = c.vertex_count();
    if (bound < 0)
        throw InvalidInputError("bound must be non-negative");
    const auto count =
        power_capped(static_cast<std::uint64_t>(bound) + 1, n, limits.candidates);
    if (count > limits.candidates)
        throw SizeLimitError("tdi", "(bound+1)^n exceeds cap");
    TDIReport report;
    report.bound = bound;
    IntVector alpha(n, 0);
    while (true) {
        ++report.checked;
        const Rational lp_value = packing_lp_value(c.matrix(), alpha);
        const Int int_value = packing_integral_value(c.matrix(), alpha);
        if (Rational(int_value) < lp_value) {
            report.counterexample = TdiCounterexample{alpha, lp_value, int_value};
            return report;
        }
        // Lexicographic order: last coordinate varies fastest.
        std::size_t k = n;
        while (k > 0 && alpha[k - 1] == bound)
            alpha[--k] = 0;
        if (k == 0)
            break;
        ++alpha[k - 1];
    }
    return report;
}

// ---------------------------------------------------------------------------
// Conjecture scanner

struct ScanRecord {
    Clutter clutter;
    bool packing = false;
    std::optional<bool> gr_reduced;   // evaluated when packing holds
    std::optional<bool> torsion_free; // evaluated for constant weight d >= 2
};

struct ScanReport {
    std::size_t total = 0;
    std::size_t packing_tested = 0;        // clutters with the packing property
    std::size_t skipped = 0;               // packing fails, nothing to test
    std::size_t uniform_tested = 0;        // packing + constant weight >= 2
    std::vector<Clutter> packing_counterexamples; // packing but not gr-reduced
    std::vector<Clutter> torsion_counterexamples; // packing, uniform, torsion
    std::vector<ScanRecord> records;
};

inline std::optional<Int> constant_weight(const ExponentMatrix &m) {
    std::optional<Int> w;
    for (const auto &c : m.columns()) {
        Int s = std::accumulate(c.begin(), c.end(), Int{0});
        if (w && *w != s)
            return std::nullopt;
        w = s;
    }
    return w;
}

inline ScanReport conjecture_scan(const std::vector<Clutter> &family,
                                  const Limits &limits = {}) {
    ScanReport report;
    for (const auto &c : family) {
        ++report.total;
        ScanRecord rec{c, packing_property(c, limits).holds, {}, {}};
        if (!rec.packing) {
            ++report.skipped;
            report.records.push_back(std::move(rec));
            continue;
        }
        ++report.packing_tested;
        rec.gr_reduced = gr_reduced(c, limits);
        if (!*rec.gr_reduced)
            report.packing_counterexamples.push_back(c);
        if (auto w = constant_weight(c.matrix()); w && *w >= 2) {
            ++report.uniform_tested;
            rec.torsion_free = smith_invariants(c.matrix()).torsion_free();
            if (!*rec.torsion_free)
                report.torsion_counterexamples.push_back(c);
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

/// Every clutter on exactly n vertices (labelled x1..xn, isolated vertices
/// allowed) with between 1 and max_edges edges, for n = 1..max_vertices.
inline std::vector<Clutter> all_clutters(std::size_t max_vertices,
                                         std::size_t max_edges) {
    if (max_vertices > 6)
        throw SizeLimitError("scan", "clutter enumeration above 6 vertices");
    std::vector<Clutter> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        const Mask full = (Mask{1} << n) - 1;
        std::vector<Mask> pick;
        std::function<void(Mask)> extend = [&](Mask from) {
            if (!pick.empty()) {
                std::vector<VertexSet> edges;
                for (Mask e : pick)
                    edges.push_back(from_mask(e));
                out.push_back(clutter_from_edges(edges, n));
            }
            if (pick.size() == max_edges)
                return;
            for (Mask e = from; e <= full; ++e) {
                bool comparable = false;
                for (Mask f : pick)
                    if ((e & f) == e || (e & f) == f)
                        comparable = true;
                if (comparable)
                    continue;
                pick.push_back(e);
                extend(e + 1);
                pick.pop_back();
            }
        };
        extend(1);
    }
    return out;
}

} // namespace mfmc
