#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "decision.hpp"
#include "io.hpp"

namespace mfmc {

struct PowerRow {
    std::size_t power = 0;
    std::size_t ordinary = 0;             // |minimal gens of I^i|
    std::optional<std::size_t> symbolic;  // clutters only
    std::size_t closure = 0;
    bool ordinary_is_closure = false;
    std::optional<bool> closure_is_symbolic;
    std::optional<bool> ordinary_is_symbolic;

    friend bool operator==(const PowerRow &, const PowerRow &) = default;
};

struct Report {
    SourceFormat format = SourceFormat::Normaliz;
    std::vector<std::string> labels;
    std::vector<IntVector> generators;
    std::vector<IntVector> hilbert_basis;
    std::vector<IntVector> support_hyperplanes;
    std::vector<std::size_t> coordinate_facets; // 0-based
    std::vector<IntVector> vertex_facets;
    std::vector<RationalVector> vertices;
    bool normal = false;
    std::optional<IntVector> normal_witness;
    bool integral = false;
    std::optional<RationalVector> fractional_vertex;
    std::optional<Verdict> verdict; // clutters only
    std::vector<PowerRow> powers;
    std::optional<TDIReport> tdi;
    std::size_t i_max = 0;

    friend bool operator==(const Report &, const Report &) = default;
};

/// Which parts of the pipeline to run; facets and vertices are always
/// computed.
struct Sections {
    bool hilbert = true;
    bool verdict = true;
    bool powers = true;
};

struct AnalyzeOptions {
    std::size_t i_max = 3;
    Sections sections;
    std::optional<Int> tdi_bound;
    Limits limits;
};

inline Report analyze(const InputDocument &doc, const AnalyzeOptions &opt = {}) {
    const ExponentMatrix &m = doc.matrix;
    Report r;
    r.format = doc.source_format;
    r.labels = doc.labels;
    r.generators = m.columns();
    r.i_max = opt.i_max;

    const auto fc = support_hyperplanes(m);
    r.support_hyperplanes = *fc.rees.cone.facets;
    r.coordinate_facets = fc.coordinate_facets;
    r.vertex_facets = fc.vertex_facets;
    const auto qa = qa_vertices_via_rees(fc);
    r.vertices = qa.vertices;
    const auto integrality = is_integral_qa(qa);
    r.integral = integrality.integral;
    r.fractional_vertex = integrality.fractional_vertex;

    if (opt.sections.hilbert || opt.sections.verdict) {
        const auto hb = hilbert_basis(fc.rees.cone, opt.limits);
        r.hilbert_basis = hb.elements;
        const auto normality = is_normal(m, hb);
        r.normal = normality.normal;
        r.normal_witness = normality.witness;
    }

    std::optional<Clutter> clutter;
    if (doc.is_clutter())
        clutter = doc.clutter();
    if (clutter && opt.sections.verdict) {
        DecisionOptions dopt;
        dopt.i_max = opt.i_max;
        dopt.limits = opt.limits;
        r.verdict = decide_mfmc(*clutter, dopt);
    }

    for (std::size_t i = 1; opt.sections.powers && i <= opt.i_max; ++i) {
        PowerRow row;
        row.power = i;
        const auto ordinary = ordinary_power(m, i, opt.limits);
        const auto closure = closure_power(fc.rees.cone, i, m.max_entry(), opt.limits);
        row.ordinary = ordinary.gens.size();
        row.closure = closure.gens.size();
        row.ordinary_is_closure = ideal_equal(ordinary, closure);
        if (clutter) {
            const auto symbolic = symbolic_power(*clutter, i, opt.limits);
            row.symbolic = symbolic.gens.size();
            row.closure_is_symbolic = ideal_equal(closure, symbolic);
            row.ordinary_is_symbolic = ideal_equal(ordinary, symbolic);
        }
        r.powers.push_back(row);
    }

    if (opt.tdi_bound && clutter && opt.sections.verdict)
        r.tdi = tdi_bounded_check(*clutter, *opt.tdi_bound, opt.limits);
    return r;
}

// ---------------------------------------------------------------------------
// Text

/// Right-aligned rows; every field is padded to the widest entry of the
/// block plus two spaces.
inline std::string format_block(const std::vector<std::vector<std::string>> &rows) {
    std::size_t width = 0;
    for (const auto &r : rows)
        for (const auto &s : r)
            width = std::max(width, s.size());
    width += 2;
    std::string out;
    for (const auto &r : rows) {
        for (const auto &s : r)
            out += std::string(width - s.size(), ' ') + s;
        out += '\n';
    }
    return out;
}

inline std::vector<std::vector<std::string>>
to_cells(const std::vector<IntVector> &rows) {
    std::vector<std::vector<std::string>> cells;
    for (const auto &r : rows) {
        std::vector<std::string> c;
        for (Int x : r)
            c.push_back(std::to_string(x));
        cells.push_back(std::move(c));
    }
    return cells;
}

inline std::vector<std::vector<std::string>>
to_cells(const std::vector<RationalVector> &rows) {
    std::vector<std::vector<std::string>> cells;
    for (const auto &r : rows) {
        std::vector<std::string> c;
        for (const auto &x : r)
            c.push_back(to_string(x));
        cells.push_back(std::move(c));
    }
    return cells;
}

inline std::string hilbert_block(const Report &r) {
    return std::to_string(r.hilbert_basis.size()) +
           " generators of integral closure of Rees algebra: \n" +
           format_block(to_cells(r.hilbert_basis));
}

inline std::string hyperplane_block(const Report &r) {
    return std::to_string(r.support_hyperplanes.size()) +
           " support hyperplanes: \n" +
           format_block(to_cells(r.support_hyperplanes));
}

inline std::string vertex_block(const Report &r) {
    return std::to_string(r.vertices.size()) +
           " vertices of the set covering polyhedron: \n" +
           format_block(to_cells(r.vertices));
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string describe(const Evidence &e, const std::vector<std::string> &labels) {
    struct Visitor {
        const std::vector<std::string> &labels;
        std::string operator()(const RationalVector &v) const {
            return "fractional vertex " + join(v);
        }
        std::string operator()(const IntVector &v) const { return join(v); }
        std::string operator()(const MinorSpec &s) const {
            auto names = [&](const VertexSet &vs) {
                std::string out = "{";
                for (std::size_t i = 0; i < vs.size(); ++i)
                    out += (i ? "," : "") + labels.at(vs[i]);
                return out + "}";
            };
            return "minor zeros=" + names(s.zeros) + " ones=" + names(s.ones);
        }
        std::string operator()(const PowerWitness &w) const {
            return "i=" + std::to_string(w.power) + " monomial " + join(w.monomial);
        }
        std::string operator()(const KoenigGap &g) const {
            return "alpha0=" + std::to_string(g.alpha0) +
                   " beta1=" + std::to_string(g.beta1);
        }
    };
    return std::visit(Visitor{labels}, e);
}

inline std::string verdict_block(const Report &r) {
    std::ostringstream os;
    os << "verdict: \n";
    auto line = [&](const std::string &name, bool value, const std::string &note) {
        os << "  " << name << std::string(14 - name.size(), ' ') << yes_no(value);
        if (!note.empty())
            os << "  (" << note << ")";
        os << '\n';
    };
    line("normal", r.normal,
         r.normal_witness ? "not in the Rees algebra: " + join(*r.normal_witness) : "");
    line("integral", r.integral,
         r.fractional_vertex ? "fractional vertex " + join(*r.fractional_vertex) : "");
    if (!r.verdict) {
        os << "  (input is not a clutter; clutter predicates skipped)\n";
        return os.str();
    }
    const Verdict &v = *r.verdict;
    auto note = [&](const char *key) -> std::string {
        auto it = v.witnesses.find(key);
        return it == v.witnesses.end() ? "" : describe(it->second, r.labels);
    };
    line("mfmc", v.mfmc, "");
    line("koenig", v.koenig, note("koenig"));
    line("packing", v.packing, note("packing"));
    line("torsion_free", v.torsion_free, note("torsion_free"));
    line("ntf(i<=" + std::to_string(v.i_max_checked) + ")", v.ntf, note("ntf"));
    line("gr_reduced", v.normal && v.integral, "");
    if (r.tdi) {
        const auto &t = *r.tdi;
        std::string n = "bound " + std::to_string(t.bound) + ", " +
                        std::to_string(t.checked) + " objectives";
        if (t.counterexample)
            n += "; alpha=" + join(t.counterexample->alpha) + " LP " +
                 to_string(t.counterexample->lp_value) + " vs integral " +
                 std::to_string(t.counterexample->integral_value);
        line("tdi_bounded", !t.counterexample, n);
    }
    return os.str();
}

inline std::string powers_block(const Report &r) {
    std::vector<std::vector<std::string>> cells{
        {"i", "|I^i|", "|I^(i)|", "|cl(I^i)|", "I^i=cl", "cl=I^(i)", "I^i=I^(i)"}};
    auto opt = [](const auto &o) -> std::string {
        if (!o)
            return "-";
        if constexpr (std::is_same_v<std::decay_t<decltype(*o)>, bool>)
            return yes_no(*o);
        else
            return std::to_string(*o);
    };
    for (const auto &p : r.powers)
        cells.push_back({std::to_string(p.power), std::to_string(p.ordinary),
                         opt(p.symbolic), std::to_string(p.closure),
                         yes_no(p.ordinary_is_closure), opt(p.closure_is_symbolic),
                         opt(p.ordinary_is_symbolic)});
    return "powers (minimal generator counts): \n" + format_block(cells);
}

inline std::string render_text(const Report &r) {
    return hilbert_block(r) + "\n" + hyperplane_block(r) + "\n" +
           vertex_block(r) + "\n" + verdict_block(r) + "\n" + powers_block(r);
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::json;

inline Json rational_json(const RationalVector &v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(to_string(x));
    return a;
}

inline RationalVector rational_from_json(const Json &j) {
    RationalVector v;
    for (const auto &x : j)
        v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

inline Json evidence_json(const std::string &key, const Evidence &e) {
    struct Visitor {
        const std::string &key;
        Json operator()(const RationalVector &v) const {
            return {{"kind", "fractional_vertex"}, {"value", rational_json(v)}};
        }
        Json operator()(const IntVector &v) const {
            return {{"kind", key == "torsion_free" ? "smith_factors" : "hilbert_element"},
                    {"value", v}};
        }
        Json operator()(const MinorSpec &s) const {
            return {{"kind", "minor"}, {"zeros", s.zeros}, {"ones", s.ones}};
        }
        Json operator()(const PowerWitness &w) const {
            return {{"kind", "power"}, {"power", w.power}, {"monomial", w.monomial}};
        }
        Json operator()(const KoenigGap &g) const {
            return {{"kind", "koenig_gap"}, {"alpha0", g.alpha0}, {"beta1", g.beta1}};
        }
    };
    return std::visit(Visitor{key}, e);
}

inline Evidence evidence_from_json(const Json &j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "fractional_vertex")
        return rational_from_json(j.at("value"));
    if (kind == "hilbert_element" || kind == "smith_factors")
        return j.at("value").get<IntVector>();
    if (kind == "minor")
        return MinorSpec{j.at("zeros").get<VertexSet>(), j.at("ones").get<VertexSet>()};
    if (kind == "power")
        return PowerWitness{j.at("power").get<std::size_t>(),
                            j.at("monomial").get<IntVector>()};
    if (kind == "koenig_gap")
        return KoenigGap{j.at("alpha0").get<std::size_t>(),
                         j.at("beta1").get<std::size_t>()};
    throw InvalidInputError("unknown evidence kind " + kind);
}

inline Json verdict_json(const Verdict &v) {
    Json w = Json::object();
    for (const auto &[k, e] : v.witnesses)
        w[k] = evidence_json(k, e);
    return {{"mfmc", v.mfmc},
            {"normal", v.normal},
            {"integral", v.integral},
            {"koenig", v.koenig},
            {"packing", v.packing},
            {"torsion_free", v.torsion_free},
            {"ntf", v.ntf},
            {"gr_reduced", v.normal && v.integral},
            {"i_max_checked", v.i_max_checked},
            {"witnesses", w}};
}

inline Verdict verdict_from_json(const Json &j) {
    Verdict v;
    v.mfmc = j.at("mfmc");
    v.normal = j.at("normal");
    v.integral = j.at("integral");
    v.koenig = j.at("koenig");
    v.packing = j.at("packing");
    v.torsion_free = j.at("torsion_free");
    v.ntf = j.at("ntf");
    v.i_max_checked = j.at("i_max_checked");
    for (const auto &[k, e] : j.at("witnesses").items())
        v.witnesses[k] = evidence_from_json(e);
    return v;
}

inline Json tdi_json(const TDIReport &t) {
    Json j{{"bound", t.bound}, {"checked", t.checked}, {"counterexample", nullptr}};
    if (t.counterexample)
        j["counterexample"] = {{"alpha", t.counterexample->alpha},
                               {"lp_value", to_string(t.counterexample->lp_value)},
                               {"integral_value", t.counterexample->integral_value}};
    return j;
}

inline TDIReport tdi_from_json(const Json &j) {
    TDIReport t;
    t.bound = j.at("bound");
    t.checked = j.at("checked");
    if (!j.at("counterexample").is_null()) {
        const auto &c = j.at("counterexample");
        t.counterexample = TdiCounterexample{
            c.at("alpha").get<IntVector>(),
            parse_rational(c.at("lp_value").get<std::string>()),
            c.at("integral_value").get<Int>()};
    }
    return t;
}

template <typename T> Json optional_json(const std::optional<T> &o) {
    return o ? Json(*o) : Json(nullptr);
}

inline Json power_row_json(const PowerRow &p) {
    return {{"i", p.power},
            {"ordinary", p.ordinary},
            {"symbolic", optional_json(p.symbolic)},
            {"closure", p.closure},
            {"ordinary_is_closure", p.ordinary_is_closure},
            {"closure_is_symbolic", optional_json(p.closure_is_symbolic)},
            {"ordinary_is_symbolic", optional_json(p.ordinary_is_symbolic)}};
}

template <typename T> std::optional<T> optional_from(const Json &j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

inline Json to_json(const Report &r) {
    Json vertices = Json::array();
    for (const auto &v : r.vertices)
        vertices.push_back(rational_json(v));
    Json powers = Json::array();
    for (const auto &p : r.powers)
        powers.push_back(power_row_json(p));
    Json coordinate = Json::array();
    for (auto i : r.coordinate_facets)
        coordinate.push_back(i + 1);
    return {
        {"input",
         {{"format", r.format == SourceFormat::Normaliz ? "normaliz" : "native"},
          {"n", r.labels.size()},
          {"q", r.generators.size()},
          {"labels", r.labels},
          {"generators", r.generators}}},
        {"hilbert_basis", r.hilbert_basis},
        {"support_hyperplanes", r.support_hyperplanes},
        {"coordinate_facets", coordinate},
        {"vertex_facets", r.vertex_facets},
        {"vertices", vertices},
        {"normal", {{"value", r.normal}, {"witness", optional_json(r.normal_witness)}}},
        {"integral",
         {{"value", r.integral},
          {"witness", r.fractional_vertex ? rational_json(*r.fractional_vertex)
                                          : Json(nullptr)}}},
        {"verdict", r.verdict ? verdict_json(*r.verdict) : Json(nullptr)},
        {"powers", powers},
        {"tdi", r.tdi ? tdi_json(*r.tdi) : Json(nullptr)},
        {"i_max", r.i_max},
    };
}

inline Report report_from_json(const Json &j) {
    Report r;
    const auto &in = j.at("input");
    r.format = in.at("format") == "normaliz" ? SourceFormat::Normaliz
                                             : SourceFormat::Native;
    r.labels = in.at("labels").get<std::vector<std::string>>();
    r.generators = in.at("generators").get<std::vector<IntVector>>();
    r.hilbert_basis = j.at("hilbert_basis").get<std::vector<IntVector>>();
    r.support_hyperplanes = j.at("support_hyperplanes").get<std::vector<IntVector>>();
    for (const auto &i : j.at("coordinate_facets"))
        r.coordinate_facets.push_back(i.get<std::size_t>() - 1);
    r.vertex_facets = j.at("vertex_facets").get<std::vector<IntVector>>();
    for (const auto &v : j.at("vertices"))
        r.vertices.push_back(rational_from_json(v));
    r.normal = j.at("normal").at("value");
    r.normal_witness = optional_from<IntVector>(j.at("normal").at("witness"));
    r.integral = j.at("integral").at("value");
    if (!j.at("integral").at("witness").is_null())
        r.fractional_vertex = rational_from_json(j.at("integral").at("witness"));
    if (!j.at("verdict").is_null())
        r.verdict = verdict_from_json(j.at("verdict"));
    for (const auto &p : j.at("powers")) {
        PowerRow row;
        row.power = p.at("i");
        row.ordinary = p.at("ordinary");
        row.symbolic = optional_from<std::size_t>(p.at("symbolic"));
        row.closure = p.at("closure");
        row.ordinary_is_closure = p.at("ordinary_is_closure");
        row.closure_is_symbolic = optional_from<bool>(p.at("closure_is_symbolic"));
        row.ordinary_is_symbolic = optional_from<bool>(p.at("ordinary_is_symbolic"));
        r.powers.push_back(row);
    }
    if (!j.at("tdi").is_null())
        r.tdi = tdi_from_json(j.at("tdi"));
    r.i_max = j.at("i_max");
    return r;
}

} // namespace mfmc
