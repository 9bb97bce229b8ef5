// mfmc: decide the max-flow min-cut property of a clutter and report the
// Rees cone, Hilbert basis, set covering vertices and ideal powers.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <mfmc/mfmc.hpp>

namespace {

enum ExitCode { Ok = 0, Failure = 1, InputError = 2, SizeLimit = 3 };

struct Flags {
    std::string input = "-";
    std::size_t imax = 3;
    mfmc::Int tdi_bound = -1;
    std::string format = "text";
    std::uint64_t minor_cap = mfmc::Limits{}.minor_specs;
    std::size_t max_vertices = 4;
    std::size_t max_edges = 4;
};

std::string read_all(const std::string &path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw mfmc::InvalidInputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

mfmc::AnalyzeOptions options(const std::string &cmd, const Flags &f) {
    mfmc::AnalyzeOptions opt;
    if (cmd != "analyze") {
        opt.sections.hilbert = cmd == "hilbert" || cmd == "mfmc";
        opt.sections.verdict = cmd == "mfmc";
        opt.sections.powers = cmd == "powers";
    }
    opt.i_max = f.imax;
    if (f.tdi_bound >= 0)
        opt.tdi_bound = f.tdi_bound;
    opt.limits.minor_specs = f.minor_cap;
    return opt;
}

void emit(const std::string &cmd, const mfmc::Report &r, bool json) {
    using mfmc::Json;
    if (json) {
        Json full = mfmc::to_json(r);
        Json out;
        if (cmd == "analyze")
            out = full;
        else if (cmd == "facets")
            out = {{"support_hyperplanes", full["support_hyperplanes"]},
                   {"coordinate_facets", full["coordinate_facets"]},
                   {"vertex_facets", full["vertex_facets"]}};
        else if (cmd == "hilbert")
            out = {{"hilbert_basis", full["hilbert_basis"]}, {"normal", full["normal"]}};
        else if (cmd == "vertices")
            out = {{"vertices", full["vertices"]}, {"integral", full["integral"]}};
        else if (cmd == "powers")
            out = {{"powers", full["powers"]}};
        else
            out = {{"normal", full["normal"]},
                   {"integral", full["integral"]},
                   {"verdict", full["verdict"]},
                   {"tdi", full["tdi"]}};
        std::cout << out.dump(2) << '\n';
        return;
    }
    if (cmd == "analyze")
        std::cout << mfmc::render_text(r);
    else if (cmd == "facets")
        std::cout << mfmc::hyperplane_block(r);
    else if (cmd == "hilbert")
        std::cout << mfmc::hilbert_block(r);
    else if (cmd == "vertices")
        std::cout << mfmc::vertex_block(r);
    else if (cmd == "powers")
        std::cout << mfmc::powers_block(r);
    else
        std::cout << mfmc::verdict_block(r);
}

int run_scan(const Flags &f) {
    mfmc::Limits limits;
    limits.minor_specs = f.minor_cap;
    const auto family = mfmc::all_clutters(f.max_vertices, f.max_edges);
    const auto report = mfmc::conjecture_scan(family, limits);
    if (f.format == "json") {
        mfmc::Json j{{"max_vertices", f.max_vertices},
                     {"max_edges", f.max_edges},
                     {"total", report.total},
                     {"packing_tested", report.packing_tested},
                     {"skipped", report.skipped},
                     {"uniform_tested", report.uniform_tested},
                     {"packing_counterexamples", report.packing_counterexamples.size()},
                     {"torsion_counterexamples", report.torsion_counterexamples.size()},
                     {"note", "desk-scale evidence only; the conjectures are not "
                              "decided by a finite scan"}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "conjecture scan: clutters on <= " << f.max_vertices
                  << " vertices with <= " << f.max_edges << " edges\n"
                  << "  clutters scanned                 " << report.total << '\n'
                  << "  packing property (tested)        " << report.packing_tested << '\n'
                  << "  packing fails (skipped)          " << report.skipped << '\n'
                  << "  packing but gr not reduced       "
                  << report.packing_counterexamples.size() << '\n'
                  << "  packing + constant weight >= 2   " << report.uniform_tested << '\n'
                  << "  ... with torsion                 "
                  << report.torsion_counterexamples.size() << '\n'
                  << "note: desk-scale evidence only; the conjectures are not "
                     "decided by a finite scan\n";
        for (const auto &c : report.packing_counterexamples) {
            std::cout << "COUNTEREXAMPLE (packing, not gr-reduced):";
            for (const auto &col : c.matrix().columns())
                std::cout << " [" << mfmc::join(col) << "]";
            std::cout << '\n';
        }
        for (const auto &c : report.torsion_counterexamples) {
            std::cout << "COUNTEREXAMPLE (packing, uniform, torsion):";
            for (const auto &col : c.matrix().columns())
                std::cout << " [" << mfmc::join(col) << "]";
            std::cout << '\n';
        }
    }
    return Ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Max-flow min-cut toolkit for clutters and monomial ideals"};
    app.require_subcommand(1);
    Flags flags;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"analyze", "full report: Hilbert basis, support hyperplanes, vertices, verdict, powers"},
        {"facets", "irreducible representation of the Rees cone"},
        {"hilbert", "Hilbert basis of the Rees cone (integral closure generators)"},
        {"vertices", "vertices of the set covering polyhedron"},
        {"powers", "ordinary, symbolic and integrally closed powers"},
        {"mfmc", "max-flow min-cut verdict with witnesses"},
    };
    for (const auto &[name, help] : commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("input", flags.input, "input file ('-' for stdin)");
        sub->add_option("--imax", flags.imax, "largest power checked")->check(CLI::PositiveNumber);
        sub->add_option("--tdi-bound", flags.tdi_bound, "run the bounded TDI check up to this bound");
        sub->add_option("--format", flags.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--minor-cap", flags.minor_cap, "maximum number of minor specs");
    }
    auto *scan = app.add_subcommand("scan", "conjecture scan over all small clutters");
    scan->add_option("--max-vertices", flags.max_vertices, "largest vertex count");
    scan->add_option("--max-edges", flags.max_edges, "largest edge count");
    scan->add_option("--format", flags.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    scan->add_option("--minor-cap", flags.minor_cap, "maximum number of minor specs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed())
            return run_scan(flags);
        const std::string cmd = app.get_subcommands().front()->get_name();
        const auto doc = mfmc::parse_input(read_all(flags.input));
        const auto report = mfmc::analyze(doc, options(cmd, flags));
        emit(cmd, report, flags.format == "json");
        return Ok;
    } catch (const mfmc::SizeLimitError &e) {
        std::cerr << "size limit reached in stage " << e.stage() << ": " << e.what() << '\n';
        return SizeLimit;
    } catch (const mfmc::InvalidInputError &e) {
        std::cerr << "input error: " << e.what() << '\n';
        return InputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failure;
    }
}
