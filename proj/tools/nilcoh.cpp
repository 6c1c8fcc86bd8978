#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nilcoh/catalog.hpp"
#include "nilcoh/report.hpp"

namespace {

using namespace nilcoh;

AlgebraDocument load_input(const std::string& input) {
    if (input.empty()) fail_validation("--input is required (path or catalog name)");
    if (is_catalog_name(input)) return catalog_document(input);
    std::ifstream in(input);
    if (!in) fail_validation("cannot open input '" + input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

// Index-sharded parallel loop; results land in caller-owned slots, so the
// output is identical for any thread count.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t nt = std::min(threads, count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    for (std::size_t w = 0; w < nt; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += nt) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

HodgeTable diamond(const BigradedComplex& cx, std::size_t threads) {
    const std::size_t n = cx.n();
    std::vector<std::vector<std::size_t>> grid(n + 1, std::vector<std::size_t>(n + 1, 0));
    parallel_for((n + 1) * (n + 1), threads, [&](std::size_t k) {
        grid[k / (n + 1)][k % (n + 1)] = cx.hodge_number(k / (n + 1), k % (n + 1));
    });
    return assemble_diamond(cx, std::move(grid));
}

struct CheckRun {
    std::ostream& os;
    void line(const std::string& name, const std::string& detail = "ok") {
        os << "  " << name << ": " << detail << "\n";
    }
};

void check_document(const AlgebraDocument& doc, const std::string& level, std::ostream& os) {
    os << "checking " << doc.name << "\n";
    CheckRun run{os};

    // Round trip, construction-time validation (Jacobi, nilpotency, J² = −Id).
    AlgebraDocument reparsed = parse_document(emit_document(doc));
    if (emit_document(reparsed) != emit_document(doc))
        fail_internal("check: document round-trip is not byte-identical");
    run.line("document round-trip");
    ComplexStructure J = document_structure(doc);
    run.line("jacobi + nilpotency + J^2 = -Id");

    bool nijenhuis_zero = J.is_integrable();
    if (nijenhuis_zero != dbar_02_vanishes(J))
        fail_internal("check: Nijenhuis and (0,2)-component tests disagree");
    run.line("integrability (Nijenhuis = (0,2)-test)", nijenhuis_zero ? "integrable" : "almost");
    if (!nijenhuis_zero)
        fail_validation("check: '" + doc.name + "' carries a non-integrable J; the structural "
                        "checks require integrability");

    JSeries js = j_series(J);
    run.line("J-series facts: ideal steps, abelian quotients, abelian last term, strict "
             "first inclusion");
    if (J.is_rational()) run.line("rationality of every gJ^i term");
    annihilator_series(J);
    run.line("annihilator series (d-condition route = annihilator route)");
    AdaptedBasis ab = adapted_basis(J);
    run.line("adapted basis: earlier-form ideal condition + V^{1,0} dimension ladder");

    if (J.is_abelian()) {
        const LieAlgebra& g = J.algebra();
        for (const auto& term : js.terms)
            for (std::size_t r = 0; r < term.dim(); ++r)
                for (std::size_t j = 0; j < g.dim(); ++j) {
                    std::vector<Scalar> ej(g.dim());
                    ej[j] = Scalar(1);
                    if (!term.contains(g.bracket(ej, term.basis().row(r))))
                        fail_internal("check: abelian J but gJ^i is not an ideal of g");
                }
        Subspace z = g.center();
        if (!g.is_rational_subspace(z)) fail_internal("check: center is not rational");
        std::vector<std::vector<Scalar>> jz;
        for (std::size_t r = 0; r < z.dim(); ++r) jz.push_back(J.apply_j(z.basis().row(r)));
        if (!z.contains(Subspace::span(jz, g.dim(), z.field())))
            fail_internal("check: abelian J but the center is not J-invariant");
        run.line("abelian J: gJ^i ideals of g, center rational and J-invariant");
    }

    BigradedComplex cx = BigradedComplex::build(J, ab);
    run.line("complex identities: dbar^2 = 0, partial^2 = 0, mixed anticommutator = 0");
    HodgeTable table = full_diamond(cx);
    if (!table.euler_ok) fail_internal("check: Euler alternating sum is nonzero");
    if (!table.frolicher_ok) fail_internal("check: Froelicher inequality fails");
    run.line("diamond: euler, froelicher, serre");
    if (!conjugation_consistent(cx))
        fail_internal("check: dbar-side h^{p,q} != partial-side h^{q,p}");
    run.line("conjugation cross-check");
    if (table.betti.front() != 1 || table.betti.back() != 1)
        fail_internal("check: b_0 or b_2n is not 1");
    run.line("betti endpoints b_0 = b_2n = 1");

    if (level == "full") {
        LadderReport ladder = ladder_report(J);
        bool page2 = true;
        for (const auto& step : ladder.steps) page2 = page2 && step.page2_formula_ok;
        run.line("spectral pages: page-1 formula, euler constancy, monotone, convergence",
                 page2 ? "ok (page-2 tensor formula holds at every step)"
                       : "ok (nonzero d1 at some step; page-2 tensor formula not applicable)");
    }
    os << "  all checks passed\n";
}

int dispatch(CLI::App& app, const std::string& input, const std::string& format,
             std::size_t threads, long popt, long qopt,
             const std::vector<std::string>& tvals, const std::string& family,
             const std::string& check_level, bool check_all) {
    std::ostream& out = std::cout;

    if (app.got_subcommand("validate")) {
        AlgebraDocument doc = load_input(input);
        ComplexStructure J = document_structure(doc);
        out << "ok: " << doc.name << " (dim " << doc.dimension << ", "
            << (J.is_integrable() ? "integrable" : "almost-complex only") << ")\n";
        return 0;
    }
    if (app.got_subcommand("series")) {
        AlgebraDocument doc = load_input(input);
        ComplexStructure J = document_structure(doc);
        SeriesData data{doc.name, J.algebra().lower_central_series(), j_series(J),
                        annihilator_series(J)};
        out << render_series(data, format);
        return 0;
    }
    if (app.got_subcommand("basis")) {
        AlgebraDocument doc = load_input(input);
        ComplexStructure J = document_structure(doc);
        AdaptedBasis ab = adapted_basis(J);
        GeneratorDerivatives gd = generator_derivatives(J.algebra(), ab.omegas, ab.field);
        out << render_basis(doc.name, ab, gd, format);
        return 0;
    }
    if (app.got_subcommand("hodge")) {
        AlgebraDocument doc = load_input(input);
        ComplexStructure J = document_structure(doc);
        J.require_integrable("hodge");
        AdaptedBasis ab = adapted_basis(J);
        BigradedComplex cx = BigradedComplex::build(J, ab);
        if (popt >= 0 || qopt >= 0) {
            if (popt < 0 || qopt < 0) fail_validation("hodge: give both --p and --q");
            std::size_t p = static_cast<std::size_t>(popt), q = static_cast<std::size_t>(qopt);
            out << render_hodge_single(doc.name, p, q, cx.hodge_number(p, q),
                                       representative_strings(cx, p, q), format);
            return 0;
        }
        out << render_hodge(doc.name, diamond(cx, threads), format);
        return 0;
    }
    if (app.got_subcommand("betti")) {
        AlgebraDocument doc = load_input(input);
        LieAlgebra g = document_algebra(doc);
        out << render_betti(doc.name, chevalley_eilenberg_betti_all(g), format);
        return 0;
    }
    if (app.got_subcommand("spectral")) {
        AlgebraDocument doc = load_input(input);
        ComplexStructure J = document_structure(doc);
        out << render_spectral(ladder_report(J), format);
        return 0;
    }
    if (app.got_subcommand("scan")) {
        AlgebraDocument doc = load_input(input);
        if (family != "default")
            fail_validation("scan: only --family default is available");
        ComplexFamily fam = document_family(doc);
        std::vector<Scalar> samples;
        for (const auto& t : tvals) samples.push_back(Scalar::parse(t));
        ScanReport report = scan(fam, std::move(samples), threads);
        out << render_scan(report, fam.basis.n, format);
        return 0;
    }
    if (app.got_subcommand("classify")) {
        AlgebraDocument doc = load_input(input);
        ComplexStructure J = document_structure(doc);
        ClassifyData c{doc.name, J.is_integrable(), J.is_rational(), J.is_abelian(),
                       J.is_parallelizable()};
        out << render_classify(c, format);
        return 0;
    }
    if (app.got_subcommand("check")) {
        if (check_all) {
            for (const auto& name : catalog_names())
                check_document(catalog_document(name), check_level, out);
        } else {
            check_document(load_input(input), check_level, out);
        }
        out << "check: all passed\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dolbeault cohomology of nilpotent Lie algebras with invariant "
                 "complex structures"};
    app.set_version_flag("--version", "nilcoh 0.1.0");
    app.require_subcommand(1);

    std::string input, format = "text", family = "default", check_level = "full";
    std::size_t threads = 1;
    long popt = -1, qopt = -1;
    std::vector<std::string> tvals;
    bool check_all = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        cmd->add_option("--input", input, "input document path or catalog name")
            ->required(needs_input);
        cmd->add_option("--format", format, "output format: text|csv|json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--threads", threads, "worker threads (default 1, reproducible)");
    };

    add_common(app.add_subcommand("validate", "parse and validate a document"));
    add_common(app.add_subcommand("series",
                                  "central series, J-adapted series, annihilator chain"));
    add_common(app.add_subcommand("basis", "adapted (1,0)-basis with levels and d"));
    auto* hodge = app.add_subcommand("hodge", "hodge diamond (or one h^{p,q})");
    add_common(hodge);
    hodge->add_option("--p", popt, "bidegree p")->check(CLI::NonNegativeNumber);
    hodge->add_option("--q", qopt, "bidegree q")->check(CLI::NonNegativeNumber);
    add_common(app.add_subcommand("betti", "Chevalley-Eilenberg betti numbers"));
    add_common(app.add_subcommand("spectral", "filtration spectral sequence pages and checks"));
    auto* scan_cmd = app.add_subcommand("scan", "deformation family scan over exact parameters");
    add_common(scan_cmd);
    scan_cmd->add_option("--t", tvals, "sample parameter (repeatable, scalar grammar)");
    scan_cmd->add_option("--family", family, "family selector (default)");
    add_common(app.add_subcommand("classify", "rational/abelian/parallelizable flags"));
    auto* check = app.add_subcommand("check", "run the structural assertion suite");
    check->add_option("--input", input, "input document path or catalog name");
    check->add_option("--format", format, "output format: text")
        ->check(CLI::IsMember({"text"}));
    check->add_option("--threads", threads, "worker threads");
    check->add_flag("--all", check_all, "check every catalog entry");
    check->add_option("--check-level", check_level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: validation: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand("check") && !check_all && input.empty())
            fail_validation("check: give --input or --all");
        return dispatch(app, input, format, threads, popt, qopt, tvals, family, check_level,
                        check_all);
    } catch (const nilcoh::Error& e) {
        const char* kind = "validation";
        int code = 1;
        switch (e.kind()) {
        case nilcoh::ErrorKind::validation: kind = "validation"; break;
        case nilcoh::ErrorKind::degenerate_parameter: kind = "degenerate-parameter"; break;
        case nilcoh::ErrorKind::internal_inconsistency:
            kind = "internal-inconsistency";
            code = 2;
            break;
        }
        std::cerr << "error: " << kind << ": " << e.what() << "\n";
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: internal-inconsistency: unexpected exception: " << e.what() << "\n";
        return 2;
    }
}
