#include "nilcoh/report.hpp"

#include <sstream>

#include <json.hpp>

namespace nilcoh {

namespace {

using json = nlohmann::ordered_json;

void check_format(const std::string& format, bool csv_allowed) {
    if (format == "text" || format == "json") return;
    if (format == "csv" && csv_allowed) return;
    fail_validation("unsupported format '" + format + "' for this report");
}

std::string coeff_term(const Scalar& c, const std::string& sym) {
    if (c == Scalar(1)) return sym;
    if (c == Scalar(-1)) return "-" + sym;
    std::string cs = c.str();
    bool needs_parens = cs.find('+') != std::string::npos ||
                        cs.find('-', 1) != std::string::npos;
    if (needs_parens) cs = "(" + cs + ")";
    return cs + "*" + sym;
}

json hodge_json(const std::string& name, const HodgeTable& t) {
    json h = json::array();
    for (std::size_t p = 0; p <= t.n; ++p) {
        json row = json::array();
        for (std::size_t q = 0; q <= t.n; ++q) row.push_back(t.h[p][q]);
        h.push_back(std::move(row));
    }
    return json{{"schema", 1},
                {"kind", "hodge"},
                {"name", name},
                {"n", t.n},
                {"h", std::move(h)},
                {"betti", t.betti},
                {"flags",
                 json{{"euler", t.euler_ok},
                      {"frolicher", t.frolicher_ok},
                      {"serre", t.serre_ok}}}};
}

std::string hodge_csv(const HodgeTable& t) {
    std::ostringstream os;
    os << "p\\q";
    for (std::size_t q = 0; q <= t.n; ++q) os << "," << q;
    os << "\n";
    for (std::size_t p = 0; p <= t.n; ++p) {
        os << p;
        for (std::size_t q = 0; q <= t.n; ++q) os << "," << t.h[p][q];
        os << "\n";
    }
    return os.str();
}

std::string hodge_text(const std::string& name, const HodgeTable& t) {
    std::ostringstream os;
    os << "hodge diamond of " << name << " (n = " << t.n << ")\n";
    os << "  h^{p,q}, rows p = 0.." << t.n << ", columns q = 0.." << t.n << "\n";
    for (std::size_t p = 0; p <= t.n; ++p) {
        os << "  ";
        for (std::size_t q = 0; q <= t.n; ++q) os << t.h[p][q] << (q == t.n ? "" : " ");
        os << "\n";
    }
    os << "  betti:";
    for (auto b : t.betti) os << " " << b;
    os << "\n  euler=" << (t.euler_ok ? "ok" : "FAIL")
       << " frolicher=" << (t.frolicher_ok ? "ok" : "FAIL")
       << " serre=" << (t.serre_ok ? "ok" : "FAIL") << "\n";
    return os.str();
}

} // namespace

std::string linear_combo(const std::vector<Scalar>& row, const std::string& prefix) {
    std::string out;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k].is_zero()) continue;
        std::string term = coeff_term(row[k], prefix + std::to_string(k + 1));
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string subspace_str(const Subspace& s, const std::string& prefix) {
    if (s.is_zero()) return "0";
    std::string out = "span{";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r > 0) out += ", ";
        out += linear_combo(s.basis().row(r), prefix);
    }
    return out + "}";
}

std::string render_hodge(const std::string& name, const HodgeTable& t,
                         const std::string& format) {
    check_format(format, true);
    if (format == "json") return hodge_json(name, t).dump(2) + "\n";
    if (format == "csv") return hodge_csv(t);
    return hodge_text(name, t);
}

std::vector<std::string> representative_strings(const BigradedComplex& c, std::size_t p,
                                                std::size_t q) {
    const auto& mons = c.basis().monomials(p, q);
    auto monomial_name = [&](const Monomial& m) {
        std::string out;
        for (auto i : m.unbarred) out += (out.empty() ? "" : "^") + ("w" + std::to_string(i + 1));
        for (auto j : m.barred) out += (out.empty() ? "" : "^") + ("cw" + std::to_string(j + 1));
        return out.empty() ? std::string("1") : out;
    };
    std::vector<std::string> out;
    for (const auto& rep : c.representatives(p, q)) {
        std::string s;
        for (std::size_t k = 0; k < rep.size(); ++k) {
            if (rep[k].is_zero()) continue;
            std::string term = coeff_term(rep[k], monomial_name(mons[k]));
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        out.push_back(s.empty() ? "0" : s);
    }
    return out;
}

std::string render_hodge_single(const std::string& name, std::size_t p, std::size_t q,
                                std::size_t value, const std::vector<std::string>& reps,
                                const std::string& format) {
    check_format(format, true);
    if (format == "json")
        return json{{"schema", 1},
                    {"kind", "hodge-single"},
                    {"name", name},
                    {"p", p},
                    {"q", q},
                    {"h", value},
                    {"representatives", reps}}
                   .dump(2) +
               "\n";
    if (format == "csv") {
        std::ostringstream os;
        os << "p,q,h\n" << p << "," << q << "," << value << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "h^{" << p << "," << q << "}(" << name << ") = " << value << "\n";
    for (const auto& r : reps) os << "  class: " << r << "\n";
    return os.str();
}

std::string render_betti(const std::string& name, const std::vector<std::size_t>& betti,
                         const std::string& format) {
    check_format(format, false);
    if (format == "json")
        return json{{"schema", 1}, {"kind", "betti"}, {"name", name}, {"betti", betti}}.dump(2) +
               "\n";
    std::ostringstream os;
    os << "betti numbers of " << name << ":";
    for (auto b : betti) os << " " << b;
    os << "\n";
    return os.str();
}

std::string render_series(const SeriesData& s, const std::string& format) {
    check_format(format, false);
    if (format == "json") {
        json terms_d = json::array(), terms_dj = json::array(), terms_v = json::array();
        for (const auto& t : s.descending.terms)
            terms_d.push_back(json{{"dim", t.dim()}, {"basis", subspace_str(t, "e")}});
        for (const auto& t : s.j.terms)
            terms_dj.push_back(json{{"dim", t.dim()}, {"basis", subspace_str(t, "e")}});
        for (const auto& t : s.annihilators)
            terms_v.push_back(json{{"dim", t.dim()}, {"basis", subspace_str(t, "e")}});
        json steps = json::array();
        for (const auto& st : s.j.steps)
            steps.push_back(
                json{{"is_ideal", st.is_ideal}, {"quotient_abelian", st.quotient_abelian}});
        return json{{"schema", 1},
                    {"kind", "series"},
                    {"name", s.name},
                    {"step", s.descending.step},
                    {"descending", std::move(terms_d)},
                    {"j_series", std::move(terms_dj)},
                    {"annihilators", std::move(terms_v)},
                    {"structure_facts",
                     json{{"steps", std::move(steps)},
                          {"last_term_abelian", s.j.last_term_abelian},
                          {"first_inclusion_strict", s.j.first_inclusion_strict},
                          {"terms_rational", s.j.terms_rational}}}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream os;
    os << "series of " << s.name << " (s = " << s.descending.step << ")\n";
    os << "  descending central series (D):\n";
    for (std::size_t i = 0; i < s.descending.terms.size(); ++i)
        os << "    g^" << i << " = " << subspace_str(s.descending.terms[i], "e") << "\n";
    os << "  J-adapted series:\n";
    for (std::size_t i = 0; i < s.j.terms.size(); ++i)
        os << "    gJ^" << i << " = " << subspace_str(s.j.terms[i], "e") << "\n";
    os << "  structure facts: ";
    for (std::size_t i = 0; i < s.j.steps.size(); ++i)
        os << "[step " << i + 1 << ": ideal=" << (s.j.steps[i].is_ideal ? "ok" : "FAIL")
           << " quotient-abelian=" << (s.j.steps[i].quotient_abelian ? "ok" : "FAIL") << "] ";
    os << "\n    last-term-abelian=" << (s.j.last_term_abelian ? "ok" : "FAIL")
       << " first-inclusion-strict=" << (s.j.first_inclusion_strict ? "ok" : "FAIL")
       << " terms-rational=" << (s.j.terms_rational ? "yes" : "no") << "\n";
    os << "  annihilator series V_i:\n";
    for (std::size_t i = 0; i < s.annihilators.size(); ++i)
        os << "    V_" << i << " = " << subspace_str(s.annihilators[i], "e") << "\n";
    return os.str();
}

namespace {

std::string generator_name(std::size_t id, std::size_t n) {
    return id < n ? "w" + std::to_string(id + 1) : "cw" + std::to_string(id - n + 1);
}

std::string dgenerator_str(const GeneratorDerivatives& gd, std::size_t id) {
    std::string out;
    for (const auto& [ab, c] : gd.d[id]) {
        std::string mono = generator_name(ab.first, gd.n) + "^" + generator_name(ab.second, gd.n);
        std::string term = coeff_term(c, mono);
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string render_basis(const std::string& name, const AdaptedBasis& ab,
                         const GeneratorDerivatives& gd, const std::string& format) {
    check_format(format, false);
    if (format == "json") {
        json forms = json::array();
        for (std::size_t l = 0; l < ab.n; ++l)
            forms.push_back(json{{"index", l + 1},
                                 {"level", ab.levels[l]},
                                 {"form", linear_combo(ab.omegas.row(l), "e")},
                                 {"d", dgenerator_str(gd, l)}});
        json vdims = json::array();
        for (const auto& v : ab.v10) vdims.push_back(v.dim());
        return json{{"schema", 1},
                    {"kind", "basis"},
                    {"name", name},
                    {"n", ab.n},
                    {"field", field_name(ab.field)},
                    {"forms", std::move(forms)},
                    {"v10_dims", std::move(vdims)}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream os;
    os << "adapted (1,0)-basis of " << name << " over " << field_name(ab.field) << "\n";
    for (std::size_t l = 0; l < ab.n; ++l)
        os << "  w" << l + 1 << " (level " << ab.levels[l]
           << ") = " << linear_combo(ab.omegas.row(l), "e") << "\n    d w" << l + 1 << " = "
           << dgenerator_str(gd, l) << "\n";
    os << "  V^{1,0} dims:";
    for (const auto& v : ab.v10) os << " " << v.dim();
    os << "\n";
    return os.str();
}

std::string render_spectral(const LadderReport& r, const std::string& format) {
    check_format(format, false);
    if (format == "json") {
        json steps = json::array();
        for (const auto& st : r.steps)
            steps.push_back(json{{"step", st.step_index},
                                 {"base_cdim", st.base_cdim},
                                 {"fibre_cdim", st.fibre_cdim},
                                 {"degeneration_page", st.degeneration_page},
                                 {"pages_computed", st.pages_computed},
                                 {"page1_formula", st.page1_formula_ok},
                                 {"d1_vanishes", st.d1_vanishes},
                                 {"page2_formula", st.page2_formula_ok},
                                 {"converges", st.convergence_ok}});
        return json{{"schema", 1},
                    {"kind", "spectral"},
                    {"name", r.name},
                    {"rational", r.rational},
                    {"steps", std::move(steps)},
                    {"final", hodge_json(r.name, r.final_table)}}
                   .dump(2) +
               "\n";
    }
    std::ostringstream os;
    os << "filtration spectral sequence report for " << r.name << "\n";
    if (!r.rational)
        os << "  warning: J is not rational; the fibration construction assumes rational "
              "series terms\n";
    if (r.steps.empty()) os << "  trivial: the algebra is abelian (no fibration steps)\n";
    for (const auto& st : r.steps)
        os << "  step i=" << st.step_index << ": base dim_C " << st.base_cdim << ", fibre dim_C "
           << st.fibre_cdim << ", degenerates at page " << st.degeneration_page
           << ", page-1 formula " << (st.page1_formula_ok ? "ok" : "FAIL") << ", page-2 formula "
           << (st.page2_formula_ok ? "ok" : (st.d1_vanishes ? "FAIL" : "n/a (nonzero d1)"))
           << ", converges " << (st.convergence_ok ? "ok" : "FAIL") << "\n";
    os << hodge_text(r.name + " (via spectral ladder)", r.final_table);
    return os.str();
}

std::string render_scan(const ScanReport& r, std::size_t n, const std::string& format) {
    check_format(format, true);
    if (format == "json") {
        json samples = json::array();
        for (const auto& s : r.samples) {
            json o{{"t", s.t.str()},
                   {"status", s.degenerate ? "degenerate"
                                           : (s.integrable ? "ok" : "non-integrable")},
                   {"integrable", s.integrable},
                   {"rational", s.rational}};
            if (s.hodge) {
                json h = json::array();
                for (std::size_t p = 0; p <= n; ++p) {
                    json row = json::array();
                    for (std::size_t q = 0; q <= n; ++q) row.push_back(s.hodge->h[p][q]);
                    h.push_back(std::move(row));
                }
                o["h"] = std::move(h);
            }
            if (s.degenerate) o["reason"] = s.reason;
            samples.push_back(std::move(o));
        }
        json constancy = json::array();
        for (const auto& [pq, idxs] : r.constancy) {
            json ts = json::array();
            for (auto i : idxs) ts.push_back(r.samples[i].t.str());
            constancy.push_back(json{{"p", pq.first}, {"q", pq.second}, {"t", std::move(ts)}});
        }
        return json{{"schema", 1},
                    {"kind", "scan"},
                    {"rule", r.family_rule},
                    {"samples", std::move(samples)},
                    {"constancy", std::move(constancy)}}
                   .dump(2) +
               "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "t,status,integrable,rational";
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = 0; q <= n; ++q) os << ",h" << p << q;
        os << "\n";
        for (const auto& s : r.samples) {
            os << s.t.str() << ","
               << (s.degenerate ? "degenerate" : (s.integrable ? "ok" : "non-integrable")) << ","
               << (s.integrable ? "true" : "false") << "," << (s.rational ? "true" : "false");
            for (std::size_t p = 0; p <= n; ++p)
                for (std::size_t q = 0; q <= n; ++q) {
                    os << ",";
                    if (s.hodge) os << s.hodge->h[p][q];
                }
            os << "\n";
        }
        return os.str();
    }
    std::ostringstream os;
    os << "deformation scan: " << r.family_rule << "\n";
    for (const auto& s : r.samples) {
        os << "  t = " << s.t.str() << ": ";
        if (s.degenerate) {
            os << "degenerate (" << s.reason << ")\n";
            continue;
        }
        os << (s.integrable ? "integrable" : "NOT integrable") << ", "
           << (s.rational ? "rational" : "non-rational");
        if (s.hodge) {
            os << ", h =";
            for (std::size_t p = 0; p <= n; ++p)
                for (std::size_t q = 0; q <= n; ++q) os << " " << s.hodge->h[p][q];
        }
        os << "\n";
    }
    os << "  constancy sets (sampled t with h^{p,q}(t) = h^{p,q}(0)):\n";
    for (const auto& [pq, idxs] : r.constancy) {
        os << "    (" << pq.first << "," << pq.second << "): {";
        for (std::size_t k = 0; k < idxs.size(); ++k)
            os << (k ? ", " : "") << r.samples[idxs[k]].t.str();
        os << "}\n";
    }
    return os.str();
}

std::string render_classify(const ClassifyData& c, const std::string& format) {
    check_format(format, false);
    if (format == "json")
        return json{{"schema", 1},
                    {"kind", "classify"},
                    {"name", c.name},
                    {"integrable", c.integrable},
                    {"rational", c.rational},
                    {"abelian", c.abelian},
                    {"parallelizable", c.parallelizable}}
                   .dump(2) +
               "\n";
    std::ostringstream os;
    os << "classification of " << c.name << ":\n"
       << "  integrable:      " << (c.integrable ? "yes" : "no") << "\n"
       << "  rational:        " << (c.rational ? "yes" : "no") << "\n"
       << "  abelian:         " << (c.abelian ? "yes" : "no") << "\n"
       << "  parallelizable:  " << (c.parallelizable ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace nilcoh
