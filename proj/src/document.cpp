#include "nilcoh/document.hpp"

#include <set>

#include <json.hpp>

namespace nilcoh {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void doc_fail(const std::string& msg) { fail_validation("document: " + msg); }

void check_profile(const json& v, const std::string& path) {
    switch (v.type()) {
    case json::value_t::object:
        for (const auto& [k, val] : v.items()) check_profile(val, path + "/" + k);
        return;
    case json::value_t::array: {
        std::size_t i = 0;
        for (const auto& val : v) check_profile(val, path + "/" + std::to_string(i++));
        return;
    }
    case json::value_t::string:
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
        return;
    default:
        doc_fail("value at " + path +
                 " is outside the restricted profile (objects, arrays, strings, integers)");
    }
}

void check_keys(const json& o, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : o.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) doc_fail("unknown field '" + k + "' in " + where);
    }
}

const json& get(const json& o, const std::string& where, const char* key) {
    auto it = o.find(key);
    if (it == o.end()) doc_fail("missing field '" + std::string(key) + "' in " + where);
    return *it;
}

long get_int(const json& o, const std::string& where, const char* key) {
    const json& v = get(o, where, key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        doc_fail("field '" + std::string(key) + "' in " + where + " must be an integer");
    return v.get<long>();
}

std::string get_str(const json& o, const std::string& where, const char* key) {
    const json& v = get(o, where, key);
    if (!v.is_string()) doc_fail("field '" + std::string(key) + "' in " + where +
                                 " must be a string");
    return v.get<std::string>();
}

Scalar get_scalar(const json& v, const std::string& where) {
    if (!v.is_string()) doc_fail("scalar in " + where + " must be a string");
    return Scalar::parse(v.get<std::string>());
}

ExactMatrix matrix_from_json(const json& rows, std::size_t nrows, std::size_t ncols,
                             const std::string& where) {
    if (!rows.is_array() || rows.size() != nrows)
        doc_fail(where + " must be an array of " + std::to_string(nrows) + " rows");
    std::vector<std::vector<Scalar>> data;
    FieldTag field = FieldTag::Q;
    for (std::size_t r = 0; r < nrows; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != ncols)
            doc_fail(where + " row " + std::to_string(r + 1) + " must have " +
                     std::to_string(ncols) + " entries");
        std::vector<Scalar> out;
        for (std::size_t c = 0; c < ncols; ++c) {
            out.push_back(get_scalar(row[c], where));
            field = join(field, out.back().field());
        }
        data.push_back(std::move(out));
    }
    return ExactMatrix::from_rows(data, field);
}

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

AlgebraDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        doc_fail("syntax error at line " + std::to_string(line) + ", column " +
                 std::to_string(col));
    }
    if (!root.is_object()) doc_fail("top level must be an object");
    check_profile(root, "");
    check_keys(root, "document",
               {"schema", "name", "dimension", "structure_equations", "complex_structure",
                "family"});

    AlgebraDocument doc;
    doc.schema = get_int(root, "document", "schema");
    if (doc.schema != 1) doc_fail("unsupported schema version " + std::to_string(doc.schema));
    doc.name = get_str(root, "document", "name");
    if (doc.name.empty()) doc_fail("name must be nonempty");
    long dim = get_int(root, "document", "dimension");
    if (dim <= 0 || dim % 2 != 0) doc_fail("dimension must be a positive even integer");
    doc.dimension = static_cast<std::size_t>(dim);
    const std::size_t d = doc.dimension;
    const std::size_t n = d / 2;

    const json& eqs = get(root, "document", "structure_equations");
    if (!eqs.is_array()) doc_fail("structure_equations must be an array");
    std::vector<bool> form_seen(d + 1, false);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        const std::string where = "structure_equations[" + std::to_string(e) + "]";
        const json& eq = eqs[e];
        if (!eq.is_object()) doc_fail(where + " must be an object");
        check_keys(eq, where, {"form", "terms"});
        StructureEquation out;
        long form = get_int(eq, where, "form");
        if (form < 1 || form > static_cast<long>(d))
            doc_fail(where + ": form index out of range");
        if (form_seen[static_cast<std::size_t>(form)])
            doc_fail(where + ": duplicate equation for form " + std::to_string(form));
        form_seen[static_cast<std::size_t>(form)] = true;
        out.form = static_cast<std::size_t>(form);
        const json& terms = get(eq, where, "terms");
        if (!terms.is_array()) doc_fail(where + ".terms must be an array");
        std::set<std::pair<long, long>> seen;
        for (std::size_t ti = 0; ti < terms.size(); ++ti) {
            const std::string twhere = where + ".terms[" + std::to_string(ti) + "]";
            const json& term = terms[ti];
            if (!term.is_object()) doc_fail(twhere + " must be an object");
            check_keys(term, twhere, {"i", "j", "c"});
            long i = get_int(term, twhere, "i");
            long j = get_int(term, twhere, "j");
            if (i < 1 || j < 1 || i > static_cast<long>(d) || j > static_cast<long>(d))
                doc_fail(twhere + ": index out of range");
            if (i >= j) doc_fail(twhere + ": requires i < j (got i=" + std::to_string(i) +
                                 ", j=" + std::to_string(j) + ")");
            if (!seen.insert({i, j}).second) doc_fail(twhere + ": duplicate (i,j) pair");
            Scalar c = get_scalar(get(term, twhere, "c"), twhere);
            if (!c.is_rational()) doc_fail(twhere + ": structure coefficients must be rational");
            out.terms.push_back(StructureTerm{static_cast<std::size_t>(i),
                                              static_cast<std::size_t>(j), std::move(c)});
        }
        doc.equations.push_back(std::move(out));
    }

    const json& cs = get(root, "document", "complex_structure");
    if (!cs.is_object()) doc_fail("complex_structure must be an object");
    check_keys(cs, "complex_structure", {"matrix", "holomorphic_span"});
    bool has_matrix = cs.contains("matrix");
    bool has_span = cs.contains("holomorphic_span");
    if (has_matrix == has_span)
        doc_fail("complex_structure needs exactly one of 'matrix' or 'holomorphic_span'");
    if (has_matrix)
        doc.j_matrix = matrix_from_json(cs["matrix"], d, d, "complex_structure.matrix");
    else
        doc.holomorphic_span =
            matrix_from_json(cs["holomorphic_span"], n, d, "complex_structure.holomorphic_span");

    if (root.contains("family")) {
        const json& fam = root["family"];
        if (!fam.is_object()) doc_fail("family must be an object");
        check_keys(fam, "family", {"deform_index", "conjugate_index", "spans_with_parameter"});
        FamilySpec spec;
        if (fam.contains("spans_with_parameter")) {
            if (fam.contains("deform_index") || fam.contains("conjugate_index"))
                doc_fail("family: give either an index rule or explicit spans, not both");
            const json& spans = fam["spans_with_parameter"];
            if (!spans.is_array() || spans.size() != n)
                doc_fail("family.spans_with_parameter must have n rows");
            std::vector<std::vector<Scalar>> crows, trows;
            FieldTag field = FieldTag::QI;
            for (std::size_t r = 0; r < n; ++r) {
                const json& row = spans[r];
                if (!row.is_array() || row.size() != d)
                    doc_fail("family.spans_with_parameter row " + std::to_string(r + 1) +
                             " must have 2n entries");
                std::vector<Scalar> cr, tr;
                for (std::size_t c = 0; c < d; ++c) {
                    const json& entry = row[c];
                    if (!entry.is_array() || entry.size() != 2)
                        doc_fail("family.spans_with_parameter entries must be [const, t] pairs");
                    cr.push_back(get_scalar(entry[0], "family"));
                    tr.push_back(get_scalar(entry[1], "family"));
                    field = join(field, join(cr.back().field(), tr.back().field()));
                }
                crows.push_back(std::move(cr));
                trows.push_back(std::move(tr));
            }
            spec.spans = {ExactMatrix::from_rows(crows, field),
                          ExactMatrix::from_rows(trows, field)};
        } else {
            long di = get_int(fam, "family", "deform_index");
            long ci = get_int(fam, "family", "conjugate_index");
            if (di < 1 || di > static_cast<long>(n) || ci < 1 || ci > static_cast<long>(n))
                doc_fail("family: indices out of range");
            spec.rule = {static_cast<std::size_t>(di), static_cast<std::size_t>(ci)};
        }
        doc.family = std::move(spec);
    }
    return doc;
}

std::string emit_document(const AlgebraDocument& doc) {
    json root = json::object();
    root["schema"] = doc.schema;
    root["name"] = doc.name;
    root["dimension"] = doc.dimension;
    json eqs = json::array();
    for (const auto& eq : doc.equations) {
        json terms = json::array();
        for (const auto& t : eq.terms)
            terms.push_back(json{{"i", t.i}, {"j", t.j}, {"c", t.coeff.str()}});
        eqs.push_back(json{{"form", eq.form}, {"terms", std::move(terms)}});
    }
    root["structure_equations"] = std::move(eqs);
    json cs = json::object();
    if (doc.j_matrix) cs["matrix"] = matrix_to_json(*doc.j_matrix);
    else if (doc.holomorphic_span) cs["holomorphic_span"] = matrix_to_json(*doc.holomorphic_span);
    root["complex_structure"] = std::move(cs);
    if (doc.family) {
        json fam = json::object();
        if (doc.family->rule) {
            fam["deform_index"] = doc.family->rule->first;
            fam["conjugate_index"] = doc.family->rule->second;
        } else if (doc.family->spans) {
            const auto& [crows, trows] = *doc.family->spans;
            json spans = json::array();
            for (std::size_t r = 0; r < crows.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < crows.cols(); ++c)
                    row.push_back(json::array({crows.at(r, c).str(), trows.at(r, c).str()}));
                spans.push_back(std::move(row));
            }
            fam["spans_with_parameter"] = std::move(spans);
        }
        root["family"] = std::move(fam);
    }
    return root.dump(2) + "\n";
}

LieAlgebra document_algebra(const AlgebraDocument& doc) {
    const std::size_t d = doc.dimension;
    LieAlgebra::BracketTable table;
    // de^k = Σ A e^i∧e^j with the convention dα(X,Y) = −α([X,Y]) gives
    // c^k_{ij} = −A^k_{ij}.
    for (const auto& eq : doc.equations)
        for (const auto& term : eq.terms) {
            auto& v = table[{term.i - 1, term.j - 1}];
            if (v.empty()) v.assign(d, Scalar());
            v[eq.form - 1] -= term.coeff;
        }
    return LieAlgebra::make(d, std::move(table), doc.name);
}

ComplexStructure document_structure(const AlgebraDocument& doc) {
    LieAlgebra g = document_algebra(doc);
    if (doc.j_matrix) return ComplexStructure::make(std::move(g), *doc.j_matrix, doc.name);
    return structure_from_span(g, *doc.holomorphic_span, doc.name);
}

ComplexFamily document_family(const AlgebraDocument& doc) {
    ComplexStructure J = document_structure(doc);
    if (doc.family) {
        if (doc.family->rule)
            return family_from_rule(J, doc.family->rule->first, doc.family->rule->second);
        if (doc.family->spans)
            return family_from_rows(J, doc.family->spans->first, doc.family->spans->second);
    }
    return general_deformation(J);
}

} // namespace nilcoh
