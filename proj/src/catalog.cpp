#include "nilcoh/catalog.hpp"

namespace nilcoh {

namespace {

ExactMatrix block_j(std::size_t n) {
    // J e_{2k+1} = e_{2k+2}, J e_{2k+2} = −e_{2k+1}
    ExactMatrix j(2 * n, 2 * n, FieldTag::Q);
    for (std::size_t k = 0; k < n; ++k) {
        j.set(2 * k + 1, 2 * k, Scalar(1));
        j.set(2 * k, 2 * k + 1, Scalar(-1));
    }
    return j;
}

AlgebraDocument torus_doc(std::size_t n) {
    AlgebraDocument doc;
    doc.name = "torus-" + std::to_string(n);
    doc.dimension = 2 * n;
    doc.j_matrix = block_j(n);
    return doc;
}

AlgebraDocument iwasawa_doc() {
    AlgebraDocument doc;
    doc.name = "iwasawa";
    doc.dimension = 6;
    // de5 = e1∧e3 − e2∧e4, de6 = e1∧e4 + e2∧e3
    doc.equations = {
        StructureEquation{5, {{1, 3, Scalar(1)}, {2, 4, Scalar(-1)}}},
        StructureEquation{6, {{1, 4, Scalar(1)}, {2, 3, Scalar(1)}}},
    };
    // omega1 = e1 + i e2, omega2 = e3 + i e4, omega3 = e5 + i e6
    std::vector<std::vector<Scalar>> span(3, std::vector<Scalar>(6));
    for (std::size_t k = 0; k < 3; ++k) {
        span[k][2 * k] = Scalar(1);
        span[k][2 * k + 1] = Scalar::i();
    }
    doc.holomorphic_span = ExactMatrix::from_rows(span, FieldTag::QI);
    FamilySpec fam;
    fam.rule = {3, 1}; // omega3 -> omega3 + t·conj(omega1)
    doc.family = fam;
    return doc;
}

AlgebraDocument kodaira_thurston_doc() {
    AlgebraDocument doc;
    doc.name = "kodaira-thurston";
    doc.dimension = 4;
    doc.equations = {StructureEquation{3, {{1, 2, Scalar(1)}}}}; // de3 = e1∧e2
    doc.j_matrix = block_j(2);
    return doc;
}

} // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"torus-1", "torus-2", "torus-3", "iwasawa",
                                                   "kodaira-thurston"};
    return names;
}

bool is_catalog_name(const std::string& name) {
    for (const auto& n : catalog_names())
        if (n == name) return true;
    return false;
}

AlgebraDocument catalog_document(const std::string& name) {
    if (name == "torus-1") return torus_doc(1);
    if (name == "torus-2") return torus_doc(2);
    if (name == "torus-3") return torus_doc(3);
    if (name == "iwasawa") return iwasawa_doc();
    if (name == "kodaira-thurston") return kodaira_thurston_doc();
    fail_validation("unknown catalog entry '" + name + "'");
}

} // namespace nilcoh
