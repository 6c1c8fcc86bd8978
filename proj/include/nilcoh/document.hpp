#pragma once

#include <optional>

#include "nilcoh/deformation.hpp"

namespace nilcoh {

// Input document: structure equations on forms (de^k = Σ c · e^i ∧ e^j,
// i < j, 1-based), a complex structure as a matrix or a holomorphic span,
// and an optional deformation family. Concrete syntax is a restricted JSON
// profile: objects, arrays, strings and integers only, with every scalar a
// string in the Scalar grammar.
struct StructureTerm {
    std::size_t i = 0, j = 0; // 1-based, i < j
    Scalar coeff;
};

struct StructureEquation {
    std::size_t form = 0; // 1-based k in de^k
    std::vector<StructureTerm> terms;
};

struct FamilySpec {
    // Either an index rule (replace ω_d by ω_d + t·ω̄_c) …
    std::optional<std::pair<std::size_t, std::size_t>> rule; // (deform, conjugate), 1-based
    // … or explicit parameter-linear spans.
    std::optional<std::pair<ExactMatrix, ExactMatrix>> spans; // (const rows, t rows)
};

struct AlgebraDocument {
    long schema = 1;
    std::string name;
    std::size_t dimension = 0;
    std::vector<StructureEquation> equations;
    std::optional<ExactMatrix> j_matrix;         // 2n × 2n
    std::optional<ExactMatrix> holomorphic_span; // n × 2n over the complexified dual
    std::optional<FamilySpec> family;
};

// Strict parse: unknown fields, non-profile JSON values, range violations
// and i ≥ j terms are errors with position information.
AlgebraDocument parse_document(const std::string& text);

// Canonical serialization; parse ∘ emit is the identity on canonical
// documents, byte-exactly.
std::string emit_document(const AlgebraDocument& doc);

LieAlgebra document_algebra(const AlgebraDocument& doc);
ComplexStructure document_structure(const AlgebraDocument& doc);
// The document's family when present, otherwise the canonical deformation.
ComplexFamily document_family(const AlgebraDocument& doc);

} // namespace nilcoh
