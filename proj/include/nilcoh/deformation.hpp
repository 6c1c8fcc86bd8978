#pragma once

#include <optional>

#include "nilcoh/dolbeault.hpp"

namespace nilcoh {

// One-parameter family of (almost-)complex structures given by a
// parameter-linear deformation of the (1,0)-span: generator l is
// const_rows[l] + t·t_rows[l] over the complexified dual. At t = 0 the
// family reproduces its base structure bit-exactly.
struct ComplexFamily {
    ComplexStructure base;
    AdaptedBasis basis;
    ExactMatrix const_rows; // n × 2n
    ExactMatrix t_rows;     // n × 2n
    std::string rule;       // display form, e.g. "omega3 -> omega3 + t*conj(omega1)"
};

// The canonical family: deform the last adapted form by t·ω̄₁. Requires
// n ≥ 2 (a closed ω₁ distinct from the deformed form must exist).
ComplexFamily general_deformation(const ComplexStructure& J);

// Family from explicit indices: replace ω_{deform} by ω_{deform} + t·ω̄_{conj}
// (1-based indices into the adapted basis).
ComplexFamily family_from_rule(const ComplexStructure& J, std::size_t deform_index,
                               std::size_t conjugate_index);

// Family from explicit parameter-linear rows.
ComplexFamily family_from_rows(const ComplexStructure& J, const ExactMatrix& const_rows,
                               const ExactMatrix& t_rows);

// Instantiate at an exact parameter: build the deformed span, check
// transversality (span ⊕ conjugate span = everything), and recover the
// unique real J_t with the span as +i eigenspace. Integrability is checked
// by callers, not assumed here.
ComplexStructure instantiate(const ComplexFamily& fam, const Scalar& t);

struct ScanSample {
    Scalar t;
    bool degenerate = false;    // transversality failed; reason carries the message
    std::string reason;
    bool integrable = false;
    bool rational = false;
    std::optional<HodgeTable> hodge; // absent when degenerate or non-integrable
};

struct ScanReport {
    std::string family_rule;
    std::vector<ScanSample> samples; // sample at t = 0 always present (index 0 ordering preserved otherwise)
    // constancy[(p,q)] = indices of samples with h^{p,q}(t) = h^{p,q}(0)
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> constancy;
};

// Per sample: instantiate, classify, compute the diamond. Degenerate
// parameters are recorded and skipped, never fatal.
ScanReport scan(const ComplexFamily& fam, std::vector<Scalar> samples,
                std::size_t threads = 1);

} // namespace nilcoh
