#pragma once

#include <optional>

#include "nilcoh/lie_algebra.hpp"

namespace nilcoh {

// Invariant almost-complex structure J on g: a real endomorphism with
// J² = −Id. Integrability is *not* required at construction; operations
// whose justification needs N ≡ 0 enforce it themselves.
class ComplexStructure {
public:
    static ComplexStructure make(LieAlgebra g, ExactMatrix j, std::string name);

    const LieAlgebra& algebra() const { return algebra_; }
    const ExactMatrix& matrix() const { return j_; }
    const std::string& name() const { return name_; }
    std::size_t dim() const { return algebra_.dim(); }

    std::vector<Scalar> apply_j(const std::vector<Scalar>& x) const;

    // N(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] − [JX,JY].
    std::vector<Scalar> nijenhuis(const std::vector<Scalar>& x,
                                  const std::vector<Scalar>& y) const;

    // First basis pair with N(e_i,e_j) ≠ 0, if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonintegrable_pair() const;
    bool is_integrable() const { return !first_nonintegrable_pair().has_value(); }

    bool is_rational() const;        // J(g_Q) ⊆ g_Q: all entries in Q
    bool is_abelian() const;         // [JX,JY] = [X,Y]
    bool is_parallelizable() const;  // [JX,Y] = J[X,Y]: J is multiplication by i

    // Throws a validation error naming the violating pair when N ≠ 0.
    void require_integrable(const std::string& op) const;

private:
    ComplexStructure(LieAlgebra g, ExactMatrix j, std::string name)
        : algebra_(std::move(g)), j_(std::move(j)), name_(std::move(name)) {}

    LieAlgebra algebra_;
    ExactMatrix j_;
    std::string name_;
};

// Series g⁰_J ⊃ g¹_J ⊇ … ⊇ g^{s+1}_J = 0 with g^i_J = g^i + J·g^i, together
// with the recomputed conclusions it is proved to satisfy. Any failed
// conclusion is an internal-inconsistency error, since each is a theorem.
struct JSeriesStep {
    bool is_ideal = false;         // g^i_J ideal of g^{i−1}_J
    bool quotient_abelian = false; // g^{i−1}_J / g^i_J abelian
};

struct JSeries {
    std::vector<Subspace> terms;
    std::vector<JSeriesStep> steps;    // steps[i−1] reports the pair (i−1, i)
    bool last_term_abelian = false;    // bracket vanishes on g^s_J
    bool first_inclusion_strict = false;
    bool terms_rational = false;       // meaningful when J is rational
};

JSeries j_series(const ComplexStructure& J);

// V_i = {α ∈ g* : dα ∈ Λ²V_{i−1}} computed inductively, asserted equal to
// the annihilator (g^i)° at every index; returns V_0 ⊆ … ⊆ V_{s+1} = g*.
std::vector<Subspace> annihilator_series(const ComplexStructure& J);

// Ordered (1,0)-coframe compatible with the series: forms at level i span a
// complement of V_{i−1}^{1,0} in V_i^{1,0} = (g^i_J)° ∩ λ^{1,0}, and dω_l
// lies in the ideal generated by strictly earlier-level forms.
struct AdaptedBasis {
    std::size_t n = 0;
    FieldTag field = FieldTag::QI;       // complexified coefficient field
    ExactMatrix omegas;                  // n × 2n rows over the complexified dual
    std::vector<std::size_t> levels;     // levels[l] ∈ {1,…,s+1}, nondecreasing
    std::vector<Subspace> v10;           // V_i^{1,0} for i = 0,…,s+1
};

AdaptedBasis adapted_basis(const ComplexStructure& J);

// d of every coframe generator σ_a (ids 0…n−1 the ω's, n…2n−1 their
// conjugates) as coefficients over σ-pair monomials. Works for any
// almost-complex J; integrability is equivalent to the absence of
// (0,2)-pairs in dσ_a for unbarred a.
struct GeneratorDerivatives {
    std::size_t n = 0;
    FieldTag field = FieldTag::QI;
    ExactMatrix omegas; // the (1,0) rows used
    // d sigma[id] : (a,b) with a < b over generator ids → coefficient
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> d;
};

GeneratorDerivatives generator_derivatives(const LieAlgebra& g, const ExactMatrix& omega_rows,
                                           FieldTag field);

// Bidegree of a generator pair: (#unbarred, #barred).
std::pair<std::size_t, std::size_t> pair_bidegree(std::size_t n,
                                                  std::pair<std::size_t, std::size_t> ab);

// (1,0)-eigencoframe of J: right kernel basis of (Jᵀ − i·Id), n rows.
ExactMatrix holomorphic_coframe(const ComplexStructure& J, FieldTag field);

// Independent integrability test: the (0,2) component of d on λ^{1,0}
// vanishes. Must agree with the Nijenhuis route on every J.
bool dbar_02_vanishes(const ComplexStructure& J);

// Recover the unique real J whose (1,0)-covectors are the row space of
// `span` (n rows over the complexified dual). A span meeting its conjugate
// is rejected with a degenerate-parameter error.
ComplexStructure structure_from_span(const LieAlgebra& g, const ExactMatrix& span,
                                     const std::string& name);

} // namespace nilcoh
