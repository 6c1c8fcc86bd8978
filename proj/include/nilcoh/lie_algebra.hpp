#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcoh/subspace.hpp"

namespace nilcoh {

// Lower central series g = g⁰ ⊇ g¹ = [g,g] ⊇ g² = [g¹,g] ⊇ … ⊇ g^{s+1} = 0.
struct DescendingSeries {
    std::vector<Subspace> terms; // terms[0] = g, back() = 0
    std::size_t step = 0;        // s: the last nonzero term is g^s
};

struct JacobiViolation {
    std::size_t i, j, k;        // basis triple, i < j < k
    std::vector<Scalar> value;  // the nonzero cyclic sum
};

// Nilpotent Lie algebra with rational structure constants in a distinguished
// basis {e_1,…,e_2n}. The distinguished basis *is* the rational structure:
// rationality of subspaces is always relative to it. Construction validates
// the Jacobi identity and nilpotency; a value of this type cannot exist
// without them.
class LieAlgebra {
public:
    // [e_i, e_j] for i < j as a dense coefficient vector over the basis.
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>>;

    static LieAlgebra make(std::size_t dim, BracketTable brackets, std::string name);

    static std::optional<JacobiViolation> jacobi_violation(std::size_t dim,
                                                           const BracketTable& brackets);

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const BracketTable& brackets() const { return brackets_; }

    std::vector<Scalar> bracket_basis(std::size_t i, std::size_t j) const; // any i, j
    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    const DescendingSeries& lower_central_series() const { return series_; }
    std::size_t step() const { return series_.step; }

    Subspace center() const;

    bool is_abelian_algebra() const { return brackets_.empty(); }

    // True iff h admits an all-rational basis in the distinguished basis,
    // i.e. the RREF of h's basis has entries in Q.
    bool is_rational_subspace(const Subspace& h) const;

    // g/ideal in the complement coordinates of quotient_coordinates.
    // Requires [g, ideal] ⊆ ideal; the error names a violating pair.
    std::pair<LieAlgebra, QuotientMap> quotient(const Subspace& ideal,
                                                const std::string& name) const;

    // Restriction to a subalgebra, in the coordinates of its RREF basis.
    // Requires bracket-closure; the resulting constants must be rational.
    std::pair<LieAlgebra, ExactMatrix> subalgebra(const Subspace& sub,
                                                  const std::string& name) const;

private:
    LieAlgebra() = default;

    std::size_t dim_ = 0;
    std::string name_;
    BracketTable brackets_;
    DescendingSeries series_;
};

// Exterior derivative of a covector α as a 2-form in e-coordinates, using
// the convention dα(X,Y) = −α([X,Y]): coefficient of e^i∧e^j (i<j) is
// −α([e_i,e_j]).
std::map<std::pair<std::size_t, std::size_t>, Scalar> d_covector(const LieAlgebra& g,
                                                                 const std::vector<Scalar>& alpha);

} // namespace nilcoh
